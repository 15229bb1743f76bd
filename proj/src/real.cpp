#include "primroot/real.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

std::int64_t bit_length(const mpz_t v) {
  return mpz_sgn(v) == 0 ? 0 : static_cast<std::int64_t>(mpz_sizeinbase(v, 2));
}

std::int64_t bit_length(const mpz_class& v) { return bit_length(v.get_mpz_t()); }

constexpr std::int64_t kMaxDecimalExponent = 1'000'000;

}  // namespace

int check_precision(int precision) {
  if (precision < Real::kMinPrecision) {
    throw Error(ErrorKind::InvalidArgument,
                "precision must be at least " + std::to_string(Real::kMinPrecision) + " bits, got " +
                    std::to_string(precision));
  }
  return precision;
}

int round_trip_digits(int precision) {
  return static_cast<int>(std::ceil(precision * 0.30102999566398120)) + 2;
}

Real::Real() : Real(kDefaultPrecision) {}

Real::Real(int precision) : mant_(0), exp_(0), prec_(check_precision(precision)) {}

Real Real::round(mpz_class value, std::int64_t exp, int prec, bool sticky) {
  mpz_ptr m = value.get_mpz_t();
  const int sgn = mpz_sgn(m);
  if (sgn == 0) {
    assert(!sticky);
    return Real(mpz_class(0), 0, prec);
  }
  mpz_abs(m, m);
  const std::int64_t bits = bit_length(m);
  if (bits > prec) {
    const auto shift = static_cast<mp_bitcnt_t>(bits - prec);
    const bool round_bit = mpz_tstbit(m, shift - 1) != 0;
    const bool below = sticky || (shift >= 2 && mpz_scan1(m, 0) < shift - 1);
    mpz_fdiv_q_2exp(m, m, shift);
    exp += static_cast<std::int64_t>(shift);
    if (round_bit && (below || mpz_odd_p(m))) {
      mpz_add_ui(m, m, 1);
      if (bit_length(m) > prec) {
        mpz_fdiv_q_2exp(m, m, 1);
        exp += 1;
      }
    }
  } else {
    // Exact value representable: widen to the full mantissa width.
    assert(!sticky);
    const auto shift = static_cast<mp_bitcnt_t>(prec - bits);
    mpz_mul_2exp(m, m, shift);
    exp -= static_cast<std::int64_t>(shift);
  }
  if (sgn < 0) mpz_neg(m, m);
  return Real(std::move(value), exp, prec);
}

Real Real::from_int(long value, int precision) {
  return round(mpz_class(value), 0, check_precision(precision));
}

Real Real::from_double(double value, int precision) {
  check_precision(precision);
  if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "non-finite double");
  if (value == 0.0) return Real(precision);
  int e = 0;
  const double frac = std::frexp(value, &e);
  // 53-bit integer mantissa, exact.
  const auto scaled = static_cast<long long>(std::ldexp(frac, 53));
  mpz_class m;
  mpz_set_si(m.get_mpz_t(), static_cast<long>(scaled));
  return round(std::move(m), e - 53, precision);
}

Real Real::from_scaled(const mpz_class& mantissa, std::int64_t exponent, int precision) {
  return round(mantissa, exponent, check_precision(precision));
}

Real Real::ratio(long num, long den, int precision) {
  return from_int(num, precision) / from_int(den, precision);
}

Real Real::pow2(std::int64_t e, int precision) {
  return round(mpz_class(1), e, check_precision(precision));
}

Real Real::parse(std::string_view text, int precision) {
  check_precision(precision);
  const std::string original(text);
  auto fail = [&]() -> Error {
    return Error(ErrorKind::ParseError, "not a decimal number: '" + original + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::int64_t frac_len = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      any_digit = true;
      if (seen_point) ++frac_len;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw fail();
  std::int64_t dec_exp = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) throw fail();
    for (; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch < '0' || ch > '9') throw fail();
      dec_exp = dec_exp * 10 + (ch - '0');
      if (dec_exp > kMaxDecimalExponent) throw Error(ErrorKind::ParseError, "exponent out of range");
    }
    if (exp_negative) dec_exp = -dec_exp;
  }
  if (i != text.size()) throw fail();
  dec_exp -= frac_len;

  mpz_class n(digits, 10);
  if (n == 0) return Real(precision);
  if (negative) n = -n;
  if (dec_exp >= 0) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(dec_exp));
    return round(n * p10, 0, precision);
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-dec_exp));
  const std::int64_t shift =
      std::max<std::int64_t>(0, precision + 3 + bit_length(den) - bit_length(n));
  mpz_class num = n;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return round(std::move(q), -shift, precision, r != 0);
}

mpz_class Real::mantissa() const {
  mpz_class m;
  mpz_abs(m.get_mpz_t(), mant_.get_mpz_t());
  return m;
}

std::int64_t Real::magnitude_exponent() const {
  if (is_zero()) return std::numeric_limits<std::int64_t>::min();
  return exp_ + bit_length(mant_);
}

Real Real::with_precision(int precision) const {
  if (precision == prec_) return *this;
  return round(mant_, exp_, check_precision(precision));
}

double Real::to_double() const {
  if (is_zero()) return 0.0;
  // Keep 64 leading bits so mpz_get_d never sees a huge integer.
  mpz_class top = mant_;
  std::int64_t e = exp_;
  const std::int64_t bits = bit_length(mant_);
  if (bits > 64) {
    mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 64));
    e += bits - 64;
  }
  if (e > std::numeric_limits<int>::max()) return sign() * std::numeric_limits<double>::infinity();
  if (e < std::numeric_limits<int>::min()) return 0.0;
  return std::ldexp(mpz_get_d(top.get_mpz_t()), static_cast<int>(e));
}

std::string Real::to_string() const {
  if (is_zero()) return "0";
  // Exact decimal expansion: |m| * 2^e = N / 10^scale.
  mpz_class n = mantissa();
  std::int64_t scale = 0;
  if (exp_ >= 0) {
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
  } else {
    mpz_class p5;
    mpz_ui_pow_ui(p5.get_mpz_t(), 5, static_cast<unsigned long>(-exp_));
    n *= p5;
    scale = -exp_;
  }
  std::string digits = n.get_str(10);
  // Number of digits before the decimal point.
  std::int64_t point = static_cast<std::int64_t>(digits.size()) - scale;

  const auto keep = static_cast<std::size_t>(round_trip_digits(prec_));
  if (digits.size() > keep) {
    const char first_dropped = digits[keep];
    const bool rest_nonzero =
        digits.find_first_not_of('0', keep + 1) != std::string::npos;
    bool up = first_dropped > '5' || (first_dropped == '5' && rest_nonzero) ||
              (first_dropped == '5' && !rest_nonzero && (digits[keep - 1] - '0') % 2 == 1);
    digits.resize(keep);
    if (up) {
      std::size_t pos = keep;
      while (pos > 0) {
        --pos;
        if (digits[pos] == '9') {
          digits[pos] = '0';
        } else {
          ++digits[pos];
          break;
        }
        if (pos == 0) {
          digits.insert(digits.begin(), '1');
          digits.pop_back();
          ++point;
        }
      }
    }
  }
  const auto last = digits.find_last_not_of('0');
  digits.resize(last + 1);

  std::string out = sign() < 0 ? "-" : "";
  const auto len = static_cast<std::int64_t>(digits.size());
  if (point <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-point), '0');
    out += digits;
  } else if (point >= len) {
    out += digits;
    out.append(static_cast<std::size_t>(point - len), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(point));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(point));
  }
  return out;
}

Real Real::operator-() const {
  mpz_class m;
  mpz_neg(m.get_mpz_t(), mant_.get_mpz_t());
  return Real(std::move(m), exp_, prec_);
}

Real Real::ldexp(std::int64_t shift) const {
  if (is_zero()) return *this;
  return Real(mant_, exp_ + shift, prec_);
}

Real Real::add(const Real& a, const Real& b, bool negate_b) {
  const int prec = std::max(a.prec_, b.prec_);
  if (b.is_zero()) return a.with_precision(prec);
  if (a.is_zero()) return negate_b ? (-b).with_precision(prec) : b.with_precision(prec);

  // If one operand lies entirely below a quarter ulp of the other, the
  // rounded sum is the larger operand.
  const std::int64_t top_a = a.magnitude_exponent();
  const std::int64_t top_b = b.magnitude_exponent();
  if (top_a - top_b > prec + 3) return a.with_precision(prec);
  if (top_b - top_a > prec + 3) return negate_b ? (-b).with_precision(prec) : b.with_precision(prec);

  mpz_class sum;
  std::int64_t exp = 0;
  if (a.exp_ >= b.exp_) {
    mpz_mul_2exp(sum.get_mpz_t(), a.mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - b.exp_));
    if (negate_b)
      mpz_sub(sum.get_mpz_t(), sum.get_mpz_t(), b.mant_.get_mpz_t());
    else
      mpz_add(sum.get_mpz_t(), sum.get_mpz_t(), b.mant_.get_mpz_t());
    exp = b.exp_;
  } else {
    mpz_mul_2exp(sum.get_mpz_t(), b.mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - a.exp_));
    if (negate_b)
      mpz_sub(sum.get_mpz_t(), a.mant_.get_mpz_t(), sum.get_mpz_t());
    else
      mpz_add(sum.get_mpz_t(), sum.get_mpz_t(), a.mant_.get_mpz_t());
    exp = a.exp_;
  }
  return round(std::move(sum), exp, prec);
}

Real operator+(const Real& a, const Real& b) { return Real::add(a, b, false); }

Real operator-(const Real& a, const Real& b) { return Real::add(a, b, true); }

Real operator*(const Real& a, const Real& b) {
  const int prec = std::max(a.prec_, b.prec_);
  if (a.is_zero() || b.is_zero()) return Real(prec);
  mpz_class prod;
  mpz_mul(prod.get_mpz_t(), a.mant_.get_mpz_t(), b.mant_.get_mpz_t());
  return Real::round(std::move(prod), a.exp_ + b.exp_, prec);
}

Real operator/(const Real& a, const Real& b) {
  const int prec = std::max(a.prec_, b.prec_);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (a.is_zero()) return Real(prec);
  const std::int64_t shift =
      std::max<std::int64_t>(0, prec + 3 + bit_length(b.mant_) - bit_length(a.mant_));
  mpz_class num;
  mpz_mul_2exp(num.get_mpz_t(), a.mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), b.mant_.get_mpz_t());
  return Real::round(std::move(q), a.exp_ - shift - b.exp_, prec, mpz_sgn(r.get_mpz_t()) != 0);
}

std::strong_ordering operator<=>(const Real& a, const Real& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  const std::int64_t ta = a.magnitude_exponent();
  const std::int64_t tb = b.magnitude_exponent();
  if (ta != tb) return sa > 0 ? ta <=> tb : tb <=> ta;
  // Same sign and magnitude band: compare aligned mantissas.
  mpz_class x = a.mant_;
  mpz_class y = b.mant_;
  if (a.exp_ > b.exp_)
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp_ - b.exp_));
  else if (b.exp_ > a.exp_)
    mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp_ - a.exp_));
  const int c = mpz_cmp(x.get_mpz_t(), y.get_mpz_t());
  return c <=> 0;
}

Real hp_arith(const Real& a, const Real& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw Error(ErrorKind::NegativeSqrt, "integer square root of a negative number");
  if (n == 0) return 0;
  // 2^ceil(bits/2) >= sqrt(n); the Newton sequence then decreases
  // monotonically to floor(sqrt(n)).
  const auto bits = static_cast<mp_bitcnt_t>(bit_length(n));
  mpz_class x;
  mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
  mpz_class y;
  for (;;) {
    mpz_tdiv_q(y.get_mpz_t(), n.get_mpz_t(), x.get_mpz_t());
    y += x;
    mpz_fdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), 1);
    if (y >= x) return x;
    swap(x, y);
  }
}

Real hp_sqrt(const Real& x) {
  if (x.sign() < 0) throw Error(ErrorKind::NegativeSqrt, "square root of " + x.to_string());
  const int prec = x.precision();
  if (x.is_zero()) return Real(prec);
  // Scale so the integer root carries at least prec + 2 bits and the
  // remaining binary exponent is even.
  std::int64_t shift = std::max<std::int64_t>(0, 2 * (prec + 2) - bit_length(x.mant_) + 1);
  if (((x.exp_ - shift) & 1) != 0) ++shift;
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), x.mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  mpz_class root = isqrt(scaled);
  const bool inexact = root * root != scaled;
  return Real::round(std::move(root), (x.exp_ - shift) / 2, prec, inexact);
}

Real abs(const Real& x) { return x.sign() < 0 ? -x : x; }

Real pow_int(const Real& x, std::uint64_t k) {
  Real result = Real::from_int(1, x.precision());
  Real base = x;
  while (k != 0) {
    if ((k & 1U) != 0) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real min(const Real& a, const Real& b) { return b < a ? b : a; }

bool approx_equal(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace primroot

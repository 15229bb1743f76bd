#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace primroot {

/// Binary floating-point number of arbitrary precision.
///
/// The value is `mantissa * 2^exponent` where the signed mantissa has exactly
/// `precision` significant bits (or is zero). Every arithmetic result is the
/// exact result rounded half-to-even to the larger operand precision, so the
/// usual floating-point error analysis applies with unit roundoff
/// `2^-precision`. Values are immutable once built.
class Real {
 public:
  static constexpr int kMinPrecision = 32;
  static constexpr int kDefaultPrecision = 128;

  /// Zero at the default precision.
  Real();
  /// Zero at the given precision.
  explicit Real(int precision);

  static Real from_int(long value, int precision = kDefaultPrecision);
  /// Exact conversion, then rounded to `precision`.
  static Real from_double(double value, int precision = kDefaultPrecision);
  /// `mantissa * 2^exponent` rounded to `precision`.
  static Real from_scaled(const mpz_class& mantissa, std::int64_t exponent,
                          int precision = kDefaultPrecision);
  static Real ratio(long num, long den, int precision = kDefaultPrecision);
  /// 2^e, exact.
  static Real pow2(std::int64_t e, int precision = kDefaultPrecision);
  /// Parses `[+-]digits[.digits][(e|E)[+-]digits]`, correctly rounded.
  static Real parse(std::string_view text, int precision = kDefaultPrecision);

  /// -1, 0 or +1.
  int sign() const { return mpz_sgn(mant_.get_mpz_t()); }
  bool is_zero() const { return sign() == 0; }
  /// Magnitude of the mantissa; top bit set unless zero.
  mpz_class mantissa() const;
  const mpz_class& signed_mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  int precision() const { return prec_; }
  /// Smallest t with |x| < 2^t. Undefined for zero (returns INT64_MIN).
  std::int64_t magnitude_exponent() const;

  /// Same value rounded to (or widened to) `precision` bits.
  Real with_precision(int precision) const;
  double to_double() const;
  /// Shortest positional decimal string with enough significant digits to
  /// parse back to exactly the same value at this precision.
  std::string to_string() const;

  Real operator-() const;
  Real ldexp(std::int64_t shift) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  Real& operator/=(const Real& b) { return *this = *this / b; }

  /// Exact comparison of the stored values; precision is ignored.
  friend std::strong_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, const Real& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// Bit-identical representation, including precision.
  bool identical(const Real& other) const {
    return prec_ == other.prec_ && exp_ == other.exp_ && mant_ == other.mant_;
  }

 private:
  Real(mpz_class mant, std::int64_t exp, int prec) : mant_(std::move(mant)), exp_(exp), prec_(prec) {}

  // Rounds `value * 2^exp` to `prec` bits. When `sticky` is set the exact
  // value has further nonzero bits below the last bit of `value`, and
  // `value` must carry at least prec + 2 bits.
  static Real round(mpz_class value, std::int64_t exp, int prec, bool sticky = false);
  static Real add(const Real& a, const Real& b, bool negate_b);

  friend Real hp_sqrt(const Real& x);

  mpz_class mant_;
  std::int64_t exp_ = 0;
  int prec_ = kDefaultPrecision;
};

enum class ArithOp { add, sub, mul, div };

/// One of the four basic operations, correctly rounded.
Real hp_arith(const Real& a, const Real& b, ArithOp op);

/// Correctly rounded square root. Throws NegativeSqrt for x < 0.
Real hp_sqrt(const Real& x);

/// Floor of the square root of a nonnegative integer, by Newton iteration
/// from a bit-length-halving initial guess.
mpz_class isqrt(const mpz_class& n);

Real abs(const Real& x);
/// x^k by binary exponentiation; x^0 = 1.
Real pow_int(const Real& x, std::uint64_t k);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// |a - b| <= tol. The tolerance is always explicit.
bool approx_equal(const Real& a, const Real& b, const Real& tol);

/// Number of significant decimal digits needed to round-trip `precision` bits.
int round_trip_digits(int precision);

int check_precision(int precision);

}  // namespace primroot

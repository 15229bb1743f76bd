#include "primroot/oracle.hpp"

#include <string>

#include "primroot/errors.hpp"
#include "primroot/zeta.hpp"

namespace primroot::oracle {

namespace {

constexpr int kGuardBits = 32;

// atan(1/m) = sum_j (-1)^j / ((2j + 1) m^{2j+1}); alternating, so the first
// omitted term bounds the remainder.
Real atan_inverse(long m, int prec) {
  const Real eps = Real::pow2(-(prec + 4), prec);
  const Real m_sq = Real::from_int(m * m, prec);
  Real power = Real::from_int(1, prec) / Real::from_int(m, prec);  // 1/m^{2j+1}
  Real sum(prec);
  for (long j = 0;; ++j) {
    const Real term = power / Real::from_int(2 * j + 1, prec);
    if (term < eps) break;
    sum = (j % 2 == 0) ? sum + term : sum - term;
    power = power / m_sq;
  }
  return sum;
}

// cos and sin of x in [0, pi/4] by Taylor series with alternating remainders.
std::pair<Real, Real> cos_sin(const Real& x, int prec) {
  const Real eps = Real::pow2(-(prec + 4), prec);
  const Real x_sq = x * x;
  Real c = Real::from_int(1, prec);
  Real s = x;
  Real term_c = c;
  Real term_s = x;
  for (long j = 1;; ++j) {
    term_c = -term_c * x_sq / Real::from_int((2 * j - 1) * (2 * j), prec);
    term_s = -term_s * x_sq / Real::from_int((2 * j) * (2 * j + 1), prec);
    if (abs(term_c) < eps && abs(term_s) < eps) break;
    c += term_c;
    s += term_s;
  }
  return {c, s};
}

}  // namespace

Real pi(int precision) {
  check_precision(precision);
  const int prec = precision + kGuardBits;
  const Real value = Real::from_int(16, prec) * atan_inverse(5, prec) - Real::from_int(4, prec) * atan_inverse(239, prec);
  return value.with_precision(precision);
}

OracleRoot trig_root(int n, long k, int precision) {
  check_precision(precision);
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be at least 1, got " + std::to_string(n));
  const int prec = precision + kGuardBits;
  long r = k % n;
  if (r < 0) r += n;

  // 2 pi r / n = (pi/4) * octant + (pi/4) * rem / n with 0 <= rem < n.
  const long scaled = 8 * r;
  const long octant = scaled / n;
  const long rem = scaled % n;
  const Real quarter_pi = pi(prec) / Real::from_int(4, prec);
  auto [c, s] = cos_sin(quarter_pi * Real::from_int(rem, prec) / Real::from_int(n, prec), prec);
  Complex value{c, s};

  // Quarter turns are exact swaps; an odd octant adds one eighth turn.
  for (long q = 0; q < octant / 2; ++q) value = Complex{-value.im(), value.re()};
  if (octant % 2 == 1) {
    const Real half_root2 = hp_sqrt(Real::ratio(1, 2, prec));
    value = value * Complex{half_root2, half_root2};
  }

  OracleRoot out;
  out.n = n;
  out.k = k;
  out.value = value.with_precision(precision);
  return out;
}

Real oracle_distance(int n, int precision) {
  const Complex zeta = construct_zeta(n, precision).value();
  return distance(zeta, trig_root(n, 1, precision).value);
}

bool assert_remark5(int n, int precision) {
  return oracle_distance(n, precision) < Real::pow2(-(precision / 2 - 4), precision);
}

}  // namespace primroot::oracle

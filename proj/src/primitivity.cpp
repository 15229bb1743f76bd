#include "primroot/primitivity.hpp"

#include <string>

#include "primroot/errors.hpp"
#include "primroot/zeta.hpp"

namespace primroot {

Real order_tolerance(int precision) { return Real::pow2(-(precision / 2), precision); }

std::vector<int> divisors(int n) {
  std::vector<int> small;
  std::vector<int> large;
  for (int d = 1; static_cast<long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

bool is_unity(const Complex& z, const Real& tol) {
  return complex_abs(z - Complex::one(z.precision())) <= tol;
}

void require_root(const Complex& w, int n, const Real& tol) {
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be positive");
  if (!is_unity(complex_pow(w, static_cast<std::uint64_t>(n)), tol)) {
    throw Error(ErrorKind::NotARoot, w.to_string() + " is not an n-th root of unity for n = " + std::to_string(n));
  }
}

}  // namespace

PrimitivityReport multiplicative_order(const Complex& w, int n, const Real& tol) {
  require_root(w, n, tol);
  PrimitivityReport report;
  report.w = w;
  report.n = n;
  report.tol = tol;
  for (int d : divisors(n)) {
    if (is_unity(complex_pow(w, static_cast<std::uint64_t>(d)), tol)) {
      report.order = d;
      break;
    }
  }
  report.is_primitive = report.order == n;
  return report;
}

bool gcd_primitivity(int m, int n) {
  if (n < 1 || m < 1 || m > n) {
    throw Error(ErrorKind::InvalidArgument,
                "gcd_primitivity needs 1 <= m <= n, got m = " + std::to_string(m) + ", n = " + std::to_string(n));
  }
  return gcd(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n)) == 1;
}

bool prime_shortcut(const Complex& w, int n, const Real& tol) {
  if (!is_prime(n)) throw Error(ErrorKind::NotPrime, std::to_string(n) + " is not prime");
  require_root(w, n, tol);
  return !is_unity(w, tol);
}

Complex newton_root(const Complex& c_in, int n, int precision) {
  check_precision(precision);
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be at least 1, got " + std::to_string(n));
  if (c_in.is_zero()) throw Error(ErrorKind::ZeroTarget, "z^n = 0 has no nonzero roots");
  const int prec = precision;
  const Complex c = c_in.with_precision(prec);
  const Real one = Real::from_int(1, prec);
  const Real modulus = complex_abs(c);

  // Start on the ray of c at radius (1 + |c|)/2, turned off that ray by the
  // rotation (24 + 7i)/25 so negative targets with even n do not leave the
  // iteration stuck on the real axis.
  const Complex direction = c / modulus;
  const Complex turn = Complex::from_ints(24, 7, prec) / Real::from_int(25, prec);
  Complex z = direction * turn * ((one + modulus) / Real::from_int(2, prec));

  const auto k = static_cast<std::uint64_t>(n);
  const Real nn = Real::from_int(n, prec);
  const Real step_tol = Real::pow2(-(3 * prec / 4), prec);
  const int cap = 200 + 20 * n;
  for (int iter = 0; iter < cap; ++iter) {
    const Complex zn1 = complex_pow(z, k - 1);
    const Complex df = zn1 * nn;
    if (df.is_zero()) throw Error(ErrorKind::NoConvergence, "Newton iterate hit z = 0");
    const Complex step = (zn1 * z - c) / df;
    z = z - step;
    if (complex_abs(step) <= step_tol * max(one, complex_abs(z))) {
      // One more step to polish.
      const Complex zp = complex_pow(z, k - 1);
      return z - (zp * z - c) / (zp * nn);
    }
  }
  throw Error(ErrorKind::NoConvergence, "Newton iteration for z^" + std::to_string(n) + " = c did not converge");
}

RootSet roots_of(const Complex& c_in, int n, int precision) {
  const Complex z = newton_root(c_in, n, precision);
  const int prec = precision;
  const Complex c = c_in.with_precision(prec);
  const Real one = Real::from_int(1, prec);
  const Real modulus = complex_abs(c);
  const Complex zeta = construct_zeta(n, prec).value();

  RootSet set;
  set.n = n;
  set.target = c;
  set.precision = prec;
  set.roots.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    set.roots.push_back(complex_pow(zeta, static_cast<std::uint64_t>(j)) * z);
  }
  set.residual_bound = residual(set.roots, c, n);
  const Real target = Real::pow2(-(prec / 2), prec) * max(one, modulus);
  if (set.residual_bound > target) {
    throw Error(ErrorKind::NoConvergence, "roots_of residual " + set.residual_bound.to_string() + " above target");
  }
  const Real floor = Real::pow2(-(prec / 4), prec) * max(one, complex_abs(z));
  sort_roots(set.roots, floor);
  return set;
}

}  // namespace primroot

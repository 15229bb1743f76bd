#include "primroot/zeta.hpp"

#include <optional>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

Zeta zeta_from_root(int n, const Complex& w) {
  const int prec = w.precision();
  const Real one = Real::from_int(1, prec);
  Zeta z;
  z.n = n;
  z.a = w.re();
  z.b = w.im();
  z.r = hp_sqrt((z.a - one) * (z.a - one) + z.b * z.b);
  z.precision = prec;
  return z;
}

Zeta select_zeta(const RootSet& set) {
  if (set.n < 3 || set.n % 2 != 0) {
    throw Error(ErrorKind::InvalidN, "select_zeta needs an even n >= 3, got " + std::to_string(set.n));
  }
  const int prec = set.precision;
  const Real one = Real::from_int(1, prec);
  const Real tie_tol = Real::pow2(-(prec / 4), prec);

  // Squared distances order the same way as distances.
  std::optional<std::size_t> best;
  Real best_sq(prec);
  Real second_sq(prec);
  bool have_second = false;
  for (std::size_t i = 0; i < set.roots.size(); ++i) {
    const Complex& w = set.roots[i];
    if (w.im() <= set.residual_bound) continue;
    const Real d = complex_norm(w - Complex::one(prec));
    if (!best || d < best_sq) {
      if (best) {
        second_sq = best_sq;
        have_second = true;
      }
      best = i;
      best_sq = d;
    } else if (!have_second || d < second_sq) {
      second_sq = d;
      have_second = true;
    }
  }
  if (!best) throw Error(ErrorKind::NoUpperRoot, "no root with positive imaginary part");
  if (have_second && hp_sqrt(second_sq) - hp_sqrt(best_sq) <= tie_tol) {
    throw Error(ErrorKind::AmbiguousMinimizer,
                "two upper roots are equally close to 1 for n = " + std::to_string(set.n));
  }

  Zeta zeta = zeta_from_root(set.n, set.roots[*best]);
  const Real zero(prec);
  if (!(zero < zeta.a && zeta.a < one && zero < zeta.b && zeta.b < one)) {
    throw Error(ErrorKind::ConstraintViolation,
                "minimizer " + zeta.value().to_string() + " violates 0 < a < 1, 0 < b < 1");
  }
  return zeta;
}

Zeta construct_zeta(int n, int precision) {
  check_precision(precision);
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be at least 1, got " + std::to_string(n));
  switch (n) {
    case 1: return zeta_from_root(1, Complex::one(precision));
    case 2: return zeta_from_root(2, -Complex::one(precision));
    case 4: return zeta_from_root(4, Complex::i(precision));
    default: break;
  }
  if (n % 2 == 0) return select_zeta(solve_unity(n, precision));
  // If w is primitive of order 2n then w^2 is primitive of order n.
  // Squared with guard bits, then rounded once.
  const Zeta doubled = construct_zeta(2 * n, precision + 32);
  const Complex w = doubled.value();
  return zeta_from_root(n, (w * w).with_precision(precision));
}

bool radius_identity_check(const Zeta& zeta) {
  const int prec = zeta.precision;
  const Real one = Real::from_int(1, prec);
  const Real two = Real::from_int(2, prec);
  const Real tol = Real::pow2(-(prec - 8), prec);
  const Real r_sq = zeta.r * zeta.r;
  const Real am1 = zeta.a - one;
  return abs(r_sq - (two - two * zeta.a)) <= tol && abs(am1 * am1 + zeta.b * zeta.b - r_sq) <= tol;
}

}  // namespace primroot

#include "primroot/root_solver.hpp"

#include <algorithm>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

constexpr int kPolishGuardBits = 32;

// Seeds sit on a circle slightly outside the expected root radius, rotated
// by successive powers of (3 + 4i)/5. That rotation has unit modulus and is
// not a root of unity, so the seeds never coincide and never share the
// symmetry of the target polynomial. The first seed is turned by
// (24 + 7i)/25 so that targets along 3 + 4i (where z^2 = c would otherwise
// cycle) do not line up with the rotation.
std::vector<Complex> seeds(int n, const Real& radius) {
  const int prec = radius.precision();
  const Complex rotation = Complex::from_ints(3, 4, prec) / Real::from_int(5, prec);
  const Complex offset = Complex::from_ints(24, 7, prec) / Real::from_int(25, prec);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  Complex point = offset * (radius * Real::ratio(11, 10, prec));
  for (int k = 0; k < n; ++k) {
    out.push_back(point);
    point = point * rotation;
  }
  return out;
}

Real max_norm_residual(std::span<const Complex> roots, const Complex& c, int n) {
  Real worst(c.precision());
  for (const auto& z : roots) {
    worst = max(worst, complex_norm(complex_pow(z, static_cast<std::uint64_t>(n)) - c));
  }
  return worst;
}

Complex newton_step(const Complex& z, const Complex& c, int n) {
  const auto k = static_cast<std::uint64_t>(n);
  const Complex zn1 = complex_pow(z, k - 1);
  const Complex f = zn1 * z - c;
  const Complex df = zn1 * Real::from_int(n, z.precision());
  if (df.is_zero()) return z;
  return z - f / df;
}

}  // namespace

int sweep_cap(int n) { return 50 + 10 * n; }

Real real_nth_root(const Real& s, int n) {
  if (s.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "real_nth_root needs a positive argument");
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be positive");
  const int prec = s.precision();
  if (n == 1) return s;
  // s < 2^top, so 2^ceil(top/n) bounds the root from above within a factor 2.
  const std::int64_t top = s.magnitude_exponent();
  const std::int64_t e = top >= 0 ? (top + n - 1) / n : -((-top) / n);
  Real t = Real::pow2(e, prec);
  const Real nn = Real::from_int(n, prec);
  const Real n1 = Real::from_int(n - 1, prec);
  for (int iter = 0; iter < 4 * prec; ++iter) {
    const Real next = (n1 * t + s / pow_int(t, static_cast<std::uint64_t>(n - 1))) / nn;
    if (next >= t) break;
    t = next;
  }
  return t;
}

void sort_roots(std::vector<Complex>& roots, const Real& axis_tol) {
  auto im_class = [&](const Complex& z) {
    if (z.im() > axis_tol) return 1;
    if (z.im() < -axis_tol) return -1;
    return 0;
  };
  std::stable_sort(roots.begin(), roots.end(), [&](const Complex& a, const Complex& b) {
    const int ca = im_class(a);
    const int cb = im_class(b);
    if (ca != cb) return ca > cb;
    if (a.re() != b.re()) return a.re() > b.re();
    return a.im() > b.im();
  });
}

std::optional<Real> min_pairwise_distance(std::span<const Complex> roots) {
  if (roots.size() < 2) return std::nullopt;
  std::optional<Real> best;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Real d = complex_norm(roots[i] - roots[j]);
      if (!best || d < *best) best = std::move(d);
    }
  }
  return hp_sqrt(*best);
}

Real residual(std::span<const Complex> roots, const Complex& c, int n) {
  return hp_sqrt(max_norm_residual(roots, c, n));
}

std::optional<Real> set_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return Real();
  std::vector<bool> used(b.size(), false);
  Real worst(a.front().precision());
  for (const auto& z : a) {
    std::optional<Real> best;
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      Real d = complex_norm(z - b[j]);
      if (!best || d < *best) {
        best = std::move(d);
        best_j = j;
      }
    }
    used[best_j] = true;
    worst = max(worst, *best);
  }
  return hp_sqrt(worst);
}

RootSet solve_binomial(const Complex& c_in, int n, int precision) {
  check_precision(precision);
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be at least 1, got " + std::to_string(n));
  if (c_in.is_zero()) throw Error(ErrorKind::ZeroTarget, "z^n = 0 has no nonzero roots");
  const int prec = precision;
  const Complex c = c_in.with_precision(prec);
  const Real one = Real::from_int(1, prec);
  const Real modulus = complex_abs(c);
  const Real scale = max(one, modulus);
  const Real target = Real::pow2(-(prec / 2), prec) * scale;
  const Real target_sq = target * target;

  RootSet set;
  set.n = n;
  set.target = c;
  set.precision = prec;
  if (n == 1) {
    set.roots = {c};
    set.residual_bound = Real(prec);
    return set;
  }

  const Real radius = real_nth_root(modulus, n);
  const Real step_tol = Real::pow2(-(3 * prec / 4), prec) * max(one, radius);
  const Real step_tol_sq = step_tol * step_tol;
  const auto un = static_cast<std::size_t>(n);

  std::vector<Complex> z = seeds(n, radius);
  std::vector<Complex> next(un);
  std::vector<Complex> values(un);
  bool converged = false;
  const int cap = sweep_cap(n);
  for (int sweep = 0; sweep < cap && !converged; ++sweep) {
    Real worst_value(prec);
    for (std::size_t i = 0; i < un; ++i) {
      values[i] = complex_pow(z[i], un) - c;
      worst_value = max(worst_value, complex_norm(values[i]));
    }
    if (worst_value <= target_sq) {
      converged = true;
      break;
    }
    // Jacobi update: every correction uses only the previous sweep's values.
    Real worst_step(prec);
    for (std::size_t i = 0; i < un; ++i) {
      Complex denom = Complex::one(prec);
      for (std::size_t j = 0; j < un; ++j) {
        if (j != i) denom = denom * (z[i] - z[j]);
      }
      if (denom.is_zero()) {
        throw Error(ErrorKind::NoConvergence, "coincident root estimates in Durand-Kerner sweep");
      }
      const Complex step = values[i] / denom;
      worst_step = max(worst_step, complex_norm(step));
      next[i] = z[i] - step;
    }
    z.swap(next);
    if (worst_step < step_tol_sq) converged = true;
  }
  if (!converged) {
    throw Error(ErrorKind::NoConvergence,
                "Durand-Kerner did not converge for n = " + std::to_string(n) + " within " +
                    std::to_string(cap) + " sweeps");
  }

  // Polish with guard bits so the stored roots are (nearly always) the
  // correctly rounded values at the requested precision.
  const int polish_prec = prec + kPolishGuardBits;
  const Complex c_wide = c.with_precision(polish_prec);
  for (auto& root : z) root = newton_step(root.with_precision(polish_prec), c_wide, n).with_precision(prec);

  set.residual_bound = residual(z, c, n);
  if (set.residual_bound > target) {
    throw Error(ErrorKind::NoConvergence,
                "residual " + set.residual_bound.to_string() + " above target for n = " + std::to_string(n));
  }
  // Distinctness is guaranteed mathematically; a collapse means the solver failed.
  const Real floor = Real::pow2(-(prec / 4), prec) * max(one, radius);
  if (auto gap = min_pairwise_distance(z); gap && *gap <= floor) {
    throw Error(ErrorKind::NoConvergence, "two roots collapsed for n = " + std::to_string(n));
  }
  sort_roots(z, floor);
  set.roots = std::move(z);
  return set;
}

RootSet solve_unity(int n, int precision) {
  check_precision(precision);
  return solve_binomial(Complex::one(precision), n, precision);
}

Complex cofactor_eval(const Complex& z, const Complex& w, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidN, "n must be positive");
  // Horner in z: coefficient of z^{n-1-j} is w^j.
  Complex acc = Complex::one(std::max(z.precision(), w.precision()));
  Complex w_pow = acc;
  for (int j = 1; j < n; ++j) {
    w_pow = w_pow * w;
    acc = acc * z + w_pow;
  }
  return acc;
}

bool simple_zero_check(const RootSet& set) {
  if (static_cast<int>(set.roots.size()) != set.n) return false;
  const int prec = set.precision;
  const Real floor = Real::pow2(-(prec / 4), prec);
  if (auto gap = min_pairwise_distance(set.roots); gap && *gap <= floor) return false;
  const Real half_n = Real::ratio(set.n, 2, prec);
  return std::all_of(set.roots.begin(), set.roots.end(), [&](const Complex& w) {
    return complex_abs(cofactor_eval(w, w, set.n)) >= half_n;
  });
}

}  // namespace primroot

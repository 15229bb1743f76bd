#pragma once

#include <optional>
#include <span>
#include <vector>

#include "primroot/complex.hpp"
#include "primroot/real.hpp"

namespace primroot {

/// The n solutions of z^n = target.
struct RootSet {
  int n = 0;
  Complex target;
  /// Deterministic order: imaginary sign descending, then real part descending.
  std::vector<Complex> roots;
  /// max |z^n - target| over the roots.
  Real residual_bound;
  int precision = Real::kDefaultPrecision;
};

/// Durand-Kerner sweep budget for degree n.
int sweep_cap(int n);

/// All n-th roots of unity by simultaneous (Jacobi-style) Durand-Kerner
/// iteration followed by one Newton polishing step per root. Throws
/// InvalidN for n < 1 and NoConvergence when the residual target
/// 2^-(precision/2) is not reached within `sweep_cap(n)` sweeps.
RootSet solve_unity(int n, int precision = Real::kDefaultPrecision);

/// All solutions of z^n = c. The residual target is 2^-(precision/2) scaled
/// by max(1, |c|). Throws ZeroTarget for c = 0.
RootSet solve_binomial(const Complex& c, int n, int precision = Real::kDefaultPrecision);

/// Q(z) = sum_{j=0}^{n-1} z^{n-1-j} w^j, the cofactor in z^n - w^n = (z - w) Q(z).
Complex cofactor_eval(const Complex& z, const Complex& w, int n);

/// True iff the roots are pairwise distinct and every root w has
/// |Q(w)| >= n/2, i.e. is a simple zero of z^n - 1.
bool simple_zero_check(const RootSet& set);

/// Sorts into the solver's deterministic order. Imaginary parts within
/// `axis_tol` of zero count as zero.
void sort_roots(std::vector<Complex>& roots, const Real& axis_tol);

/// Smallest |z_i - z_j| over distinct indices; nullopt for fewer than two roots.
std::optional<Real> min_pairwise_distance(std::span<const Complex> roots);

/// max |z^n - c| over `roots`.
Real residual(std::span<const Complex> roots, const Complex& c, int n);

/// Greedy nearest-neighbour matching of two equally sized point sets; the
/// largest matched distance. nullopt when the sizes differ.
std::optional<Real> set_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Real n-th root of s > 0 by Newton iteration from above.
Real real_nth_root(const Real& s, int n);

}  // namespace primroot

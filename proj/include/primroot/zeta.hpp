#pragma once

#include "primroot/complex.hpp"
#include "primroot/real.hpp"
#include "primroot/root_solver.hpp"

namespace primroot {

/// The distinguished n-th root of unity zeta = a + ib: among the roots with
/// positive imaginary part, the one closest to 1. r = |zeta - 1|.
struct Zeta {
  int n = 0;
  Real a;
  Real b;
  Real r;
  int precision = Real::kDefaultPrecision;

  Complex value() const { return {a, b}; }
};

/// Picks the minimizer of |w - 1| over roots with Im(w) > residual_bound.
/// Requires an even n >= 6 unity set (n = 4 only reaches the 0 < a guard).
/// Throws NoUpperRoot, AmbiguousMinimizer, or ConstraintViolation when the
/// minimizer does not satisfy 0 < a < 1 and 0 < b < 1.
Zeta select_zeta(const RootSet& set);

/// zeta(n) for any n >= 1. n = 1, 2, 4 are exact; even n >= 6 goes through
/// the root solver and select_zeta; every other n is the square of zeta(2n).
Zeta construct_zeta(int n, int precision = Real::kDefaultPrecision);

/// Wraps an arbitrary point w (meant to be an n-th root of unity) as a Zeta
/// record, with r = |w - 1|. Used to feed non-minimal roots to the
/// certificate machinery.
Zeta zeta_from_root(int n, const Complex& w);

/// |r^2 - (2 - 2a)| and |(a-1)^2 + b^2 - r^2| both within 2^-(precision-8).
bool radius_identity_check(const Zeta& zeta);

}  // namespace primroot

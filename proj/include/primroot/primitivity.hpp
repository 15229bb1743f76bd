#pragma once

#include <cstdint>
#include <vector>

#include "primroot/complex.hpp"
#include "primroot/root_solver.hpp"

namespace primroot {

struct PrimitivityReport {
  Complex w;
  int n = 0;
  /// Smallest d >= 1 with |w^d - 1| <= tol.
  int order = 0;
  bool is_primitive = false;
  Real tol;
};

/// Default numerical tolerance for "w^d = 1": 2^-(precision/2).
Real order_tolerance(int precision);

std::vector<int> divisors(int n);
bool is_prime(int n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Order of an n-th root of unity, found by scanning the divisors of n in
/// increasing order. Throws NotARoot when |w^n - 1| > tol.
PrimitivityReport multiplicative_order(const Complex& w, int n, const Real& tol);

/// zeta^m is primitive iff gcd(m, n) = 1. Requires 1 <= m <= n.
bool gcd_primitivity(int m, int n);

/// For prime n every root other than 1 is primitive: returns |w - 1| > tol.
/// Throws NotPrime or NotARoot.
bool prime_shortcut(const Complex& w, int n, const Real& tol);

/// All n-th roots of c as zeta^k * z for a single root z found by Newton
/// iteration on z^n - c. Throws ZeroTarget for c = 0.
RootSet roots_of(const Complex& c, int n, int precision = Real::kDefaultPrecision);

/// One root of z^n = c by Newton iteration (the z of roots_of).
Complex newton_root(const Complex& c, int n, int precision);

}  // namespace primroot

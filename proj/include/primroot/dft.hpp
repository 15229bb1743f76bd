#pragma once

#include <span>
#include <vector>

#include "primroot/complex.hpp"

namespace primroot {

/// Powers of zeta(n) used as DFT kernels. forward[k] = conj(zeta)^k
/// (negative-frequency convention), inverse[k] = zeta^k.
struct TwiddleTable {
  int n = 0;
  std::vector<Complex> forward;
  std::vector<Complex> inverse;
  int precision = Real::kDefaultPrecision;
};

/// Entries re-anchor to complex_pow(zeta, k) every this many steps.
inline constexpr int kTwiddleReanchor = 16;

TwiddleTable twiddle_table(int n, int precision = Real::kDefaultPrecision);

/// X[j] = sum_k x[k] forward[(j k) mod n], O(n^2).
std::vector<Complex> dft_forward(std::span<const Complex> x, const TwiddleTable& table);
/// x[k] = (1/n) sum_j X[j] inverse[(j k) mod n].
std::vector<Complex> dft_inverse(std::span<const Complex> X, const TwiddleTable& table);

/// Convenience overloads building the table at the input's precision.
std::vector<Complex> dft_forward(std::span<const Complex> x);
std::vector<Complex> dft_inverse(std::span<const Complex> X);

}  // namespace primroot

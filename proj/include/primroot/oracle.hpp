#pragma once

// Trigonometric ground truth for verification only. Nothing on the
// construction path (zeta, roots, certificates, DFT) may include this header.

#include "primroot/complex.hpp"

namespace primroot::oracle {

struct OracleRoot {
  int n = 0;
  long k = 0;
  /// cos(2 pi k / n) + i sin(2 pi k / n)
  Complex value;
};

/// pi from Machin's arctangent formula, correct to about 2^-(precision + 4).
Real pi(int precision);

/// e^{2 pi i k / n} by exact octant reduction of k/n and truncated Taylor
/// series on [0, pi/4], carried 32 bits beyond `precision`.
OracleRoot trig_root(int n, long k, int precision = Real::kDefaultPrecision);

/// |construct_zeta(n) - e^{2 pi i / n}| < 2^-(precision/2 - 4).
bool assert_remark5(int n, int precision = Real::kDefaultPrecision);

/// The distance assert_remark5 compares against its threshold.
Real oracle_distance(int n, int precision = Real::kDefaultPrecision);

}  // namespace primroot::oracle

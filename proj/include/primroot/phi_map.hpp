#pragma once

#include <string>
#include <utility>
#include <vector>

#include "primroot/real.hpp"
#include "primroot/root_solver.hpp"
#include "primroot/zeta.hpp"

namespace primroot {

/// Tolerance used for domain clamping and for every certificate check:
/// 2^-(precision/2).
Real certificate_tolerance(int precision);

/// Real part of zeta * z_x where z_x = x + i sqrt(1 - x^2): a x - b sqrt(1 - x^2).
/// Maps [-a, 1] onto [-1, a]. Inputs within the tolerance of the domain are
/// clamped; anything further out throws DomainViolation.
Real phi(const Real& x, const Zeta& zeta);

/// Inverse of phi: a y + b sqrt(1 - y^2), mapping [-1, a] onto [-a, 1].
Real psi(const Real& y, const Zeta& zeta);

/// a + b x / sqrt(1 - x^2) on the open interval (-a, 1), kept at least
/// 2^-(precision/4) away from +-1.
Real phi_derivative(const Real& x, const Zeta& zeta);

struct DescentSequence {
  std::vector<Real> xs;
  int p = 0;
};

/// x_0 = 1, x_k = phi(x_{k-1}) while x_{k-1} stays in the domain of phi.
/// Stops at the first x_k below -a - tol; p is that index. Requires an even
/// n >= 6 and max_steps >= n. Throws NonDescent or StepLimit.
DescentSequence iterate_sequence(const Zeta& zeta, int max_steps);

struct CertificateChecks {
  bool strict_descent = false;
  bool endpoint_minus_one = false;
  bool p_equals_half_n = false;
  bool partition_covers = false;
  bool reconstruction_matches = false;
  bool lemma1b_exclusion = false;
  /// x_k = Re(zeta^k) for every k within tolerance.
  bool real_parts_match = false;

  bool all() const {
    return strict_descent && endpoint_minus_one && p_equals_half_n && partition_covers &&
           reconstruction_matches && lemma1b_exclusion && real_parts_match;
  }
  std::vector<std::pair<std::string, bool>> named() const;
  std::vector<std::string> failed() const;
};

/// Machine-checkable record that zeta generates all n-th roots of unity.
struct ZetaCertificate {
  int n = 0;
  Zeta zeta;
  std::vector<Real> xs;
  int p = 0;
  CertificateChecks checks;
  Real tolerance;
};

/// Runs the descent iteration and evaluates every check against `set`
/// (which should be solve_unity(n)). Check failures are recorded, not
/// thrown; use require_valid to turn them into a CertificateFailure.
ZetaCertificate build_certificate(const Zeta& zeta, const RootSet& set);

/// Throws CertificateFailure naming every failed check.
void require_valid(const ZetaCertificate& cert);

/// Number of sample points per interval in the sampled exclusion check.
inline constexpr int kExclusionGridPoints = 1000;

/// Smallest |z_x^n - 1| over a uniform grid of `points` values of x strictly
/// inside (a, 1 - 2^-20) and the mirrored grid inside (-1 + 2^-20, -a).
Real exclusion_min_residual(const Zeta& zeta, int points = kExclusionGridPoints);

}  // namespace primroot

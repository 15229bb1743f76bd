#include "primroot/phi_map.hpp"

#include <algorithm>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

// phi and psi are evaluated with extra bits and rounded once.
constexpr int kGuardBits = 32;

int working_precision(const Real& x, const Zeta& zeta) { return std::max(x.precision(), zeta.precision); }

// sqrt(1 - x^2) as sqrt((1 - x)(1 + x)): 1 - x is exact near x = 1.
Real unit_circle_height(const Real& x) {
  const Real one = Real::from_int(1, x.precision());
  const Real prod = (one - x) * (one + x);
  return prod.sign() < 0 ? Real(x.precision()) : hp_sqrt(prod);
}

Real clamp_to(const Real& x, const Real& lo, const Real& hi, const Real& tol, const char* name) {
  if (x < lo - tol || x > hi + tol) {
    throw Error(ErrorKind::DomainViolation, std::string(name) + " argument " + x.to_string() +
                                                " outside [" + lo.to_string() + ", " + hi.to_string() + "]");
  }
  if (x < lo) return lo;
  if (x > hi) return hi;
  return x;
}

}  // namespace

Real certificate_tolerance(int precision) { return Real::pow2(-(precision / 2), precision); }

Real phi(const Real& x_in, const Zeta& zeta) {
  const int prec = working_precision(x_in, zeta);
  const Real x = clamp_to(x_in.with_precision(prec), -zeta.a, Real::from_int(1, prec),
                          certificate_tolerance(prec), "phi");
  const Real xw = x.with_precision(prec + kGuardBits);
  return (zeta.a * xw - zeta.b * unit_circle_height(xw)).with_precision(prec);
}

Real psi(const Real& y_in, const Zeta& zeta) {
  const int prec = working_precision(y_in, zeta);
  const Real y = clamp_to(y_in.with_precision(prec), Real::from_int(-1, prec), zeta.a,
                          certificate_tolerance(prec), "psi");
  const Real yw = y.with_precision(prec + kGuardBits);
  return (zeta.a * yw + zeta.b * unit_circle_height(yw)).with_precision(prec);
}

Real phi_derivative(const Real& x_in, const Zeta& zeta) {
  const int prec = working_precision(x_in, zeta);
  const Real x = x_in.with_precision(prec);
  const Real one = Real::from_int(1, prec);
  const Real guard = one - Real::pow2(-(prec / 4), prec);
  if (x <= -zeta.a || x >= one || abs(x) > guard) {
    throw Error(ErrorKind::DomainViolation, "phi' argument " + x.to_string() + " outside the open domain");
  }
  return zeta.a + zeta.b * x / unit_circle_height(x);
}

DescentSequence iterate_sequence(const Zeta& zeta, int max_steps) {
  if (zeta.n < 6 || zeta.n % 2 != 0) {
    throw Error(ErrorKind::InvalidN, "descent sequence needs an even n >= 6, got " + std::to_string(zeta.n));
  }
  if (max_steps < zeta.n) {
    throw Error(ErrorKind::InvalidArgument, "max_steps must be at least n");
  }
  const int prec = zeta.precision;
  const Real tol = certificate_tolerance(prec);
  const Real lower = -zeta.a - tol;

  DescentSequence seq;
  seq.xs.push_back(Real::from_int(1, prec));
  // Iterate while the last point is still in the (tolerant) domain [-a, 1].
  while (seq.xs.back() >= lower) {
    if (static_cast<int>(seq.xs.size()) > max_steps) {
      throw Error(ErrorKind::StepLimit, "descent did not leave [-a, 1] within " + std::to_string(max_steps) + " steps");
    }
    Real next = phi(seq.xs.back(), zeta);
    if (next >= seq.xs.back()) {
      throw Error(ErrorKind::NonDescent, "x_" + std::to_string(seq.xs.size()) + " = " + next.to_string() +
                                             " does not decrease");
    }
    seq.xs.push_back(std::move(next));
  }
  seq.p = static_cast<int>(seq.xs.size()) - 1;
  return seq;
}

std::vector<std::pair<std::string, bool>> CertificateChecks::named() const {
  return {{"strict_descent", strict_descent},
          {"endpoint_minus_one", endpoint_minus_one},
          {"p_equals_half_n", p_equals_half_n},
          {"partition_covers", partition_covers},
          {"reconstruction_matches", reconstruction_matches},
          {"lemma1b_exclusion", lemma1b_exclusion},
          {"real_parts_match", real_parts_match}};
}

std::vector<std::string> CertificateChecks::failed() const {
  std::vector<std::string> out;
  for (const auto& [name, ok] : named()) {
    if (!ok) out.push_back(name);
  }
  return out;
}

Real exclusion_min_residual(const Zeta& zeta, int points) {
  const int prec = zeta.precision;
  const Real one = Real::from_int(1, prec);
  const Real upper = one - Real::pow2(-20, prec);
  const Real span = upper - zeta.a;
  const Real denom = Real::from_int(points + 1, prec);
  const auto n = static_cast<std::uint64_t>(zeta.n);
  Real worst;
  bool first = true;
  for (int j = 1; j <= points; ++j) {
    const Real x = zeta.a + span * Real::from_int(j, prec) / denom;
    const Real h = unit_circle_height(x);
    for (const Real& xx : {x, -x}) {
      const Complex z{xx, h};
      const Real d = complex_abs(complex_pow(z, n) - Complex::one(prec));
      if (first || d < worst) {
        worst = d;
        first = false;
      }
    }
  }
  return worst;
}

ZetaCertificate build_certificate(const Zeta& zeta, const RootSet& set) {
  const int prec = zeta.precision;
  const Real tol = certificate_tolerance(prec);
  const Real one = Real::from_int(1, prec);
  DescentSequence seq = iterate_sequence(zeta, std::max(zeta.n, 2 * zeta.n));

  ZetaCertificate cert;
  cert.n = zeta.n;
  cert.zeta = zeta;
  cert.p = seq.p;
  cert.tolerance = tol;
  CertificateChecks& c = cert.checks;
  const auto& xs = seq.xs;
  const auto p = static_cast<std::size_t>(seq.p);

  c.strict_descent = true;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (!(xs[k] < xs[k - 1])) c.strict_descent = false;
  }
  c.endpoint_minus_one = abs(xs[p] + one) <= tol;
  c.p_equals_half_n = 2 * seq.p == zeta.n;

  const Complex w = zeta.value();
  std::vector<Complex> powers;
  powers.reserve(p + 1);
  for (std::size_t k = 0; k <= p; ++k) powers.push_back(complex_pow(w, k));

  c.real_parts_match = true;
  for (std::size_t k = 0; k <= p; ++k) {
    if (abs(xs[k] - powers[k].re()) > tol) c.real_parts_match = false;
  }

  // The intervals [x_k, x_{k-1}] tile [-1, 1] and each contributes exactly
  // one upper-hemisphere root, sitting at its endpoint.
  std::vector<Real> upper_re;
  for (const auto& root : set.roots) {
    if (root.im() > -tol) upper_re.push_back(root.re());
  }
  std::sort(upper_re.begin(), upper_re.end(), [](const Real& l, const Real& r) { return l > r; });
  c.partition_covers = xs.front() == one && c.endpoint_minus_one && c.strict_descent &&
                       upper_re.size() == p + 1;
  if (c.partition_covers) {
    for (std::size_t k = 0; k <= p; ++k) {
      if (abs(upper_re[k] - xs[k]) > tol) c.partition_covers = false;
    }
  }

  std::vector<Complex> rebuilt = powers;
  for (std::size_t k = 1; k + 1 <= p; ++k) rebuilt.push_back(complex_conj(powers[k]));
  const auto matched = set_distance(rebuilt, set.roots);
  c.reconstruction_matches = c.p_equals_half_n && matched && *matched <= tol;

  c.lemma1b_exclusion = zeta.a < one && exclusion_min_residual(zeta) > tol;

  cert.xs = std::move(seq.xs);
  return cert;
}

void require_valid(const ZetaCertificate& cert) {
  const auto failed = cert.checks.failed();
  if (failed.empty()) return;
  std::string list;
  for (const auto& name : failed) list += (list.empty() ? "" : ", ") + name;
  throw Error(ErrorKind::CertificateFailure, "n = " + std::to_string(cert.n) + ": " + list);
}

}  // namespace primroot

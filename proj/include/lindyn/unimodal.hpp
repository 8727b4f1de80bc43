// unimodal.hpp — norm-unimodality certificates for shift operators.
//
// An operator is norm-unimodal at rate gamma > 1 when for every m there is
// a vector whose orbit grows at least gamma-geometrically for m steps and
// then decays to zero. For backward shifts the decay leg is exact: any
// finitely supported vector is annihilated after support_len applications,
// so a certificate pins NU-decay as a literal equality rather than a limit.
//
// Witness generation is specific to shifts (it draws on the eigenvector
// field); certification and profiling only need the apply/norm-bound
// contract and accept any LinearOperatorLike.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lindyn/shiftops.hpp"

namespace lindyn {

struct UnimodalCertificate {
  double gamma = 0.0;
  std::int64_t m = 0;
  TruncatedVector witness;
  // ||T^i witness|| for i = 0..support_len (log2 form alongside, since deep
  // orbits overflow doubles while the certificate must stay checkable).
  std::vector<double> orbit;
  std::vector<double> orbit_log2;
  std::int64_t decay_index = 0;  // first i with orbit[i] exactly 0
};

struct CertifyOutcome {
  bool passed = false;
  UnimodalCertificate certificate;  // populated iff passed
  std::int64_t fail_index = -1;     // first i violating the growth bound
  double fail_ratio = 0.0;          // ||T^i x|| / (gamma^i ||x||) at fail_index
};

namespace detail {

template <LinearOperatorLike Op>
UnimodalCertificate make_certificate(const Op& T, const TruncatedVector& x,
                                     double gamma, std::int64_t m) {
  UnimodalCertificate cert;
  cert.gamma = gamma;
  cert.m = m;
  cert.witness = x;
  const auto L = static_cast<std::int64_t>(x.support_len());
  cert.orbit_log2 = orbit_log2_norms(T, x, L);
  cert.orbit.resize(cert.orbit_log2.size());
  for (std::size_t i = 0; i < cert.orbit.size(); ++i) {
    const double lg = cert.orbit_log2[i];
    cert.orbit[i] = std::isinf(lg) && lg < 0 ? 0.0 : std::exp2(lg);
  }
  cert.decay_index = L;
  for (std::int64_t i = 0; i <= L; ++i) {
    if (std::isinf(cert.orbit_log2[static_cast<std::size_t>(i)])) {
      cert.decay_index = i;
      break;
    }
  }
  return cert;
}

}  // namespace detail

// Checks the growth leg for i = 1..m by direct orbit computation and the
// decay leg by finite support. Failure is a value, not an error.
template <LinearOperatorLike Op>
CertifyOutcome certify_nu(const Op& T, const TruncatedVector& x, double gamma,
                          std::int64_t m) {
  if (x.is_zero()) throw std::invalid_argument("witness must be nonzero");
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");

  const double lg_gamma = std::log2(gamma);
  const auto orbit_lg = orbit_log2_norms(T, x, m);
  const double lg_x = orbit_lg[0];

  CertifyOutcome out;
  for (std::int64_t i = 1; i <= m; ++i) {
    // ||T^i x|| >= gamma^i ||x||, compared in log2 with 1e-12 relative slack
    const double lhs = orbit_lg[static_cast<std::size_t>(i)];
    const double rhs = static_cast<double>(i) * lg_gamma + lg_x;
    if (!(lhs >= rhs - 1.5e-12)) {
      out.passed = false;
      out.fail_index = i;
      out.fail_ratio = std::exp2(lhs - rhs);
      return out;
    }
  }
  out.passed = true;
  out.certificate = detail::make_certificate(T, x, gamma, m);
  return out;
}

// Generates a certified witness for (gamma, m). Tries the minimal-support
// basis vector e_m first, then falls back to a truncated eigenvector at
// beta = (gamma + r)/2 with the truncation length searched upward until the
// certificate checks. Throws if gamma is not below the estimated eigen-disk
// radius, or if no witness certifies.
UnimodalCertificate nu_witness(const ShiftOperator& T, double gamma,
                               std::int64_t m);

struct WnuProfile {
  double C = 0.0;
  std::int64_t N = 0;
  double fraction = 0.0;  // #{0 <= i <= N : ||T^i x|| >= C ||x||} / N
  TruncatedVector witness;
};

// Weak norm-unimodality probe: the fraction of the first N+1 orbit entries
// that clear the threshold C ||x||, divided by N (so it may slightly
// exceed 1).
template <LinearOperatorLike Op>
WnuProfile wnu_profile(const Op& T, const TruncatedVector& x, double C,
                       std::int64_t N) {
  if (x.is_zero()) throw std::invalid_argument("witness must be nonzero");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const auto orbit_lg = orbit_log2_norms(T, x, N);
  std::int64_t count = 0;
  if (C <= 0.0) {
    count = N + 1;  // every orbit norm clears a nonpositive threshold
  } else {
    const double threshold = std::log2(C) + orbit_lg[0];
    for (std::int64_t i = 0; i <= N; ++i) {
      if (orbit_lg[static_cast<std::size_t>(i)] >= threshold) ++count;
    }
  }
  WnuProfile out;
  out.C = C;
  out.N = N;
  out.fraction = static_cast<double>(count) / static_cast<double>(N);
  out.witness = x;
  return out;
}

}  // namespace lindyn

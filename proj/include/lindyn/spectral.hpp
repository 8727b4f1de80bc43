// spectral.hpp — eigenvector fields of weighted backward shifts and the
// machinery built on them: eigen-disk radius estimation, least-squares
// approximation from eigenvector atoms, strong-mixing witnesses, and
// periodic approximants at roots of unity.
//
// For a shift with weights w the order-0 eigenvector at omega is
//   k_omega = sum_n  omega^n / (w_1 ... w_n)  e_n,     k_0 = e_0,
// convergent exactly when |omega| < r = lim inf (w_1...w_n)^{1/n}. The open
// disk of radius r is the operator's eigenvalue domain; every operation
// here gates its inputs against a probed estimate of r.

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "lindyn/linalg.hpp"
#include "lindyn/shiftops.hpp"

namespace lindyn {

// Probe length used when an operation needs the disk radius internally.
inline constexpr std::int64_t kDefaultProbeLen = 512;

struct EigenDisk {
  double radius = 0.0;          // central estimate of r
  double estimate_error = 0.0;  // spread over the last quartile of probes
  // Inner radius used for strict membership tests.
  double certified_radius() const { return radius - estimate_error; }
};

struct EigenVector {
  cplx omega{0.0, 0.0};
  std::int64_t order = 0;  // 0 = eigenvector, j >= 1 = j-th omega-derivative
  TruncatedVector vector;
  double tail_bound = 0.0;  // l2 bound on the discarded tail
};

struct MixingCheck {
  std::int64_t k = 0;
  double dist_in = 0.0;   // ||u(k) - x||
  double dist_out = 0.0;  // ||T^k u(k) - y||
};

struct MixingWitness {
  TruncatedVector u;  // u(N)
  std::int64_t k = 0;
  std::int64_t N = 0;
  double eps = 0.0;
  std::vector<std::pair<cplx, EigenVector>> x_part;
  std::vector<std::pair<cplx, EigenVector>> y_part;
  double lambda_bar = 0.0;  // max |lambda_i| < 1
  double rho_bar = 0.0;     // min |rho_j| > 1
  double M = 0.0;           // max of summed component norms
  std::vector<MixingCheck> checks;  // k = N .. N+10, certified
};

struct ApproxResult {
  std::vector<cplx> coefficients;
  double residual = 0.0;
  bool rank_deficient = false;
};

struct PeriodicPoint {
  TruncatedVector point;
  std::int64_t period = 0;
  double dist_to_target = 0.0;
  double period_residual = 0.0;  // ||T^period point - point||
  bool periodic_ok = false;      // residual within tolerance
};

// Radius of the eigenvalue disk: geometric means (w_1...w_n)^{1/n} probed
// for n <= probe_len (log space), Richardson-extrapolated from the tail;
// estimate_error is the spread of the probes over the last quartile.
// Requires probe_len >= 16.
EigenDisk eigen_disk_radius(const ShiftOperator& T, std::int64_t probe_len);

// Order-0 eigenvector at omega, truncated to trunc_len coordinates.
// Requires |omega| < certified disk radius and |omega| <= rho_margin * that
// radius; the discarded tail is bounded geometrically at ratio rho_margin.
EigenVector eigenvector(const ShiftOperator& T, cplx omega,
                        std::int64_t trunc_len, double rho_margin = 0.95);

// Order-j generalized eigenvector: the j-th derivative in omega of the
// eigenvector field, spanning ker(T - omega)^{j+1}.
EigenVector gen_eigenvector(const ShiftOperator& T, cplx omega,
                            std::int64_t order, std::int64_t trunc_len,
                            double rho_margin = 0.95);

// Least-squares fit of target by eigenvectors at the grid points. Grid
// points must lie in the open unit disk and in the eigen disk.
ApproxResult eigen_approximate(const ShiftOperator& T,
                               const TruncatedVector& target,
                               const std::vector<cplx>& grid,
                               std::int64_t trunc_len);

// Equally spaced points on circles of radii {0.3, 0.5, 0.7} * lambda_max.
std::vector<cplx> default_approx_grid(double lambda_max,
                                      std::int64_t per_circle = 8);

// Strong-mixing witness u(k) = x + sum_j rho_j^{-k} y_j for
// x = sum coeff_i k_{lambda_i} (|lambda_i| < 1) and
// y = sum coeff_j k_{rho_j} (|rho_j| > 1, inside the eigen disk).
// Finds the least N with lambda_bar^N < eps/M and rho_bar^-N < eps/M and
// certifies ||u(k) - x|| < eps, ||T^k u(k) - y|| < eps for k = N..N+10.
MixingWitness mixing_witness(const ShiftOperator& T,
                             const std::vector<std::pair<cplx, cplx>>& x_part,
                             const std::vector<std::pair<cplx, cplx>>& y_part,
                             double eps, std::int64_t trunc_len);

// Periodic approximant at the root of unity s = e^{2 pi i p/q}: projects
// target onto span{ gen_eigenvector(s, j) : j < depth } and reports the
// multiple of q that best closes the orbit, with its residual.
PeriodicPoint periodic_approximant(const ShiftOperator& T, std::int64_t p,
                                   std::int64_t q, std::int64_t depth,
                                   const TruncatedVector& target,
                                   std::int64_t trunc_len, double tol = 1e-8);

}  // namespace lindyn

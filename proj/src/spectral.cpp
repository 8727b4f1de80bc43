#include "lindyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lindyn {

namespace {

constexpr double kPi = std::numbers::pi;

double certified_disk_radius(const ShiftOperator& T) {
  return eigen_disk_radius(T, kDefaultProbeLen).certified_radius();
}

// Raw coordinates c_n = omega^n / (w_1...w_n) for n < trunc_len.
std::vector<cplx> eigen_coords(const ShiftOperator& T, cplx omega,
                               std::int64_t trunc_len) {
  std::vector<cplx> c(static_cast<std::size_t>(trunc_len), cplx{0.0, 0.0});
  c[0] = cplx{1.0, 0.0};
  for (std::int64_t n = 1; n < trunc_len; ++n) {
    c[static_cast<std::size_t>(n)] =
        c[static_cast<std::size_t>(n - 1)] * omega / T.weights().at(n);
  }
  return c;
}

}  // namespace

EigenDisk eigen_disk_radius(const ShiftOperator& T, std::int64_t probe_len) {
  if (probe_len < 16) {
    throw std::invalid_argument("probe_len must be >= 16");
  }
  // log2 geometric means a_n = Lambda_n / n; products never materialized.
  std::vector<double> a(static_cast<std::size_t>(probe_len) + 1, 0.0);
  double acc = 0.0;
  for (std::int64_t n = 1; n <= probe_len; ++n) {
    acc += std::log2(T.weights().at(n));
    a[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
  }
  // Richardson-style tail comparison: 2 a_P - a_{P/2} cancels the leading
  // 1/n defect of the geometric-mean sequence.
  const double a_full = a[static_cast<std::size_t>(probe_len)];
  const double a_half = a[static_cast<std::size_t>(probe_len / 2)];
  EigenDisk disk;
  disk.radius = std::exp2(2.0 * a_full - a_half);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::int64_t n = (3 * probe_len) / 4; n <= probe_len; ++n) {
    const double g = std::exp2(a[static_cast<std::size_t>(n)]);
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  }
  disk.estimate_error = hi - lo;
  return disk;
}

EigenVector eigenvector(const ShiftOperator& T, cplx omega,
                        std::int64_t trunc_len, double rho_margin) {
  return gen_eigenvector(T, omega, 0, trunc_len, rho_margin);
}

EigenVector gen_eigenvector(const ShiftOperator& T, cplx omega,
                            std::int64_t order, std::int64_t trunc_len,
                            double rho_margin) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (trunc_len < 1) throw std::invalid_argument("trunc_len must be >= 1");
  if (trunc_len <= order) {
    throw std::invalid_argument("trunc_len must exceed order");
  }
  if (!(rho_margin > 0.0 && rho_margin < 1.0)) {
    throw std::invalid_argument("rho_margin must lie in (0,1)");
  }
  const double r = certified_disk_radius(T);
  const double mod = std::abs(omega);
  if (!(mod < r)) {
    throw std::invalid_argument("outside eigen disk");
  }
  if (mod > rho_margin * r) {
    throw std::invalid_argument(
        "omega violates the tail ratio margin (|omega| > rho_margin * disk "
        "radius)");
  }
  // Eventual coefficient ratio beyond the truncation must stay below the
  // declared margin for the geometric tail bound to be valid.
  const double w_inf = T.weights().inf_from(trunc_len + 1);
  const double q_true = mod / w_inf;
  if (order == 0) {
    if (mod > 0.0 && q_true > rho_margin) {
      throw std::invalid_argument(
          "tail of the eigenvector is not geometrically dominated at this "
          "margin; enlarge rho_margin or trunc_len");
    }
    auto c = eigen_coords(T, omega, trunc_len);
    const double last = std::abs(c.back());
    EigenVector ev;
    ev.omega = omega;
    ev.order = 0;
    ev.tail_bound =
        mod == 0.0 ? 0.0 : last * rho_margin / (1.0 - rho_margin);
    ev.vector = TruncatedVector{std::move(c)};
    return ev;
  }

  // d_n = n(n-1)...(n-order+1) omega^{n-order} / (w_1...w_n), n >= order.
  std::vector<cplx> d(static_cast<std::size_t>(trunc_len), cplx{0.0, 0.0});
  double log2_lead = 0.0;  // log2( order! / (w_1...w_order) )
  for (std::int64_t t = 1; t <= order; ++t) {
    log2_lead += std::log2(static_cast<double>(t)) -
                 std::log2(T.weights().at(t));
  }
  d[static_cast<std::size_t>(order)] = cplx{std::exp2(log2_lead), 0.0};
  for (std::int64_t n = order + 1; n < trunc_len; ++n) {
    const double binom = static_cast<double>(n) /
                         static_cast<double>(n - order);
    d[static_cast<std::size_t>(n)] = d[static_cast<std::size_t>(n - 1)] *
                                     binom * omega / T.weights().at(n);
  }
  const double ratio_inflation =
      static_cast<double>(trunc_len) / static_cast<double>(trunc_len - order);
  const double q_eff = q_true * ratio_inflation;
  if (mod > 0.0 && !(q_eff < 1.0)) {
    throw std::invalid_argument(
        "truncation too short for requested order: tail ratio >= 1");
  }
  const double last = std::abs(d.back());
  EigenVector ev;
  ev.omega = omega;
  ev.order = order;
  ev.tail_bound = mod == 0.0 ? 0.0 : last * q_eff / (1.0 - q_eff);
  ev.vector = TruncatedVector{std::move(d)};
  return ev;
}

ApproxResult eigen_approximate(const ShiftOperator& T,
                               const TruncatedVector& target,
                               const std::vector<cplx>& grid,
                               std::int64_t trunc_len) {
  if (grid.empty()) throw std::invalid_argument("grid must be nonempty");
  if (trunc_len < 1) throw std::invalid_argument("trunc_len must be >= 1");
  for (const cplx& g : grid) {
    if (!(std::abs(g) < 1.0)) {
      throw std::invalid_argument(
          "grid point outside the open unit disk (|lambda| must be < 1)");
    }
  }
  std::vector<TruncatedVector> cols;
  cols.reserve(grid.size());
  for (const cplx& g : grid) {
    cols.push_back(eigenvector(T, g, trunc_len).vector);
  }
  const std::size_t dim = std::max<std::size_t>(
      static_cast<std::size_t>(trunc_len), target.support_len());
  const LsqResult fit = lsq_fit(cols, target, dim);
  ApproxResult out;
  out.coefficients = fit.coefficients;
  out.residual = fit.residual;
  out.rank_deficient = fit.rank_deficient;
  return out;
}

std::vector<cplx> default_approx_grid(double lambda_max,
                                      std::int64_t per_circle) {
  if (!(lambda_max > 0.0)) {
    throw std::invalid_argument("lambda_max must be positive");
  }
  if (per_circle < 1) throw std::invalid_argument("per_circle must be >= 1");
  std::vector<cplx> grid;
  for (double f : {0.3, 0.5, 0.7}) {
    const double rad = f * lambda_max;
    for (std::int64_t t = 0; t < per_circle; ++t) {
      const double ang = 2.0 * kPi * static_cast<double>(t) /
                         static_cast<double>(per_circle);
      grid.push_back(std::polar(rad, ang));
    }
  }
  return grid;
}

MixingWitness mixing_witness(const ShiftOperator& T,
                             const std::vector<std::pair<cplx, cplx>>& x_part,
                             const std::vector<std::pair<cplx, cplx>>& y_part,
                             double eps, std::int64_t trunc_len) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const double r = certified_disk_radius(T);
  double lambda_bar = 0.0;
  for (const auto& [lam, coeff] : x_part) {
    (void)coeff;
    if (!(std::abs(lam) < 1.0)) {
      throw std::domain_error("modulus constraint violated: |lambda| >= 1");
    }
    lambda_bar = std::max(lambda_bar, std::abs(lam));
  }
  double rho_bar = std::numeric_limits<double>::infinity();
  for (const auto& [rho, coeff] : y_part) {
    (void)coeff;
    if (!(std::abs(rho) > 1.0)) {
      throw std::domain_error("modulus constraint violated: |rho| <= 1");
    }
    if (!(std::abs(rho) < r)) {
      throw std::invalid_argument("outside eigen disk");
    }
    rho_bar = std::min(rho_bar, std::abs(rho));
  }

  MixingWitness w;
  w.eps = eps;
  w.lambda_bar = lambda_bar;
  w.rho_bar = rho_bar;

  TruncatedVector x, y;
  double sum_x = 0.0, sum_y = 0.0;
  for (const auto& [lam, coeff] : x_part) {
    EigenVector ev = eigenvector(T, lam, trunc_len);
    ev.vector = scale(coeff, ev.vector);
    ev.tail_bound *= std::abs(coeff);
    sum_x += norm(ev.vector);
    x = add(x, ev.vector);
    w.x_part.emplace_back(lam, std::move(ev));
  }
  for (const auto& [rho, coeff] : y_part) {
    EigenVector ev = eigenvector(T, rho, trunc_len);
    ev.vector = scale(coeff, ev.vector);
    ev.tail_bound *= std::abs(coeff);
    sum_y += norm(ev.vector);
    y = add(y, ev.vector);
    w.y_part.emplace_back(rho, std::move(ev));
  }
  w.M = std::max(sum_x, sum_y);

  // least N >= 1 with lambda_bar^N < eps/M and rho_bar^-N < eps/M
  std::int64_t N = 1;
  if (w.M > 0.0) {
    const double bound = eps / w.M;
    auto ok = [&](std::int64_t k) {
      const bool x_ok = x_part.empty() ||
                        std::pow(lambda_bar, static_cast<double>(k)) < bound;
      const bool y_ok = y_part.empty() ||
                        std::pow(rho_bar, -static_cast<double>(k)) < bound;
      return x_ok && y_ok;
    };
    while (N < (1 << 26) && !ok(N)) ++N;
    if (!ok(N)) throw std::runtime_error("mixing threshold search exhausted");
  }
  w.N = N;
  w.k = N;

  auto make_u = [&](std::int64_t k) {
    TruncatedVector u = x;
    for (const auto& [rho, ev] : w.y_part) {
      const cplx f = std::pow(rho, -static_cast<double>(k));
      u = add(u, scale(f, ev.vector));
    }
    return u;
  };
  w.u = make_u(N);

  for (std::int64_t k = N; k <= N + 10; ++k) {
    const TruncatedVector u = make_u(k);
    MixingCheck chk;
    chk.k = k;
    chk.dist_in = norm(sub(u, x));
    chk.dist_out = norm(sub(T.power_apply(k, u), y));
    if (!(chk.dist_in < eps) || !(chk.dist_out < eps)) {
      throw std::runtime_error(
          "mixing witness certification failed at k = " + std::to_string(k));
    }
    w.checks.push_back(chk);
  }
  return w;
}

PeriodicPoint periodic_approximant(const ShiftOperator& T, std::int64_t p,
                                   std::int64_t q, std::int64_t depth,
                                   const TruncatedVector& target,
                                   std::int64_t trunc_len, double tol) {
  if (q < 1) throw std::invalid_argument("root of unity denominator must be >= 1");
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  // reduce p/q so the period comes out exact
  p = ((p % q) + q) % q;
  const std::int64_t g = std::gcd(p == 0 ? q : p, q);
  p /= g;
  q /= g;
  const double r = certified_disk_radius(T);
  if (!(1.0 < r)) {
    throw std::invalid_argument(
        "root of unity outside eigen disk: the unit circle does not meet the "
        "estimated eigenvalue domain");
  }
  const cplx s = std::polar(1.0, 2.0 * kPi * static_cast<double>(p) /
                                     static_cast<double>(q));

  std::vector<EigenVector> basis;
  std::vector<TruncatedVector> cols;
  for (std::int64_t j = 0; j < depth; ++j) {
    basis.push_back(gen_eigenvector(T, s, j, trunc_len));
    cols.push_back(basis.back().vector);
  }
  const std::size_t dim = std::max<std::size_t>(
      static_cast<std::size_t>(trunc_len), target.support_len());
  const LsqResult fit = lsq_fit(cols, target, dim);

  PeriodicPoint out;
  for (std::int64_t j = 0; j < depth; ++j) {
    out.point = add(out.point, scale(fit.coefficients[static_cast<std::size_t>(j)],
                                     cols[static_cast<std::size_t>(j)]));
  }
  out.dist_to_target = norm(sub(out.point, target));

  // Smallest multiple of q that closes the orbit of the projected point.
  // Components of order >= 1 are not genuinely periodic; the residual is
  // reported honestly instead of being assumed away.
  double best = std::numeric_limits<double>::infinity();
  std::int64_t best_u = 1;
  for (std::int64_t u = 1; u <= depth; ++u) {
    const double res = norm(sub(T.power_apply(q * u, out.point), out.point));
    if (res < best) {
      best = res;
      best_u = u;
    }
    if (best <= tol) break;
  }
  out.period = q * best_u;
  out.period_residual = best;
  out.periodic_ok = best <= tol;
  return out;
}

}  // namespace lindyn

#include "lindyn/scramble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lindyn/unimodal.hpp"

namespace lindyn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log2( sum_t 2^{terms[t]} ), -inf for an empty sum.
double log2_sum_exp2(const std::vector<double>& terms) {
  double m = kNegInf;
  for (double t : terms) m = std::max(m, t);
  if (std::isinf(m) && m < 0) return kNegInf;
  double acc = 0.0;
  for (double t : terms) acc += std::exp2(t - m);
  return m + std::log2(acc);
}

std::vector<double> weight_log2_prefix(const ShiftOperator& T,
                                       std::int64_t n) {
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t t = 1; t <= n; ++t) {
    p[static_cast<std::size_t>(t)] =
        p[static_cast<std::size_t>(t - 1)] + std::log2(T.weights().at(t));
  }
  return p;
}

struct SparsePart {
  std::vector<std::int64_t> idx;  // nonzero coordinate indices, ascending
  std::vector<cplx> val;          // mantissa values times the part's sign
  double scale = 0.0;             // log2 scale of the part
};

// log2 || sum_p T^n part_p || for n = 0..n_max, computed coordinate-wise in
// log2 space so parts of incomparable magnitude combine exactly.
std::vector<double> combined_orbit_log2(
    const ShiftOperator& T,
    const std::vector<std::pair<const TruncatedVector*, double>>& parts,
    std::int64_t n_max) {
  std::vector<SparsePart> sp;
  std::int64_t max_support = 0;
  for (const auto& [vec, sign] : parts) {
    if (vec->is_zero()) continue;
    SparsePart s;
    s.scale = vec->log2_scale();
    for (std::int64_t j = 0;
         j < static_cast<std::int64_t>(vec->support_len()); ++j) {
      const cplx z = vec->coords()[static_cast<std::size_t>(j)];
      if (z == cplx{0.0, 0.0}) continue;
      s.idx.push_back(j);
      s.val.push_back(sign * z);
    }
    max_support =
        std::max(max_support, static_cast<std::int64_t>(vec->support_len()));
    sp.push_back(std::move(s));
  }
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, kNegInf);
  if (sp.empty()) return out;
  const auto prefix = weight_log2_prefix(T, max_support - 1);

  struct Entry {
    std::int64_t out_idx;
    double e;  // log2 magnitude factor
    cplx m;    // mantissa
  };
  std::vector<Entry> entries;
  std::vector<double> group_terms;
  for (std::int64_t n = 0; n <= std::min(n_max, max_support - 1); ++n) {
    entries.clear();
    for (const auto& s : sp) {
      for (std::size_t u = 0; u < s.idx.size(); ++u) {
        const std::int64_t j = s.idx[u];
        if (j < n) continue;
        entries.push_back(
            {j - n,
             s.scale + prefix[static_cast<std::size_t>(j)] -
                 prefix[static_cast<std::size_t>(j - n)],
             s.val[u]});
      }
    }
    if (entries.empty()) continue;
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.out_idx < b.out_idx; });
    group_terms.clear();
    std::size_t i = 0;
    while (i < entries.size()) {
      std::size_t j = i;
      double emax = kNegInf;
      while (j < entries.size() && entries[j].out_idx == entries[i].out_idx) {
        emax = std::max(emax, entries[j].e);
        ++j;
      }
      cplx msum{0.0, 0.0};
      for (std::size_t t = i; t < j; ++t) {
        msum += entries[t].m * std::exp2(entries[t].e - emax);
      }
      const double sq = std::norm(msum);
      if (sq > 0.0) group_terms.push_back(2.0 * emax + std::log2(sq));
      i = j;
    }
    const double lse = log2_sum_exp2(group_terms);
    if (!(std::isinf(lse) && lse < 0)) {
      out[static_cast<std::size_t>(n)] = 0.5 * lse;
    }
  }
  return out;
}

double materialize_log2(double lg) {
  return std::isinf(lg) && lg < 0 ? 0.0 : std::exp2(lg);
}

}  // namespace

EpsRule EpsRule::pow2() { return EpsRule{}; }

EpsRule EpsRule::geometric(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("geometric eps ratio must lie in (0,1)");
  }
  EpsRule r;
  r.kind_ = Kind::kGeometric;
  r.q_ = q;
  return r;
}

EpsRule EpsRule::list(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("eps list must be nonempty");
  EpsRule r;
  r.kind_ = Kind::kList;
  r.values_ = std::move(values);
  return r;
}

double EpsRule::at(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("eps index must be >= 0");
  switch (kind_) {
    case Kind::kPow2:
      return std::exp2(-static_cast<double>(k));
    case Kind::kGeometric:
      return std::pow(q_, static_cast<double>(k));
    case Kind::kList:
      if (k >= static_cast<std::int64_t>(values_.size())) {
        throw std::invalid_argument("eps list too short for requested depth");
      }
      return values_[static_cast<std::size_t>(k)];
  }
  return 0.0;
}

double EpsRule::log2_at(std::int64_t k) const {
  switch (kind_) {
    case Kind::kPow2:
      return -static_cast<double>(k);
    case Kind::kGeometric:
      return static_cast<double>(k) * std::log2(q_);
    case Kind::kList:
      return std::log2(at(k));
  }
  return kNegInf;
}

std::string EpsRule::describe() const {
  char buf[64];
  switch (kind_) {
    case Kind::kPow2:
      return "pow2";
    case Kind::kGeometric:
      std::snprintf(buf, sizeof(buf), "geometric(%.17g)", q_);
      return buf;
    case Kind::kList: {
      std::string s = "list(";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.17g", i ? "," : "", values_[i]);
        s += buf;
      }
      return s + ")";
    }
  }
  return "";
}

EpsRule EpsRule::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s == "pow2") return pow2();
  if (s.rfind("geometric(", 0) == 0 && s.back() == ')') {
    return geometric(std::stod(s.substr(10, s.size() - 11)));
  }
  if (s.rfind("list(", 0) == 0 && s.back() == ')') {
    std::vector<double> vals;
    std::string body = s.substr(5, s.size() - 6);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t used = 0;
      vals.push_back(std::stod(body.substr(pos), &used));
      pos += used;
      if (pos < body.size() && body[pos] == ',') ++pos;
    }
    return list(std::move(vals));
  }
  throw std::invalid_argument("unrecognized eps rule: \"" + text + "\"");
}

ScrambleConstruction build_construction(const ShiftOperator& T, double gamma,
                                        std::int64_t K, const EpsRule& rule) {
  if (K < 1) throw std::invalid_argument("depth K must be >= 1");
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");

  ScrambleConstruction c;
  c.depth = K;
  c.gamma = gamma;
  c.R = T.norm_bound();
  c.eps.resize(static_cast<std::size_t>(K) + 1);
  for (std::int64_t k = 0; k <= K; ++k) {
    c.eps[static_cast<std::size_t>(k)] = rule.at(k);
    if (!(c.eps[static_cast<std::size_t>(k)] > 0.0)) {
      throw std::invalid_argument("eps values must be positive");
    }
    if (k > 0 && !(c.eps[static_cast<std::size_t>(k)] <
                   c.eps[static_cast<std::size_t>(k - 1)])) {
      throw std::invalid_argument("eps values must be strictly decreasing");
    }
  }
  c.points.resize(static_cast<std::size_t>(K) + 1);
  c.N.assign(static_cast<std::size_t>(K) + 1, 0);
  c.N_prime.assign(static_cast<std::size_t>(K) + 1, 0);
  c.M.assign(static_cast<std::size_t>(K) + 1, 0);
  c.log2_norm_target.assign(static_cast<std::size_t>(K) + 1, 0.0);

  const double lg_R = std::log2(c.R);
  const double lg_gamma = std::log2(gamma);

  auto witness_at = [&](std::int64_t stage, std::int64_t m) {
    try {
      return nu_witness(T, gamma, m);
    } catch (const std::exception& e) {
      throw std::runtime_error("witness generation failed at stage " +
                               std::to_string(stage) + ": " + e.what());
    }
  };

  // stage 1: fixed horizon, unit norm, escape index 0
  c.N[1] = 2;
  c.N_prime[1] = 0;
  c.log2_norm_target[1] = 0.0;
  {
    UnimodalCertificate cert = witness_at(1, c.N[1]);
    c.points[1] = rescale_to_log2(cert.witness, 0.0);
  }
  c.M[1] = std::max<std::int64_t>(
      c.N[1] + 1, static_cast<std::int64_t>(c.points[1].support_len()));

  double dense_bytes = 16.0 * static_cast<double>(c.points[1].support_len());
  for (std::int64_t k = 2; k <= K; ++k) {
    const double lg_target = -static_cast<double>(c.M[static_cast<std::size_t>(k - 1)]) * lg_R -
                             static_cast<double>(k) + rule.log2_at(k - 1);
    c.log2_norm_target[static_cast<std::size_t>(k)] = lg_target;

    // least escape index with gamma^n ||x_k|| > 1
    std::int64_t np =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(
                                      std::floor(-lg_target / lg_gamma)) + 1);
    while (np > 1 &&
           (static_cast<double>(np - 1) * lg_gamma + lg_target) > 0.0) {
      --np;
    }
    while (static_cast<double>(np) * lg_gamma + lg_target <= 0.0) ++np;
    c.N_prime[static_cast<std::size_t>(k)] = np;
    // least horizon with (N - N')/N > (k-1)/k, i.e. N > k N'
    c.N[static_cast<std::size_t>(k)] = k * np + 1;

    dense_bytes += 16.0 * static_cast<double>(c.N[static_cast<std::size_t>(k)] + 1);
    if (dense_bytes > 1.2e9) {
      throw std::runtime_error(
          "construction too large to materialize densely at stage " +
          std::to_string(k) + "; reduce the depth K");
    }

    UnimodalCertificate cert = witness_at(k, c.N[static_cast<std::size_t>(k)]);
    c.points[static_cast<std::size_t>(k)] =
        rescale_to_log2(cert.witness, lg_target);
    std::int64_t m = c.N[static_cast<std::size_t>(k)] + 1;
    for (std::int64_t j = 1; j <= k; ++j) {
      m = std::max(m, static_cast<std::int64_t>(
                          c.points[static_cast<std::size_t>(j)].support_len()));
    }
    c.M[static_cast<std::size_t>(k)] = m;
  }

  const ConstructionChecks checks = verify_construction(T, c);
  if (!checks.all()) {
    std::string which;
    if (!checks.eps_decreasing) which += " eps_decreasing";
    if (!checks.norm_schedule) which += " norm_schedule";
    if (!checks.growth) which += " growth";
    if (!checks.escape) which += " escape";
    if (!checks.block_fraction) which += " block_fraction";
    if (!checks.tail_silence) which += " tail_silence";
    if (!checks.ordering) which += " ordering";
    if (!checks.unit_floor) which += " unit_floor";
    if (!checks.tail_sum_quiet) which += " tail_sum_quiet";
    throw std::runtime_error("construction verification failed:" + which);
  }
  return c;
}

ConstructionChecks verify_construction(const ShiftOperator& T,
                                       const ScrambleConstruction& c) {
  ConstructionChecks out;
  const std::int64_t K = c.depth;
  const double lg_gamma = std::log2(c.gamma);

  out.eps_decreasing = true;
  for (std::int64_t k = 0; k <= K; ++k) {
    const double e = c.eps[static_cast<std::size_t>(k)];
    if (!(e > 0.0) || (k > 0 && !(e < c.eps[static_cast<std::size_t>(k - 1)]))) {
      out.eps_decreasing = false;
    }
  }

  // per-stage orbits in log2, up to the stage horizon
  std::vector<std::vector<double>> orbit(static_cast<std::size_t>(K) + 1);
  std::vector<double> lg_norm(static_cast<std::size_t>(K) + 1, kNegInf);
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto& x = c.points[static_cast<std::size_t>(k)];
    orbit[static_cast<std::size_t>(k)] =
        orbit_log2_norms(T, x, c.N[static_cast<std::size_t>(k)]);
    lg_norm[static_cast<std::size_t>(k)] = log2_norm(x);
  }

  // scheduled norms, 1e-12 relative plus representation allowance at the
  // working log2 magnitude
  out.norm_schedule = true;
  for (std::int64_t k = 1; k <= K; ++k) {
    const double target = c.log2_norm_target[static_cast<std::size_t>(k)];
    const double tol = 1.45e-12 + 8.0 * 2.3e-16 * std::abs(target);
    if (!(std::abs(lg_norm[static_cast<std::size_t>(k)] - target) <= tol)) {
      out.norm_schedule = false;
    }
  }

  out.growth = true;
  out.unit_floor = true;
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto& ob = orbit[static_cast<std::size_t>(k)];
    for (std::int64_t i = 1; i <= c.N[static_cast<std::size_t>(k)]; ++i) {
      const double lhs = ob[static_cast<std::size_t>(i)];
      const double rhs = static_cast<double>(i) * lg_gamma + ob[0];
      const double slack =
          1.5e-12 + 8.0 * 2.3e-16 * (std::abs(lhs) + std::abs(rhs));
      if (!(lhs >= rhs - slack)) out.growth = false;
    }
    for (std::int64_t i = c.N_prime[static_cast<std::size_t>(k)];
         i <= c.N[static_cast<std::size_t>(k)]; ++i) {
      if (!(ob[static_cast<std::size_t>(i)] >= -1e-9)) out.unit_floor = false;
    }
  }

  out.escape = true;
  out.block_fraction = true;
  out.ordering = true;
  for (std::int64_t k = 2; k <= K; ++k) {
    const double lt = c.log2_norm_target[static_cast<std::size_t>(k)];
    const std::int64_t np = c.N_prime[static_cast<std::size_t>(k)];
    const std::int64_t N = c.N[static_cast<std::size_t>(k)];
    if (!(static_cast<double>(np) * lg_gamma + lt > 0.0)) out.escape = false;
    if (np > 1 && static_cast<double>(np - 1) * lg_gamma + lt > 0.0) {
      out.escape = false;  // not minimal
    }
    if (!((N - np) * k > (k - 1) * N)) out.block_fraction = false;
    if (N > np + 1 && ((N - 1 - np) * k > (k - 1) * (N - 1))) {
      out.block_fraction = false;  // not minimal
    }
  }
  for (std::int64_t k = 1; k <= K; ++k) {
    const std::int64_t prev_M = k >= 2 ? c.M[static_cast<std::size_t>(k - 1)] : -1;
    if (!(c.M[static_cast<std::size_t>(k)] > c.N[static_cast<std::size_t>(k)] &&
          c.N[static_cast<std::size_t>(k)] > c.N_prime[static_cast<std::size_t>(k)] &&
          c.N_prime[static_cast<std::size_t>(k)] > prev_M)) {
      out.ordering = false;
    }
  }

  // exact silence past M_k: finite supports inside M_k and a literal zero
  // of the shifted vectors
  out.tail_silence = true;
  for (std::int64_t k = 1; k <= K; ++k) {
    for (std::int64_t j = 1; j <= k; ++j) {
      const auto& xj = c.points[static_cast<std::size_t>(j)];
      if (static_cast<std::int64_t>(xj.support_len()) >
          c.M[static_cast<std::size_t>(k)]) {
        out.tail_silence = false;
      }
      if (!T.power_apply(c.M[static_cast<std::size_t>(k)], xj).is_zero()) {
        out.tail_silence = false;
      }
    }
  }

  // finite-depth tail-sum bound: sum_{k>p} ||T^n x_k|| < eps_p on [N'_p, N_p]
  out.tail_sum_quiet = true;
  std::vector<double> terms;
  for (std::int64_t p = 1; p < K; ++p) {
    const double lg_eps = std::log2(c.eps[static_cast<std::size_t>(p)]);
    for (std::int64_t n = c.N_prime[static_cast<std::size_t>(p)];
         n <= c.N[static_cast<std::size_t>(p)]; ++n) {
      terms.clear();
      for (std::int64_t k = p + 1; k <= K; ++k) {
        const auto& ob = orbit[static_cast<std::size_t>(k)];
        if (n < static_cast<std::int64_t>(ob.size())) {
          const double t = ob[static_cast<std::size_t>(n)];
          if (!(std::isinf(t) && t < 0)) terms.push_back(t);
        }
      }
      const double lse = log2_sum_exp2(terms);
      if (!(std::isinf(lse) && lse < 0) && !(lse < lg_eps)) {
        out.tail_sum_quiet = false;
      }
    }
  }
  return out;
}

TruncatedVector symbol_map_f(const ScrambleConstruction& c,
                             const SymbolSequence& xi) {
  if (static_cast<std::int64_t>(xi.bits.size()) > c.depth) {
    throw std::invalid_argument("symbol sequence deeper than the construction");
  }
  TruncatedVector z;
  for (std::int64_t k = 1; k <= c.depth; ++k) {
    if (xi.at(k)) z = add(z, c.points[static_cast<std::size_t>(k)]);
  }
  return z;
}

std::vector<SymbolSequence> pair_family(std::int64_t depth, std::int64_t P) {
  if (P < 2) throw std::invalid_argument("pair family needs P >= 2");
  if (depth < 1) throw std::invalid_argument("pair family needs depth >= 1");
  std::vector<SymbolSequence> fam(static_cast<std::size_t>(P));
  const std::int64_t block = 2 * P;
  for (std::int64_t i = 0; i < P; ++i) {
    auto& s = fam[static_cast<std::size_t>(i)];
    s.bits.resize(static_cast<std::size_t>(depth));
    for (std::int64_t k = 1; k <= depth; ++k) {
      s.bits[static_cast<std::size_t>(k - 1)] =
          ((k - 1) % block == 2 * i + 1) ? 1 : 0;
    }
    s.tail_pattern.resize(static_cast<std::size_t>(block));
    for (std::int64_t pos = 0; pos < block; ++pos) {
      s.tail_pattern[static_cast<std::size_t>(pos)] = (pos == 2 * i + 1) ? 1 : 0;
    }
  }
  return fam;
}

std::vector<SymbolSequence> pair_family(const ScrambleConstruction& c,
                                        std::int64_t P) {
  return pair_family(c.depth, P);
}

PairReport verify_dc_pair(const ShiftOperator& T,
                          const ScrambleConstruction& c,
                          const SymbolSequence& xi, const SymbolSequence& xi2,
                          double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  const std::int64_t K = c.depth;
  PairReport rep;
  rep.theta.resize(static_cast<std::size_t>(K));
  bool any = false;
  for (std::int64_t k = 1; k <= K; ++k) {
    const auto t = static_cast<std::int8_t>(static_cast<int>(xi.at(k)) -
                                            static_cast<int>(xi2.at(k)));
    rep.theta[static_cast<std::size_t>(k - 1)] = t;
    if (t != 0) {
      any = true;
      rep.nonzero_blocks.push_back(k);
    } else {
      rep.zero_blocks.push_back(k);
    }
  }
  if (!any) {
    throw std::invalid_argument("symbol sequences are identical");
  }

  std::vector<std::pair<const TruncatedVector*, double>> parts;
  for (std::int64_t k : rep.nonzero_blocks) {
    parts.emplace_back(&c.points[static_cast<std::size_t>(k)],
                       static_cast<double>(rep.theta[static_cast<std::size_t>(k - 1)]));
  }
  const std::int64_t n_top = c.N[static_cast<std::size_t>(K)];
  const auto d = combined_orbit_log2(T, parts, n_top);

  for (std::int64_t k : rep.nonzero_blocks) {
    BlockNormCheck chk;
    chk.k = k;
    double m = std::numeric_limits<double>::infinity();
    for (std::int64_t n = c.N_prime[static_cast<std::size_t>(k)];
         n <= c.N[static_cast<std::size_t>(k)]; ++n) {
      m = std::min(m, d[static_cast<std::size_t>(n)]);
    }
    chk.log2_value = m;
    chk.value = materialize_log2(m);
    chk.bound = 1.0 - c.eps[static_cast<std::size_t>(k - 1)] -
                c.eps[static_cast<std::size_t>(k)];
    chk.pass = chk.bound <= 0.0 || m > std::log2(chk.bound);
    rep.lower_checks.push_back(chk);
  }
  for (std::int64_t k : rep.zero_blocks) {
    BlockNormCheck chk;
    chk.k = k;
    double m = kNegInf;
    for (std::int64_t n = c.N_prime[static_cast<std::size_t>(k)];
         n <= c.N[static_cast<std::size_t>(k)]; ++n) {
      m = std::max(m, d[static_cast<std::size_t>(n)]);
    }
    chk.log2_value = m;
    chk.value = materialize_log2(m);
    chk.bound = c.eps[static_cast<std::size_t>(k - 1)] +
                c.eps[static_cast<std::size_t>(k)];
    chk.pass = m <= std::log2(chk.bound);
    rep.upper_checks.push_back(chk);
  }

  // distributional samples at n = N_k for both taus
  const double lg_half = std::log2(0.5);
  const double lg_tau = std::log2(tau);
  std::vector<std::int64_t> cnt_half(static_cast<std::size_t>(n_top) + 1, 0);
  std::vector<std::int64_t> cnt_tau(static_cast<std::size_t>(n_top) + 1, 0);
  for (std::int64_t i = 0; i < n_top; ++i) {
    cnt_half[static_cast<std::size_t>(i + 1)] =
        cnt_half[static_cast<std::size_t>(i)] +
        (d[static_cast<std::size_t>(i)] < lg_half ? 1 : 0);
    cnt_tau[static_cast<std::size_t>(i + 1)] =
        cnt_tau[static_cast<std::size_t>(i)] +
        (d[static_cast<std::size_t>(i)] < lg_tau ? 1 : 0);
  }
  auto f_at = [](const std::vector<std::int64_t>& cnt, std::int64_t n) {
    return static_cast<double>(cnt[static_cast<std::size_t>(n)]) /
           static_cast<double>(n);
  };
  rep.f_half.tau = 0.5;
  rep.f_tau.tau = tau;
  for (std::int64_t k = 1; k <= K; ++k) {
    const std::int64_t n = c.N[static_cast<std::size_t>(k)];
    rep.f_half.samples.emplace_back(n, f_at(cnt_half, n));
    rep.f_tau.samples.emplace_back(n, f_at(cnt_tau, n));
  }
  detail::fill_tail_estimates(rep.f_half);
  detail::fill_tail_estimates(rep.f_tau);

  for (std::int64_t k : rep.nonzero_blocks) {
    BlockFractionCheck chk;
    chk.k = k;
    chk.n = c.N[static_cast<std::size_t>(k)];
    chk.f_sample = f_at(cnt_half, chk.n);
    const auto np = static_cast<double>(c.N_prime[static_cast<std::size_t>(k)]);
    const auto nn = static_cast<double>(chk.n);
    chk.bound = np / nn;
    chk.bound_alt = (np + 1.0) / nn;
    chk.applicable = (1.0 - c.eps[static_cast<std::size_t>(k - 1)] -
                      c.eps[static_cast<std::size_t>(k)]) > 0.5;
    chk.pass = !chk.applicable || chk.f_sample <= chk.bound_alt;
    rep.f_caps.push_back(chk);
  }
  for (std::int64_t k : rep.zero_blocks) {
    BlockFractionCheck chk;
    chk.k = k;
    chk.n = c.N[static_cast<std::size_t>(k)];
    chk.f_sample = f_at(cnt_tau, chk.n);
    const auto np = static_cast<double>(c.N_prime[static_cast<std::size_t>(k)]);
    const auto nn = static_cast<double>(chk.n);
    chk.bound = (nn - np) / nn;
    chk.bound_alt = (nn - np + 1.0) / nn;
    chk.applicable = (c.eps[static_cast<std::size_t>(k - 1)] +
                      c.eps[static_cast<std::size_t>(k)]) < tau;
    chk.pass = !chk.applicable || chk.f_sample >= chk.bound;
    rep.f_floors.push_back(chk);
  }

  rep.all_pass = true;
  for (const auto& chk : rep.lower_checks) rep.all_pass &= chk.pass;
  for (const auto& chk : rep.upper_checks) rep.all_pass &= chk.pass;
  for (const auto& chk : rep.f_caps) rep.all_pass &= chk.pass;
  for (const auto& chk : rep.f_floors) rep.all_pass &= chk.pass;
  return rep;
}

}  // namespace lindyn

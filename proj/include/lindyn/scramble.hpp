// scramble.hpp — iterative construction of distributionally chaotic pairs
// for norm-unimodal shift operators, plus the distributional statistics
// F^n that certify them.
//
// The construction produces stages {x_k, N_k, N'_k, M_k} for k = 1..K with
// a fixed norm schedule, geometric orbit growth up to N_k, an escape index
// N'_k past which the orbit norm exceeds 1, a block-fraction inequality
// (N_k - N'_k)/N_k > (k-1)/k, and exact orbit silence past M_k (finite
// support makes the decay condition an equality). Binary symbol sequences
// map to points z = sum xi_k x_k; pairs differing on a block stay far
// apart over [N'_k, N_k] and pairs agreeing there stay close, which the
// distributional fractions F^n(tau) witness at finite depth.
//
// Stage norms shrink like R^{-M_{k-1}}, which leaves double range around
// depth 5; vectors carry a log2 scale (see seqspace) and every orbit
// quantity here is computed stage-wise in log2 space, never through a
// materialized sum of incomparably scaled parts.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lindyn/shiftops.hpp"

namespace lindyn {

// Decreasing positive sequence eps_k, queried for k >= 0.
class EpsRule {
 public:
  // eps_k = 2^-k (the default rule)
  static EpsRule pow2();
  // eps_k = q^k for 0 < q < 1
  static EpsRule geometric(double q);
  // explicit values for k = 0..len-1
  static EpsRule list(std::vector<double> values);

  double at(std::int64_t k) const;
  double log2_at(std::int64_t k) const;

  std::string describe() const;
  static EpsRule parse(const std::string& text);

 private:
  enum class Kind { kPow2, kGeometric, kList };
  Kind kind_ = Kind::kPow2;
  double q_ = 0.5;
  std::vector<double> values_;
};

struct ScrambleConstruction {
  std::int64_t depth = 0;      // K
  double gamma = 0.0;
  double R = 0.0;              // operator norm bound
  std::vector<double> eps;     // eps[k] for k = 0..K
  // Stage arrays indexed 1..K ([0] unused placeholders).
  std::vector<TruncatedVector> points;   // x_k
  std::vector<std::int64_t> N;           // growth horizon
  std::vector<std::int64_t> N_prime;     // escape index
  std::vector<std::int64_t> M;           // silence index
  std::vector<double> log2_norm_target;  // scheduled log2 ||x_k||
};

struct ConstructionChecks {
  bool eps_decreasing = false;
  bool norm_schedule = false;   // ||x_k|| matches the schedule (k >= 2)
  bool growth = false;          // ||T^i x_k|| >= gamma^i ||x_k||, i <= N_k
  bool escape = false;          // gamma^{N'_k} ||x_k|| > 1, minimal such
  bool block_fraction = false;  // (N_k - N'_k)/N_k > (k-1)/k, minimal N_k
  bool tail_silence = false;    // sum_j ||T^n x_j|| == 0 exactly, n >= M_k
  bool ordering = false;        // M_k > N_k > N'_k > M_{k-1}
  bool unit_floor = false;      // ||T^i x_k|| >= 1 on [N'_k, N_k]
  bool tail_sum_quiet = false;  // sum_{k>p} ||T^n x_k|| < eps_p on [N'_p, N_p]
  bool all() const {
    return eps_decreasing && norm_schedule && growth && escape &&
           block_fraction && tail_silence && ordering && unit_floor &&
           tail_sum_quiet;
  }
};

struct SymbolSequence {
  std::vector<std::uint8_t> bits;          // values in {0,1}, k = 1..depth
  std::vector<std::uint8_t> tail_pattern;  // declared periodic continuation

  std::uint8_t at(std::int64_t k) const {  // 1-based
    return k >= 1 && k <= static_cast<std::int64_t>(bits.size())
               ? bits[static_cast<std::size_t>(k - 1)]
               : 0;
  }
};

struct DistributionalStats {
  double tau = 0.0;
  std::vector<std::pair<std::int64_t, double>> samples;  // (n, F^n(tau))
  double F_lower_est = 0.0;  // min over the tail half of the samples
  double F_upper_est = 0.0;  // max over the tail half
};

struct BlockNormCheck {
  std::int64_t k = 0;
  double value = 0.0;       // min (lower) or max (upper) of ||T^n z|| on block
  double log2_value = 0.0;  // exact even when value over/underflows
  double bound = 0.0;
  bool pass = false;
};

struct BlockFractionCheck {
  std::int64_t k = 0;
  std::int64_t n = 0;   // = N_k
  double f_sample = 0.0;
  double bound = 0.0;          // N'_k/N_k (cap) or (N_k - N'_k)/N_k (floor)
  double bound_alt = 0.0;      // the same bound with the +-1 counting slack
  bool applicable = false;     // the block's eps budget activates this bound
  bool pass = false;
};

struct PairReport {
  std::vector<std::int8_t> theta;  // xi_k - xi'_k in {-1,0,1}
  std::vector<std::int64_t> nonzero_blocks;
  std::vector<std::int64_t> zero_blocks;
  std::vector<BlockNormCheck> lower_checks;  // nonzero blocks
  std::vector<BlockNormCheck> upper_checks;  // zero blocks
  DistributionalStats f_half;  // tau = 1/2, the separation side
  DistributionalStats f_tau;   // caller's tau, the proximity side
  std::vector<BlockFractionCheck> f_caps;    // F^{N_k}(1/2) <= N'_k/N_k + slack
  std::vector<BlockFractionCheck> f_floors;  // F^{N_k}(tau) >= (N_k-N'_k)/N_k
  bool all_pass = false;
};

// Executes the stage induction at rate gamma to depth K. Stage 1 uses the
// fixed horizon N_1 = 2 and escape index N'_1 = 0 with ||x_1|| = 1; each
// later stage schedules ||x_k|| = R^{-M_{k-1}} 2^{-k} eps_{k-1}, picks the
// least escape/horizon indices, draws a fresh norm-unimodal witness, and
// closes with the least silence index. All checks are re-verified before
// returning; failures throw naming the stage.
ScrambleConstruction build_construction(const ShiftOperator& T, double gamma,
                                        std::int64_t K, const EpsRule& rule);

// Independent re-verification of every construction invariant.
ConstructionChecks verify_construction(const ShiftOperator& T,
                                       const ScrambleConstruction& c);

// f(xi) = sum_k xi_k x_k. Beware: parts more than ~300 binary orders of
// magnitude below the largest are absorbed by the materialized sum; pair
// verification never goes through this path.
TruncatedVector symbol_map_f(const ScrambleConstruction& c,
                             const SymbolSequence& xi);

// Deterministic family of P sequences on repeating blocks of length 2P:
// sequence i carries a 1 at in-block position 2i+1. Every pair differs on
// two positions per block and agrees on the rest, so differing and
// agreeing indices both recur forever under the declared tails.
std::vector<SymbolSequence> pair_family(std::int64_t depth, std::int64_t P);
std::vector<SymbolSequence> pair_family(const ScrambleConstruction& c,
                                        std::int64_t P);

namespace detail {

inline void fill_tail_estimates(DistributionalStats& s) {
  const std::size_t S = s.samples.size();
  const std::size_t start = S / 2;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = start; i < S; ++i) {
    lo = std::min(lo, s.samples[i].second);
    hi = std::max(hi, s.samples[i].second);
  }
  s.F_lower_est = lo;
  s.F_upper_est = hi;
}

}  // namespace detail

// ||T^i (x - y)|| for i = 0..n_max, via the orbit of the difference.
template <LinearOperatorLike Op>
std::vector<double> distance_series(const Op& T, const TruncatedVector& x,
                                    const TruncatedVector& y,
                                    std::int64_t n_max) {
  return orbit_norms(T, sub(x, y), n_max);
}

// F^n(tau) = #{0 <= i < n : ||T^i(x-y)|| < tau} / n, strict at the
// threshold. The count runs over n indices so the value stays in [0,1];
// this trades the literal inclusive-count convention (which can exceed 1)
// for the distribution-function reading, shifting values by at most 1/n.
template <LinearOperatorLike Op>
double F_n(const Op& T, const TruncatedVector& x, const TruncatedVector& y,
           double tau, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("F_n needs n >= 1");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  const auto d = orbit_log2_norms(T, sub(x, y), n - 1);
  const double lg_tau = std::log2(tau);
  std::int64_t count = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (d[static_cast<std::size_t>(i)] < lg_tau) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(n);
}

// Samples F^n over the window and reports min/max over its tail half as
// finite liminf/limsup surrogates.
template <LinearOperatorLike Op>
DistributionalStats F_bounds(const Op& T, const TruncatedVector& x,
                             const TruncatedVector& y, double tau,
                             const std::vector<std::int64_t>& window) {
  if (window.empty()) throw std::invalid_argument("window must be nonempty");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i] < 1 || (i > 0 && window[i] <= window[i - 1])) {
      throw std::invalid_argument("window must be increasing with entries >= 1");
    }
  }
  const std::int64_t n_top = window.back();
  const auto d = orbit_log2_norms(T, sub(x, y), n_top - 1);
  const double lg_tau = std::log2(tau);
  DistributionalStats s;
  s.tau = tau;
  std::int64_t count = 0;
  std::size_t w = 0;
  for (std::int64_t i = 0; i < n_top; ++i) {
    if (d[static_cast<std::size_t>(i)] < lg_tau) ++count;
    while (w < window.size() && window[w] == i + 1) {
      s.samples.emplace_back(window[w], static_cast<double>(count) /
                                            static_cast<double>(window[w]));
      ++w;
    }
  }
  detail::fill_tail_estimates(s);
  return s;
}

// Certifies that {f(xi), f(xi')} behaves as a distributionally chaotic
// pair at the construction's finite depth: far on differing blocks, close
// on agreeing blocks, with the induced F^{N_k} bounds attached.
PairReport verify_dc_pair(const ShiftOperator& T,
                          const ScrambleConstruction& c,
                          const SymbolSequence& xi, const SymbolSequence& xi2,
                          double tau);

}  // namespace lindyn

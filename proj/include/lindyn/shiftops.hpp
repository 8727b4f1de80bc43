// shiftops.hpp — weighted backward shift operators on truncated sequence
// space: (T v)_j = w_{j+1} v_{j+1} with 1-based positive weights w_n.
//
// The operator norm is not computed; the declared sup of the weights is
// trusted as the bound R and validated lazily on every weight query.

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "lindyn/seqspace.hpp"

namespace lindyn {

// Contract every downstream consumer (certification, orbit statistics)
// actually needs: a bounded linear action on truncated vectors. Weighted
// backward shifts are the concrete model; anything satisfying this plugs in.
template <typename Op>
concept LinearOperatorLike = requires(const Op& t, const TruncatedVector& v) {
  { t.apply(v) } -> std::convertible_to<TruncatedVector>;
  { t.norm_bound() } -> std::convertible_to<double>;
};

// Weight rule: a named closed form or an explicit head list with a constant
// tail. Stateless; queries are pure and safe under concurrent reads.
class WeightSequence {
 public:
  static WeightSequence constant(double c);
  // w_n = (n+1)/n
  static WeightSequence ratio_plus_one();
  // w_n = c (n+1)/n
  static WeightSequence scaled_ratio(double c);
  // explicit head, then w_n = tail_c for n > head.size()
  static WeightSequence list(std::vector<double> head, double tail_c);

  // Overrides the declared sup (validated lazily against queried weights).
  WeightSequence with_declared_sup(double sup) const;

  // 1-based weight value; throws if w_n <= 0 or w_n > declared_sup.
  double at(std::int64_t n) const;
  double declared_sup() const { return declared_sup_; }
  // Infimum of w_n over n >= n0 (exact for every supported form).
  double inf_from(std::int64_t n0) const;

  // Config-format round trip: "constant(2)", "ratio_plus_one",
  // "scaled_ratio(1.5)", "list([0.5,3],tail=constant(2))".
  std::string describe() const;
  static WeightSequence parse(const std::string& text);

 private:
  enum class Kind { kConstant, kRatioPlusOne, kScaledRatio, kList };
  Kind kind_ = Kind::kConstant;
  double c_ = 1.0;  // constant value / ratio scale / list tail constant
  std::vector<double> head_;
  double declared_sup_ = 1.0;

  double raw_at(std::int64_t n) const;
};

class ShiftOperator {
 public:
  explicit ShiftOperator(WeightSequence weights);

  const WeightSequence& weights() const { return weights_; }
  double norm_bound() const { return weights_.declared_sup(); }

  TruncatedVector apply(const TruncatedVector& v) const;

  // T^k in one pass via weight products (log2 space), k >= 0.
  TruncatedVector power_apply(std::int64_t k, const TruncatedVector& v) const;

  // Cumulative log2 weight sum: Lambda(n) = sum_{t=1..n} log2 w_t.
  // Recomputed per call; the operator keeps no mutable state, so reads
  // are concurrency-safe by construction.
  double log2_weight_prefix(std::int64_t n) const;

 private:
  WeightSequence weights_;
};

// ||T^i v|| for i = 0..n_max. Entries i >= support_len(v) are exactly 0.
std::vector<double> orbit_norms(const ShiftOperator& T,
                                const TruncatedVector& v, std::int64_t n_max);

// Same orbit in log2 form (-inf where the orbit is exactly zero). Keeps
// full accuracy when norms leave double range.
std::vector<double> orbit_log2_norms(const ShiftOperator& T,
                                     const TruncatedVector& v,
                                     std::int64_t n_max);

// Generic fallbacks by repeated application, for plugged-in operators.
// The ShiftOperator overloads above win resolution and use weight products.
template <LinearOperatorLike Op>
std::vector<double> orbit_log2_norms(const Op& T, const TruncatedVector& v,
                                     std::int64_t n_max) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  TruncatedVector cur = v;
  for (std::int64_t i = 0; i <= n_max; ++i) {
    out.push_back(log2_norm(cur));
    if (i < n_max) cur = T.apply(cur);
  }
  return out;
}

template <LinearOperatorLike Op>
std::vector<double> orbit_norms(const Op& T, const TruncatedVector& v,
                                std::int64_t n_max) {
  const auto lg = orbit_log2_norms(T, v, n_max);
  std::vector<double> out(lg.size());
  for (std::size_t i = 0; i < lg.size(); ++i) {
    out[i] = std::isinf(lg[i]) && lg[i] < 0 ? 0.0 : std::exp2(lg[i]);
  }
  return out;
}

}  // namespace lindyn

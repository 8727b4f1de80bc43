#include "lindyn/shiftops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lindyn {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

WeightSequence WeightSequence::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant weight must be positive");
  WeightSequence w;
  w.kind_ = Kind::kConstant;
  w.c_ = c;
  w.declared_sup_ = c;
  return w;
}

WeightSequence WeightSequence::ratio_plus_one() {
  WeightSequence w;
  w.kind_ = Kind::kRatioPlusOne;
  w.c_ = 1.0;
  w.declared_sup_ = 2.0;  // w_1 = 2 is the sup
  return w;
}

WeightSequence WeightSequence::scaled_ratio(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("ratio scale must be positive");
  WeightSequence w;
  w.kind_ = Kind::kScaledRatio;
  w.c_ = c;
  w.declared_sup_ = 2.0 * c;
  return w;
}

WeightSequence WeightSequence::list(std::vector<double> head, double tail_c) {
  if (!(tail_c > 0.0)) throw std::invalid_argument("list tail must be positive");
  WeightSequence w;
  w.kind_ = Kind::kList;
  w.head_ = std::move(head);
  w.c_ = tail_c;
  double sup = tail_c;
  for (double h : w.head_) sup = std::max(sup, h);
  w.declared_sup_ = sup;
  return w;
}

WeightSequence WeightSequence::with_declared_sup(double sup) const {
  if (!(sup > 0.0)) throw std::invalid_argument("declared_sup must be positive");
  WeightSequence w = *this;
  w.declared_sup_ = sup;
  return w;
}

double WeightSequence::raw_at(std::int64_t n) const {
  switch (kind_) {
    case Kind::kConstant:
      return c_;
    case Kind::kRatioPlusOne:
      return static_cast<double>(n + 1) / static_cast<double>(n);
    case Kind::kScaledRatio:
      return c_ * static_cast<double>(n + 1) / static_cast<double>(n);
    case Kind::kList:
      if (n <= static_cast<std::int64_t>(head_.size())) {
        return head_[static_cast<std::size_t>(n - 1)];
      }
      return c_;
  }
  return c_;
}

double WeightSequence::at(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("weight index must be >= 1");
  const double w = raw_at(n);
  if (!(w > 0.0)) {
    throw std::domain_error("weight w_" + std::to_string(n) +
                            " is not positive: " + format_double(w));
  }
  if (w > declared_sup_) {
    throw std::domain_error("weight w_" + std::to_string(n) + " = " +
                            format_double(w) + " exceeds declared sup " +
                            format_double(declared_sup_));
  }
  return w;
}

double WeightSequence::inf_from(std::int64_t n0) const {
  n0 = std::max<std::int64_t>(n0, 1);
  switch (kind_) {
    case Kind::kConstant:
      return c_;
    case Kind::kRatioPlusOne:
      return 1.0;  // decreasing to 1
    case Kind::kScaledRatio:
      return c_;
    case Kind::kList: {
      double m = c_;
      for (std::int64_t n = n0;
           n <= static_cast<std::int64_t>(head_.size()); ++n) {
        m = std::min(m, head_[static_cast<std::size_t>(n - 1)]);
      }
      return m;
    }
  }
  return c_;
}

std::string WeightSequence::describe() const {
  switch (kind_) {
    case Kind::kConstant:
      return "constant(" + format_double(c_) + ")";
    case Kind::kRatioPlusOne:
      return "ratio_plus_one";
    case Kind::kScaledRatio:
      return "scaled_ratio(" + format_double(c_) + ")";
    case Kind::kList: {
      std::string s = "list([";
      for (std::size_t i = 0; i < head_.size(); ++i) {
        if (i) s += ",";
        s += format_double(head_[i]);
      }
      s += "],tail=constant(" + format_double(c_) + "))";
      return s;
    }
  }
  return "";
}

WeightSequence WeightSequence::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> WeightSequence {
    throw std::invalid_argument("unrecognized weight spec: \"" + text + "\"");
  };
  if (s == "ratio_plus_one") return ratio_plus_one();
  auto call_arg = [&](const std::string& name) -> std::string {
    // returns inner text of name(...) or empty if no match
    if (s.rfind(name + "(", 0) == 0 && s.back() == ')') {
      return s.substr(name.size() + 1, s.size() - name.size() - 2);
    }
    return "";
  };
  if (std::string a = call_arg("constant"); !a.empty()) {
    return constant(std::stod(a));
  }
  if (std::string a = call_arg("scaled_ratio"); !a.empty()) {
    return scaled_ratio(std::stod(a));
  }
  if (std::string a = call_arg("list"); !a.empty()) {
    // [v1,v2,...],tail=constant(c)
    const auto close = a.find(']');
    if (a.empty() || a.front() != '[' || close == std::string::npos) fail();
    std::vector<double> head;
    std::string body = a.substr(1, close - 1);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) head.push_back(std::stod(tok));
    }
    std::string rest = a.substr(close + 1);
    const std::string prefix = ",tail=constant(";
    if (rest.rfind(prefix, 0) != 0 || rest.back() != ')') fail();
    const double tail_c =
        std::stod(rest.substr(prefix.size(), rest.size() - prefix.size() - 1));
    return list(std::move(head), tail_c);
  }
  return fail();
}

ShiftOperator::ShiftOperator(WeightSequence weights)
    : weights_(std::move(weights)) {}

TruncatedVector ShiftOperator::apply(const TruncatedVector& v) const {
  if (v.support_len() <= 1) return TruncatedVector::zero();
  std::vector<cplx> out(v.support_len() - 1);
  for (std::size_t j = 0; j + 1 < v.support_len(); ++j) {
    out[j] = weights_.at(static_cast<std::int64_t>(j) + 1) * v.coords()[j + 1];
  }
  return TruncatedVector{std::move(out), v.log2_scale()};
}

double ShiftOperator::log2_weight_prefix(std::int64_t n) const {
  double s = 0.0;
  for (std::int64_t t = 1; t <= n; ++t) s += std::log2(weights_.at(t));
  return s;
}

namespace {

// prefix[j] = sum_{t=1..j} log2 w_t, for j = 0..n
std::vector<double> build_prefix(const WeightSequence& w, std::int64_t n) {
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::int64_t t = 1; t <= n; ++t) {
    p[static_cast<std::size_t>(t)] =
        p[static_cast<std::size_t>(t - 1)] + std::log2(w.at(t));
  }
  return p;
}

}  // namespace

TruncatedVector ShiftOperator::power_apply(std::int64_t k,
                                           const TruncatedVector& v) const {
  if (k < 0) throw std::invalid_argument("power_apply exponent must be >= 0");
  if (k == 0) return v;
  const auto L = static_cast<std::int64_t>(v.support_len());
  if (k >= L) return TruncatedVector::zero();

  // (T^k v)_j = (prod_{t=j+1..j+k} w_t) v_{j+k}; products kept in log2 space
  // and the common magnitude factored into the vector scale.
  const auto prefix = build_prefix(weights_, L - 1);
  const std::int64_t out_len = L - k;
  double max_e = kNegInf;
  for (std::int64_t j = 0; j < out_len; ++j) {
    if (v.coords()[static_cast<std::size_t>(j + k)] == cplx{0.0, 0.0}) continue;
    max_e = std::max(max_e, prefix[static_cast<std::size_t>(j + k)] -
                                prefix[static_cast<std::size_t>(j)]);
  }
  if (std::isinf(max_e)) return TruncatedVector::zero();
  std::vector<cplx> out(static_cast<std::size_t>(out_len), cplx{0.0, 0.0});
  for (std::int64_t j = 0; j < out_len; ++j) {
    const cplx z = v.coords()[static_cast<std::size_t>(j + k)];
    if (z == cplx{0.0, 0.0}) continue;
    const double e = prefix[static_cast<std::size_t>(j + k)] -
                     prefix[static_cast<std::size_t>(j)] - max_e;
    out[static_cast<std::size_t>(j)] = z * std::exp2(e);
  }
  return TruncatedVector{std::move(out), v.log2_scale() + max_e};
}

std::vector<double> orbit_norms(const ShiftOperator& T,
                                const TruncatedVector& v, std::int64_t n_max) {
  const auto lg = orbit_log2_norms(T, v, n_max);
  std::vector<double> out(lg.size());
  for (std::size_t i = 0; i < lg.size(); ++i) {
    out[i] = std::isinf(lg[i]) && lg[i] < 0 ? 0.0 : std::exp2(lg[i]);
  }
  return out;
}

std::vector<double> orbit_log2_norms(const ShiftOperator& T,
                                     const TruncatedVector& v,
                                     std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("orbit length must be >= 0");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, kNegInf);
  if (v.is_zero()) return out;
  const auto L = static_cast<std::int64_t>(v.support_len());
  const auto prefix = build_prefix(T.weights(), L - 1);

  // nonzero coordinates only: ||T^n v||^2 = sum over nonzero j >= n of
  //   |v_j|^2 * 2^{2(Lambda_j - Lambda_{j-n})}
  std::vector<std::int64_t> idx;
  std::vector<double> lg2sq;  // log2 |v_j|^2
  for (std::int64_t j = 0; j < L; ++j) {
    const cplx z = v.coords()[static_cast<std::size_t>(j)];
    if (z == cplx{0.0, 0.0}) continue;
    idx.push_back(j);
    lg2sq.push_back(std::log2(std::norm(z)));
  }
  for (std::int64_t n = 0; n <= std::min(n_max, L - 1); ++n) {
    double max_t = kNegInf;
    for (std::size_t u = 0; u < idx.size(); ++u) {
      const std::int64_t j = idx[u];
      if (j < n) continue;
      const double t = lg2sq[u] + 2.0 * (prefix[static_cast<std::size_t>(j)] -
                                         prefix[static_cast<std::size_t>(j - n)]);
      max_t = std::max(max_t, t);
    }
    if (std::isinf(max_t)) continue;
    double acc = 0.0;
    for (std::size_t u = 0; u < idx.size(); ++u) {
      const std::int64_t j = idx[u];
      if (j < n) continue;
      const double t = lg2sq[u] + 2.0 * (prefix[static_cast<std::size_t>(j)] -
                                         prefix[static_cast<std::size_t>(j - n)]);
      acc += std::exp2(t - max_t);
    }
    out[static_cast<std::size_t>(n)] =
        0.5 * (max_t + std::log2(acc)) + v.log2_scale();
  }
  return out;
}

}  // namespace lindyn

// seqspace.hpp — complex truncated sequence vectors with l2 geometry.
//
// A TruncatedVector is a finitely supported complex sequence: coordinates
// 0..L-1 plus implicit zeros beyond. Values are stored as
//   value_i = mantissa_i * 2^log2_scale
// so that vectors whose natural magnitude under- or overflows double
// precision (they appear in deep scrambled-set constructions, where norms
// reach 2^-9000 and below) keep full relative accuracy. Ordinary vectors
// keep log2_scale == 0 and behave exactly like plain complex arrays.

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace lindyn {

using cplx = std::complex<double>;

class TruncatedVector {
 public:
  TruncatedVector() = default;
  explicit TruncatedVector(std::vector<cplx> coords, double log2_scale = 0.0);

  static TruncatedVector zero() { return TruncatedVector{}; }
  // Standard basis vector e_index (coordinate `index` equal to 1).
  static TruncatedVector basis(std::size_t index);

  const std::vector<cplx>& coords() const { return coords_; }
  double log2_scale() const { return log2_scale_; }
  std::size_t support_len() const { return coords_.size(); }
  bool is_zero() const { return coords_.empty(); }

  // Materialized coordinate value, scale applied. May round to 0 or inf
  // when log2_scale is extreme; use mantissa()/log2_scale for exact work.
  cplx at(std::size_t i) const;
  cplx mantissa(std::size_t i) const {
    return i < coords_.size() ? coords_[i] : cplx{0.0, 0.0};
  }

 private:
  std::vector<cplx> coords_;   // trailing zeros trimmed
  double log2_scale_ = 0.0;    // 0 for the zero vector

  void canonicalize();
};

// l2 norm. Overflows honestly to inf/0 for extreme scales.
double norm(const TruncatedVector& v);
// log2 of the l2 norm; -inf for the zero vector. Exact at any scale.
double log2_norm(const TruncatedVector& v);

TruncatedVector add(const TruncatedVector& a, const TruncatedVector& b);
TruncatedVector sub(const TruncatedVector& a, const TruncatedVector& b);
TruncatedVector scale(cplx c, const TruncatedVector& v);

// Positive real multiple of v with norm == target (relative 1e-12).
// Throws std::invalid_argument on the zero vector.
TruncatedVector rescale_to(const TruncatedVector& v, double target);
// Same, with the target given as log2(target); tolerates targets outside
// double range.
TruncatedVector rescale_to_log2(const TruncatedVector& v, double log2_target);

// Equality as norm(a-b) <= atol.
bool approx_equal(const TruncatedVector& a, const TruncatedVector& b,
                  double atol = 1e-12);

// JSON array of [re, im] pairs, e.g. [[1,0],[0.5,-0.25]].
std::string to_json_array(const TruncatedVector& v);
TruncatedVector from_json_array(const std::string& text);

// CSV rows "index,re,im", one per coordinate, with header.
std::string to_csv(const TruncatedVector& v);

}  // namespace lindyn

#include "lindyn/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lindyn {

namespace {

// Mantissa magnitudes are kept inside [2^-kFoldRange, 2^kFoldRange]; folding
// by a power of two is exact in binary floating point, so canonicalization
// never changes the represented values.
constexpr double kFoldRange = 300.0;

double max_abs(const std::vector<cplx>& c) {
  double m = 0.0;
  for (const auto& z : c) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

TruncatedVector::TruncatedVector(std::vector<cplx> coords, double log2_scale)
    : coords_(std::move(coords)), log2_scale_(log2_scale) {
  canonicalize();
}

TruncatedVector TruncatedVector::basis(std::size_t index) {
  std::vector<cplx> c(index + 1, cplx{0.0, 0.0});
  c[index] = cplx{1.0, 0.0};
  return TruncatedVector{std::move(c)};
}

void TruncatedVector::canonicalize() {
  while (!coords_.empty() && coords_.back() == cplx{0.0, 0.0}) {
    coords_.pop_back();
  }
  if (coords_.empty()) {
    log2_scale_ = 0.0;
    return;
  }
  const double m = max_abs(coords_);
  if (!(m > 0.0)) {  // all-zero but not trimmed above only if NaN present
    return;
  }
  const double lg = std::log2(m);
  if (lg > kFoldRange || lg < -kFoldRange) {
    const double shift = std::round(lg);
    const double f = std::exp2(-shift);
    for (auto& z : coords_) z *= f;
    log2_scale_ += shift;
  }
}

cplx TruncatedVector::at(std::size_t i) const {
  if (i >= coords_.size()) return {0.0, 0.0};
  return coords_[i] * std::exp2(log2_scale_);
}

double norm(const TruncatedVector& v) {
  const double ln = log2_norm(v);
  if (std::isinf(ln) && ln < 0) return 0.0;
  return std::exp2(ln);
}

double log2_norm(const TruncatedVector& v) {
  if (v.is_zero()) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (const auto& z : v.coords()) s += std::norm(z);
  return 0.5 * std::log2(s) + v.log2_scale();
}

TruncatedVector add(const TruncatedVector& a, const TruncatedVector& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double s = std::max(a.log2_scale(), b.log2_scale());
  const double fa = std::exp2(a.log2_scale() - s);
  const double fb = std::exp2(b.log2_scale() - s);
  std::vector<cplx> out(std::max(a.support_len(), b.support_len()),
                        cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.support_len(); ++i) out[i] += a.coords()[i] * fa;
  for (std::size_t i = 0; i < b.support_len(); ++i) out[i] += b.coords()[i] * fb;
  return TruncatedVector{std::move(out), s};
}

TruncatedVector sub(const TruncatedVector& a, const TruncatedVector& b) {
  return add(a, scale(cplx{-1.0, 0.0}, b));
}

TruncatedVector scale(cplx c, const TruncatedVector& v) {
  if (v.is_zero() || c == cplx{0.0, 0.0}) return TruncatedVector::zero();
  std::vector<cplx> out = v.coords();
  for (auto& z : out) z *= c;
  return TruncatedVector{std::move(out), v.log2_scale()};
}

TruncatedVector rescale_to(const TruncatedVector& v, double target) {
  if (!(target > 0.0)) {
    throw std::invalid_argument("rescale target must be positive");
  }
  return rescale_to_log2(v, std::log2(target));
}

TruncatedVector rescale_to_log2(const TruncatedVector& v, double log2_target) {
  if (v.is_zero()) {
    throw std::invalid_argument("cannot rescale zero vector");
  }
  // Pure scale arithmetic: the mantissa is untouched, so the result is an
  // exact positive real multiple of v.
  const double shift = log2_target - log2_norm(v);
  return TruncatedVector{v.coords(), v.log2_scale() + shift};
}

bool approx_equal(const TruncatedVector& a, const TruncatedVector& b,
                  double atol) {
  return norm(sub(a, b)) <= atol;
}

std::string to_json_array(const TruncatedVector& v) {
  std::string out = "[";
  char buf[80];
  for (std::size_t i = 0; i < v.support_len(); ++i) {
    const cplx z = v.at(i);
    std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]", z.real(), z.imag());
    if (i) out += ",";
    out += buf;
  }
  out += "]";
  return out;
}

TruncatedVector from_json_array(const std::string& text) {
  std::vector<cplx> coords;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("malformed vector JSON: expected '" +
                                  std::string(1, c) + "'");
    }
    ++pos;
  };
  auto number = [&]() -> double {
    skip_ws();
    std::size_t used = 0;
    double x = std::stod(text.substr(pos), &used);
    pos += used;
    return x;
  };
  expect('[');
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return TruncatedVector::zero();
  }
  while (true) {
    expect('[');
    const double re = number();
    expect(',');
    const double im = number();
    expect(']');
    coords.emplace_back(re, im);
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  return TruncatedVector{std::move(coords)};
}

std::string to_csv(const TruncatedVector& v) {
  std::string out = "index,re,im\n";
  char buf[96];
  for (std::size_t i = 0; i < v.support_len(); ++i) {
    const cplx z = v.at(i);
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, z.real(), z.imag());
    out += buf;
  }
  return out;
}

}  // namespace lindyn

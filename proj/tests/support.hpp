// shared generators for the randomized property tests

#pragma once

#include <complex>
#include <random>
#include <vector>

#include "lindyn/seqspace.hpp"

namespace testgen {

inline std::mt19937& rng() {
  static std::mt19937 gen{20240117u};
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>{lo, hi}(rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>{lo, hi}(rng());
}

inline lindyn::cplx random_cplx(double radius = 4.0) {
  return {uniform(-radius, radius), uniform(-radius, radius)};
}

inline lindyn::TruncatedVector random_vector(int max_len = 12,
                                             double radius = 4.0) {
  const int len = uniform_int(0, max_len);
  std::vector<lindyn::cplx> c(static_cast<std::size_t>(len));
  for (auto& z : c) z = random_cplx(radius);
  return lindyn::TruncatedVector{std::move(c)};
}

inline lindyn::TruncatedVector random_nonzero_vector(int max_len = 12,
                                                     double radius = 4.0) {
  for (;;) {
    auto v = random_vector(max_len, radius);
    if (!v.is_zero()) return v;
  }
}

}  // namespace testgen

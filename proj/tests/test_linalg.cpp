#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lindyn/linalg.hpp"
#include "support.hpp"

using namespace lindyn;

TEST_CASE("exact solve when the target lies in the span") {
  const TruncatedVector c0{{cplx{1, 0}, cplx{0, 0}, cplx{2, 0}}};
  const TruncatedVector c1{{cplx{0, 1}, cplx{1, 0}}};
  const TruncatedVector target =
      add(scale(cplx{2, -1}, c0), scale(cplx{0.5, 0.25}, c1));
  const LsqResult r = lsq_fit({c0, c1}, target, 3);
  CHECK(r.residual <= 1e-12);
  CHECK(std::abs(r.coefficients[0] - cplx{2, -1}) < 1e-10);
  CHECK(std::abs(r.coefficients[1] - cplx{0.5, 0.25}) < 1e-10);
  CHECK_FALSE(r.rank_deficient);
}

TEST_CASE("normal-equation optimality on random overdetermined systems") {
  for (int t = 0; t < 100; ++t) {
    std::vector<TruncatedVector> cols;
    const int ncols = testgen::uniform_int(1, 4);
    const std::size_t dim = 8;
    for (int c = 0; c < ncols; ++c) {
      std::vector<cplx> coords(dim);
      for (auto& z : coords) z = testgen::random_cplx(1.0);
      cols.emplace_back(std::move(coords));
    }
    const TruncatedVector target = testgen::random_vector(8, 1.0);
    const LsqResult r = lsq_fit(cols, target, dim);
    // residual must be orthogonal to every column
    TruncatedVector fit;
    for (int c = 0; c < ncols; ++c) {
      fit = add(fit, scale(r.coefficients[static_cast<std::size_t>(c)],
                           cols[static_cast<std::size_t>(c)]));
    }
    const TruncatedVector resid = sub(target, fit);
    for (int c = 0; c < ncols; ++c) {
      cplx ip{0, 0};
      for (std::size_t i = 0; i < dim; ++i) {
        ip += std::conj(cols[static_cast<std::size_t>(c)].at(i)) * resid.at(i);
      }
      CHECK(std::abs(ip) <= 1e-9);
    }
    CHECK(std::abs(norm(resid) - r.residual) <= 1e-9);
  }
}

TEST_CASE("rank-deficient systems are flagged and still solved") {
  const TruncatedVector c0{{cplx{1, 0}, cplx{2, 0}}};
  const LsqResult dup = lsq_fit({c0, c0}, TruncatedVector::basis(0), 2);
  CHECK(dup.rank_deficient);
  const LsqResult single = lsq_fit({c0}, TruncatedVector::basis(0), 2);
  CHECK(std::abs(dup.residual - single.residual) <= 1e-10);
}

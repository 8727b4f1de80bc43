#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lindyn/seqspace.hpp"
#include "support.hpp"

using namespace lindyn;

TEST_CASE("add: basis sum, identity, inverse") {
  const TruncatedVector a{{cplx{1, 0}}};
  const TruncatedVector b{{cplx{0, 0}, cplx{1, 0}}};
  const TruncatedVector s = add(a, b);
  CHECK(s.support_len() == 2);
  CHECK(s.at(0) == cplx{1, 0});
  CHECK(s.at(1) == cplx{1, 0});

  const TruncatedVector v = testgen::random_vector();
  CHECK(approx_equal(add(v, TruncatedVector::zero()), v, 0.0));

  const TruncatedVector w{{cplx{1, 0}, cplx{2, 0}}};
  const TruncatedVector nw{{cplx{-1, 0}, cplx{-2, 0}}};
  CHECK(add(w, nw).is_zero());
}

TEST_CASE("scale: zero, basis, modulus") {
  const TruncatedVector v = testgen::random_vector();
  CHECK(scale(cplx{0, 0}, v).is_zero());

  const TruncatedVector e0 = TruncatedVector::basis(0);
  CHECK(scale(cplx{2, 0}, e0).at(0) == cplx{2, 0});

  const TruncatedVector ones{{cplx{1, 0}, cplx{1, 0}}};
  const TruncatedVector iv = scale(cplx{0, 1}, ones);
  CHECK(iv.at(0) == cplx{0, 1});
  CHECK(norm(iv) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("norm: basis, pythagorean, zero") {
  CHECK(norm(TruncatedVector::basis(5)) == 1.0);
  CHECK(norm(TruncatedVector{{cplx{3, 0}, cplx{4, 0}}}) ==
        doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(TruncatedVector::zero()) == 0.0);
}

TEST_CASE("rescale_to: examples and zero rejection") {
  const TruncatedVector v{{cplx{3, 0}, cplx{4, 0}}};
  const TruncatedVector u = rescale_to(v, 1.0);
  CHECK(std::abs(u.at(0) - cplx{0.6, 0}) < 1e-12);
  CHECK(std::abs(u.at(1) - cplx{0.8, 0}) < 1e-12);

  const TruncatedVector e2 = rescale_to(TruncatedVector::basis(2), 0.25);
  CHECK(std::abs(e2.at(2) - cplx{0.25, 0}) < 1e-12);

  CHECK_THROWS_WITH_AS(rescale_to(TruncatedVector::zero(), 1.0),
                       "cannot rescale zero vector", std::invalid_argument);
}

TEST_CASE("property: triangle inequality") {
  for (int t = 0; t < 1000; ++t) {
    const auto a = testgen::random_vector();
    const auto b = testgen::random_vector();
    CHECK(norm(add(a, b)) <= norm(a) + norm(b) + 1e-12);
  }
}

TEST_CASE("property: homogeneity of the norm") {
  for (int t = 0; t < 1000; ++t) {
    const auto v = testgen::random_vector();
    const auto c = testgen::random_cplx();
    const double lhs = norm(scale(c, v));
    const double rhs = std::abs(c) * norm(v);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
  }
}

TEST_CASE("property: trailing zero trim changes nothing") {
  for (int t = 0; t < 1000; ++t) {
    auto coords = testgen::random_vector().coords();
    TruncatedVector v{coords};
    coords.resize(coords.size() + static_cast<std::size_t>(testgen::uniform_int(1, 5)),
                  cplx{0, 0});
    TruncatedVector padded{coords};
    CHECK(padded.support_len() == v.support_len());
    CHECK(norm(padded) == norm(v));
    const auto w = testgen::random_vector();
    CHECK(approx_equal(add(padded, w), add(v, w), 0.0));
  }
}

TEST_CASE("scaled representation keeps relative accuracy far below double range") {
  TruncatedVector tiny = rescale_to_log2(TruncatedVector::basis(3), -9408.0);
  CHECK(log2_norm(tiny) == doctest::Approx(-9408.0).epsilon(1e-14));
  CHECK(norm(tiny) == 0.0);  // honest double underflow on materialization
  TruncatedVector doubled = add(tiny, tiny);
  CHECK(log2_norm(doubled) == doctest::Approx(-9407.0).epsilon(1e-14));
}

TEST_CASE("json and csv serialization round trip") {
  for (int t = 0; t < 50; ++t) {
    const auto v = testgen::random_vector();
    const auto back = from_json_array(to_json_array(v));
    CHECK(approx_equal(back, v, 1e-14));
  }
  const TruncatedVector v{{cplx{1, -0.5}, cplx{0, 2}}};
  CHECK(to_csv(v) == "index,re,im\n0,1,-0.5\n1,0,2\n");
  CHECK(from_json_array("[]").is_zero());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lindyn/shiftops.hpp"
#include "support.hpp"

using namespace lindyn;

namespace {

// oracle: k-fold composition of apply
TruncatedVector apply_repeated(const ShiftOperator& T, std::int64_t k,
                               const TruncatedVector& v) {
  TruncatedVector out = v;
  for (std::int64_t i = 0; i < k; ++i) out = T.apply(out);
  return out;
}

}  // namespace

TEST_CASE("weight sequences: values and validation") {
  const auto w2 = WeightSequence::constant(2.0);
  CHECK(w2.at(1) == 2.0);
  CHECK(w2.declared_sup() == 2.0);

  const auto ratio = WeightSequence::ratio_plus_one();
  CHECK(ratio.at(1) == 2.0);
  CHECK(ratio.at(3) == doctest::Approx(4.0 / 3.0));
  CHECK(ratio.declared_sup() == 2.0);

  const auto scaled = WeightSequence::scaled_ratio(2.0);
  CHECK(scaled.at(2) == doctest::Approx(3.0));

  const auto lst = WeightSequence::list({0.5, 3.0}, 2.0);
  CHECK(lst.at(1) == 0.5);
  CHECK(lst.at(2) == 3.0);
  CHECK(lst.at(77) == 2.0);
  CHECK(lst.declared_sup() == 3.0);
  CHECK(lst.inf_from(2) == 2.0);
  CHECK(lst.inf_from(1) == 0.5);

  // lazy validation against a too-small declared sup
  const auto clipped = WeightSequence::constant(2.0).with_declared_sup(1.5);
  CHECK_THROWS_AS(clipped.at(1), std::domain_error);
}

TEST_CASE("weight spec parsing round trips") {
  for (const char* spec :
       {"constant(2)", "ratio_plus_one", "scaled_ratio(1.5)",
        "list([0.5,3],tail=constant(2))"}) {
    const auto w = WeightSequence::parse(spec);
    const auto again = WeightSequence::parse(w.describe());
    CHECK(w.describe() == again.describe());
    CHECK(w.at(1) == again.at(1));
    CHECK(w.at(9) == again.at(9));
  }
  CHECK_THROWS_AS(WeightSequence::parse("banana(3)"), std::invalid_argument);
}

TEST_CASE("apply: kernel, one step, ratio example") {
  const ShiftOperator T2{WeightSequence::constant(2.0)};
  CHECK(T2.apply(TruncatedVector::basis(0)).is_zero());

  const TruncatedVector e1 = TruncatedVector::basis(1);
  const TruncatedVector r = T2.apply(e1);
  CHECK(r.support_len() == 1);
  CHECK(r.at(0) == cplx{2, 0});

  const ShiftOperator Tr{WeightSequence::ratio_plus_one()};
  const TruncatedVector v{{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}}};
  const TruncatedVector rv = Tr.apply(v);
  CHECK(rv.support_len() == 2);
  CHECK(std::abs(rv.at(0) - cplx{2, 0}) < 1e-15);
  CHECK(std::abs(rv.at(1) - cplx{1.5, 0}) < 1e-15);
}

TEST_CASE("orbit_norms examples with the repeated-apply oracle") {
  const ShiftOperator T2{WeightSequence::constant(2.0)};
  const int m = 6;
  const auto orbit = orbit_norms(T2, TruncatedVector::basis(m), m + 3);
  for (int i = 0; i <= m; ++i) {
    CHECK(orbit[static_cast<std::size_t>(i)] ==
          doctest::Approx(std::pow(2.0, i)).epsilon(1e-12));
  }
  CHECK(orbit[m + 1] == 0.0);
  CHECK(orbit[m + 2] == 0.0);

  const auto zero_orbit = orbit_norms(T2, TruncatedVector::zero(), 4);
  for (double x : zero_orbit) CHECK(x == 0.0);

  // w_n = (n+1)/n, v = e_3: (1, 4/3, 2, 4, 0, ...)
  const ShiftOperator Tr{WeightSequence::ratio_plus_one()};
  const auto o3 = orbit_norms(Tr, TruncatedVector::basis(3), 5);
  CHECK(o3[0] == doctest::Approx(1.0));
  CHECK(o3[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(o3[2] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(o3[3] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(o3[4] == 0.0);
  CHECK(o3[5] == 0.0);

  // cross-check against the oracle on random vectors
  for (int t = 0; t < 50; ++t) {
    const auto v = testgen::random_vector(10);
    const auto fast = orbit_norms(Tr, v, 12);
    for (std::int64_t i = 0; i <= 12; ++i) {
      const double slow = norm(apply_repeated(Tr, i, v));
      CHECK(std::abs(fast[static_cast<std::size_t>(i)] - slow) <=
            1e-10 * std::max(1.0, slow));
    }
  }
}

TEST_CASE("power_apply: identity, nilpotence, oracle") {
  const ShiftOperator T2{WeightSequence::constant(2.0)};
  const auto v = testgen::random_nonzero_vector(8);
  CHECK(approx_equal(T2.power_apply(0, v), v, 0.0));
  CHECK(T2.power_apply(static_cast<std::int64_t>(v.support_len()), v).is_zero());

  const TruncatedVector p2 = T2.power_apply(2, TruncatedVector::basis(3));
  CHECK(p2.support_len() == 2);
  CHECK(std::abs(p2.at(1) - cplx{4, 0}) < 1e-12);
  CHECK(approx_equal(p2, apply_repeated(T2, 2, TruncatedVector::basis(3)), 1e-12));
}

TEST_CASE("property: norm bound over random vectors") {
  const ShiftOperator T{WeightSequence::scaled_ratio(1.3)};
  const double R = T.norm_bound();
  for (int t = 0; t < 1000; ++t) {
    const auto v = testgen::random_vector();
    CHECK(norm(T.apply(v)) <= R * norm(v) * (1.0 + 1e-12) + 1e-12);
  }
}

TEST_CASE("property: linearity of apply") {
  const ShiftOperator T{WeightSequence::ratio_plus_one()};
  for (int t = 0; t < 1000; ++t) {
    const auto u = testgen::random_vector();
    const auto v = testgen::random_vector();
    const auto a = testgen::random_cplx(2.0);
    const auto b = testgen::random_cplx(2.0);
    const auto lhs = T.apply(add(scale(a, u), scale(b, v)));
    const auto rhs = add(scale(a, T.apply(u)), scale(b, T.apply(v)));
    CHECK(norm(sub(lhs, rhs)) <= 1e-12 * std::max(1.0, norm(rhs)));
  }
}

TEST_CASE("property: power_apply equals repeated apply up to k = 64") {
  const ShiftOperator T{WeightSequence::list({0.5, 3.0, 1.0, 2.5}, 1.7)};
  for (int t = 0; t < 200; ++t) {
    const auto v = testgen::random_vector(70);
    const auto k = static_cast<std::int64_t>(testgen::uniform_int(0, 64));
    const auto fast = T.power_apply(k, v);
    const auto slow = apply_repeated(T, k, v);
    CHECK(norm(sub(fast, slow)) <= 1e-10 * std::max(1.0, norm(slow)));
  }
}

TEST_CASE("property: finite support annihilation is exact") {
  const ShiftOperator T{WeightSequence::scaled_ratio(2.0)};
  for (int t = 0; t < 200; ++t) {
    const auto v = testgen::random_vector();
    CHECK(T.power_apply(static_cast<std::int64_t>(v.support_len()), v).is_zero());
  }
}

TEST_CASE("orbit_log2_norms tracks orbits far outside double range") {
  const ShiftOperator T{WeightSequence::constant(2.0)};
  const TruncatedVector x = rescale_to_log2(TruncatedVector::basis(2000), -3000.0);
  const auto lg = orbit_log2_norms(T, x, 2001);
  CHECK(lg[0] == doctest::Approx(-3000.0).epsilon(1e-12));
  // ||T^i e_2000|| = 2^i times the starting norm, dead past the support
  CHECK(lg[1500] == doctest::Approx(-1500.0).epsilon(1e-12));
  CHECK(lg[2000] == doctest::Approx(-1000.0).epsilon(1e-12));
  CHECK(lg[2001] == -std::numeric_limits<double>::infinity());
}

TEST_CASE("log2 weight prefix sums the log weights") {
  const ShiftOperator T{WeightSequence::ratio_plus_one()};
  // w_1 ... w_n telescopes to n+1
  CHECK(T.log2_weight_prefix(7) == doctest::Approx(std::log2(8.0)).epsilon(1e-14));
  CHECK(T.log2_weight_prefix(0) == 0.0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lindyn/unimodal.hpp"
#include "support.hpp"

using namespace lindyn;

namespace {

const ShiftOperator& op2() {
  static ShiftOperator T{WeightSequence::constant(2.0)};
  return T;
}

}  // namespace

TEST_CASE("nu_witness: constant weights take the basis witness") {
  const UnimodalCertificate cert = nu_witness(op2(), 1.5, 5);
  CHECK(cert.witness.support_len() == 6);
  CHECK(cert.decay_index == 6);
  CHECK(cert.orbit.size() == 7);
  for (int i = 0; i <= 5; ++i) {
    CHECK(cert.orbit[static_cast<std::size_t>(i)] ==
          doctest::Approx(std::pow(2.0, i)).epsilon(1e-12));
  }
  CHECK(cert.orbit[6] == 0.0);
}

TEST_CASE("nu_witness: gamma above the disk radius is rejected") {
  CHECK_THROWS_AS(nu_witness(op2(), 3.0, 5), std::invalid_argument);
  try {
    nu_witness(op2(), 3.0, 5);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("gamma exceeds eigen disk radius") !=
          std::string::npos);
  }
}

TEST_CASE("nu_witness: scaled ratio weights at gamma = 2") {
  const ShiftOperator T{WeightSequence::scaled_ratio(2.0)};
  const UnimodalCertificate cert = nu_witness(T, 2.0, 10);
  REQUIRE(cert.orbit.size() >= 11);
  for (int i = 1; i <= 10; ++i) {
    CHECK(cert.orbit[static_cast<std::size_t>(i)] / cert.orbit[0] >=
          std::pow(2.0, i) * (1.0 - 1e-12));
  }
  CHECK(cert.orbit.back() == 0.0);
}

TEST_CASE("nu_witness falls back to the eigenvector construction") {
  // w_1 = 0.1 kills every basis witness; the k_beta truncation still works
  const ShiftOperator T{WeightSequence::list({0.1}, 3.0)};
  const UnimodalCertificate cert = nu_witness(T, 1.5, 4);
  const CertifyOutcome chk = certify_nu(T, cert.witness, 1.5, 4);
  CHECK(chk.passed);
  CHECK(cert.witness.support_len() > 5);
}

TEST_CASE("certify_nu: pass and fail examples") {
  CHECK(certify_nu(op2(), TruncatedVector::basis(5), 1.5, 5).passed);

  const CertifyOutcome dead = certify_nu(op2(), TruncatedVector::basis(0), 1.5, 1);
  CHECK_FALSE(dead.passed);
  CHECK(dead.fail_index == 1);
  CHECK(dead.fail_ratio == 0.0);

  const CertifyOutcome slow = certify_nu(op2(), TruncatedVector::basis(5), 2.5, 3);
  CHECK_FALSE(slow.passed);
  CHECK(slow.fail_index == 1);
  CHECK(slow.fail_ratio == doctest::Approx(0.8).epsilon(1e-12));

  CHECK_THROWS_AS(certify_nu(op2(), TruncatedVector::zero(), 1.5, 3),
                  std::invalid_argument);
}

TEST_CASE("wnu_profile examples") {
  const std::int64_t m = 5;
  const WnuProfile a =
      wnu_profile(op2(), TruncatedVector::basis(m), 1.2, m);
  CHECK(a.fraction == doctest::Approx(1.0));

  const WnuProfile b = wnu_profile(op2(), TruncatedVector::basis(0), 2.0, 5);
  CHECK(b.fraction == 0.0);

  const auto x = testgen::random_nonzero_vector();
  const WnuProfile c = wnu_profile(op2(), x, 0.9, 1);
  CHECK(c.fraction >= 1.0);
}

TEST_CASE("property: generator and checker agree") {
  const ShiftOperator Ts{WeightSequence::scaled_ratio(1.7)};
  const ShiftOperator Tl{WeightSequence::list({2.5, 0.8, 2.0}, 2.2)};
  int cases = 0;
  while (cases < 1000) {
    const ShiftOperator* T =
        testgen::uniform_int(0, 2) == 0 ? &op2()
        : testgen::uniform_int(0, 1) == 0 ? &Ts : &Tl;
    const double gamma = testgen::uniform(1.05, 1.6);
    const auto m = static_cast<std::int64_t>(testgen::uniform_int(1, 12));
    const UnimodalCertificate cert = nu_witness(*T, gamma, m);
    CHECK(certify_nu(*T, cert.witness, gamma, m).passed);
    ++cases;
  }
}

TEST_CASE("property: certification is scaling invariant") {
  for (int t = 0; t < 1000; ++t) {
    const auto x = testgen::random_nonzero_vector(8);
    const double gamma = testgen::uniform(1.05, 2.5);
    const auto m = static_cast<std::int64_t>(testgen::uniform_int(1, 6));
    cplx c = testgen::random_cplx(3.0);
    if (std::abs(c) < 1e-3) c = cplx{1.0, 0.5};
    const bool plain = certify_nu(op2(), x, gamma, m).passed;
    const bool scaled = certify_nu(op2(), scale(c, x), gamma, m).passed;
    CHECK(plain == scaled);
  }
}

TEST_CASE("property: certification is monotone in gamma and m") {
  for (int t = 0; t < 1000; ++t) {
    const auto m = static_cast<std::int64_t>(testgen::uniform_int(2, 14));
    const double gamma = testgen::uniform(1.1, 1.9);
    const UnimodalCertificate cert = nu_witness(op2(), gamma, m);
    const double gamma2 = testgen::uniform(1.01, gamma);
    const auto m2 = static_cast<std::int64_t>(testgen::uniform_int(1, static_cast<int>(m)));
    CHECK(certify_nu(op2(), cert.witness, gamma2, m2).passed);
  }
}

TEST_CASE("property: wnu fraction is nonincreasing in C") {
  for (int t = 0; t < 1000; ++t) {
    const auto x = testgen::random_nonzero_vector(10);
    const auto N = static_cast<std::int64_t>(testgen::uniform_int(1, 12));
    const double c1 = testgen::uniform(0.1, 2.0);
    const double c2 = c1 + testgen::uniform(0.0, 2.0);
    CHECK(wnu_profile(op2(), x, c2, N).fraction <=
          wnu_profile(op2(), x, c1, N).fraction);
  }
}

namespace {

// Hand-rolled operator sharing no code with ShiftOperator: doubles each
// coordinate while shifting left. Exercises the plug-in contract.
struct PlainDoublingShift {
  TruncatedVector apply(const TruncatedVector& v) const {
    std::vector<cplx> out;
    for (std::size_t j = 1; j < v.support_len(); ++j) {
      out.push_back(2.0 * v.at(j));
    }
    return TruncatedVector{std::move(out)};
  }
  double norm_bound() const { return 2.0; }
};

static_assert(LinearOperatorLike<PlainDoublingShift>);
static_assert(LinearOperatorLike<ShiftOperator>);

}  // namespace

TEST_CASE("plugged-in operators pass through certification and profiling") {
  const PlainDoublingShift P;
  CHECK(certify_nu(P, TruncatedVector::basis(5), 1.5, 5).passed);
  const CertifyOutcome slow = certify_nu(P, TruncatedVector::basis(5), 2.5, 3);
  CHECK_FALSE(slow.passed);
  CHECK(slow.fail_ratio == doctest::Approx(0.8).epsilon(1e-12));

  for (int t = 0; t < 100; ++t) {
    const auto x = testgen::random_nonzero_vector(8);
    const double gamma = testgen::uniform(1.05, 2.5);
    const auto m = static_cast<std::int64_t>(testgen::uniform_int(1, 6));
    CHECK(certify_nu(P, x, gamma, m).passed ==
          certify_nu(op2(), x, gamma, m).passed);
    const double C = testgen::uniform(0.2, 2.0);
    CHECK(wnu_profile(P, x, C, m).fraction ==
          doctest::Approx(wnu_profile(op2(), x, C, m).fraction));
  }
}

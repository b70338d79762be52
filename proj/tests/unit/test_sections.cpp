#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "oracles.hpp"
#include "theta_monad/sections.hpp"

using namespace theta_monad::sections;
using theta_monad::exactla::RatMatrix;
using theta_monad::exactla::RatVector;
using theta_monad::exactla::Rational;

namespace {

std::size_t span_dim(const std::vector<RatVector>& vs) {
  return oracle::naive_rank(RatMatrix::from_columns(kV2Dim, vs));
}

}  // namespace

TEST_CASE("sampling is deterministic and generic") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::int64_t seed = 1; seed <= 5; ++seed) {
      const auto m = sample_model(n, seed);
      CHECK(m == sample_model(n, seed));
      CHECK(check_genericity(m).all_passed());
    }
  CHECK_FALSE(sample_model(3, 1) == sample_model(3, 2));
}

TEST_CASE("genericity axioms hold by independent rank checks") {
  const auto m = sample_model(5, 7);
  auto w = [&](std::size_t i) { return m.w_basis(i); };
  auto cat = [](std::vector<RatVector> a, const std::vector<RatVector>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  CHECK(span_dim(cat(w(0), w(3))) == 8);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(span_dim(w(i)) == 4);
    for (std::size_t j = i + 1; j < 5; ++j) {
      CHECK(span_dim(cat(w(i), w(j))) == 8);
      for (std::size_t k = j + 1; k < 5; ++k) CHECK(span_dim({m.t(i), m.t(j), m.t(k)}) == 3);
    }
    const RatMatrix b = m.beta(i);
    CHECK(oracle::naive_rank(b) == 3);
    CHECK(theta_monad::exactla::is_zero(b.column(0)));
  }
}

TEST_CASE("forced degeneracies are caught") {
  SECTION("W_1 = W_2 breaks transversality") {
    auto m = sample_model(3, 1);
    m.set_t(1, m.t_raw()[0]);
    m.set_u(1, m.u_raw()[0]);
    const auto r = check_genericity(m);
    CHECK_FALSE(r.passed("transversality"));
    CHECK_FALSE(r.all_passed());
  }
  SECTION("t_3 = t_1 + t_2 breaks triple independence") {
    auto m = sample_model(3, 1);
    IntVector sum(kV2Dim);
    for (std::size_t k = 0; k < kV2Dim; ++k) sum[k] = m.t_raw()[0][k] + m.t_raw()[1][k];
    m.set_t(2, sum);
    CHECK_FALSE(check_genericity(m).passed("triple_independence"));
  }
  SECTION("t_1 = 0") {
    auto m = sample_model(2, 3);
    m.set_t(0, IntVector(kV2Dim, 0));
    CHECK_FALSE(check_genericity(m).passed("t_nonzero"));
  }
}

TEST_CASE("theta products") {
  const auto m = sample_model(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(mul(m, i, 1, 1).coords == m.t(i));
    CHECK(theta_monad::exactla::is_zero(mul(m, i, 0, 5).coords));
    CHECK(mul(m, i, 2, 3).coords == theta_monad::exactla::scale(6, m.t(i)));
    CHECK(mul(m, i, 1, 1).tag == SpaceTag{SpaceKind::V2, 0});
  }
}

TEST_CASE("boundary kills t_i and lift inverts it") {
  const auto m = sample_model(4, 5);
  for (std::size_t i = 0; i < 4; ++i) {
    const SpaceTag wi{SpaceKind::W, i};
    const SectionElement t{wi, {1, 0, 0, 0}};
    CHECK(theta_monad::exactla::is_zero(boundary(m, i, t).coords));
    CHECK(theta_monad::exactla::is_zero(boundary(m, i, SectionElement{wi, {0, 0, 0, 0}}).coords));
    const SectionElement u{wi, {0, 2, -1, 3}};
    const SectionElement ut{wi, {1, 2, -1, 3}};
    CHECK(boundary(m, i, ut) == boundary(m, i, u));

    CHECK(theta_monad::exactla::is_zero(lift(m, i, RatVector{0, 0, 0}).coords));
    for (const RatVector& xi : {RatVector{1, 0, 0}, RatVector{0, 1, 0}, RatVector{Rational(3, 4), -2, 5}}) {
      const auto l = lift(m, i, xi);
      CHECK(l.tag == wi);
      CHECK(l.coords[0] == 0);
      CHECK(boundary(m, i, l).coords == xi);
      SectionElement shifted = l;
      shifted.coords[0] += 7;
      CHECK(boundary(m, i, shifted).coords == xi);
    }
  }
}

TEST_CASE("section elements check their space") {
  const auto m = sample_model(2, 1);
  CHECK_THROWS_AS(SectionElement(SpaceTag{SpaceKind::H1, 0}, {1, 2}), WrongSpace);
  CHECK_THROWS_AS(boundary(m, 0, h1({1, 0, 0})), WrongSpace);
  CHECK_THROWS_AS(boundary(m, 0, SectionElement{SpaceTag{SpaceKind::W, 1}, {0, 1, 0, 0}}), WrongSpace);
  CHECK_THROWS(sample_model(1, 1));
}

TEST_CASE("to_v2 of W elements") {
  const auto m = sample_model(3, 3);
  const SectionElement e{SpaceTag{SpaceKind::W, 1}, {2, 0, 1, 0}};
  const auto basis = m.w_basis(1);
  CHECK(to_v2(m, e) == theta_monad::exactla::add(theta_monad::exactla::scale(2, basis[0]), basis[2]));
}

TEST_CASE("model JSON round-trips") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto m = sample_model(n, 9);
    const auto doc = to_json(m);
    CHECK(model_from_json(nlohmann::json::parse(doc.dump())) == m);
    CHECK(doc["N"] == n);
    CHECK(doc["seed"] == 9);
  }
}

TEST_CASE("retry budget") {
  CHECK_THROWS_AS(sample_model(2, 1, 0), SamplingExhausted);
  CHECK(check_genericity(sample_model(2, 1, 1000)).all_passed());
  CHECK(default_retry_budget() >= 1);
}

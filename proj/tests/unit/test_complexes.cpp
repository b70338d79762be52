#include <catch_amalgamated.hpp>

#include <memory>

#include "oracles.hpp"
#include "theta_monad/complexes.hpp"

using namespace theta_monad::complexes;
using theta_monad::chow::ChernPair;
namespace sections = theta_monad::sections;

namespace {

ModelPtr model(std::size_t n, std::int64_t seed = 1) {
  return std::make_shared<const sections::GenericModel>(sections::sample_model(n, seed));
}

}  // namespace

TEST_CASE("decomposable monads validate") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto m = build_decomposable(model(n));
    CHECK(validate_monad(m).all_passed());
    CHECK(m.objects.a.size() == n - 1);
    CHECK(m.objects.b.size() == 2 * n);
    CHECK(m.objects.c.size() == n - 1);
    CHECK(m.objects.b.size() - m.objects.a.size() - m.objects.c.size() == 2);
    CHECK(m.psi == transpose_via_iota(m.phi));
    for (const auto& row : compose(m))
      for (const auto& e : row) CHECK(theta_monad::exactla::is_zero(e));
  }
}

TEST_CASE("N = 2 with unit scalars") {
  const auto m = build_decomposable(model(2));
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < m.phi.rows(); ++r)
    for (std::size_t c = 0; c < m.phi.cols(); ++c) nonzero += sgn(m.phi(r, c)) != 0;
  CHECK(nonzero == 4);
}

TEST_CASE("scalars must be nonzero") {
  std::vector<Rational> s(4, Rational(1));
  s[0] = 0;
  CHECK_THROWS_AS(build_decomposable(model(2), s), MonadError);
  CHECK_THROWS_AS(build_decomposable(model(2), std::vector<Rational>(3, Rational(1))), MonadError);
  std::vector<Rational> ok{2, Rational(-1, 3), 5, 7};
  CHECK(validate_monad(build_decomposable(model(2), ok)).all_passed());
}

TEST_CASE("psi without the sign flip does not compose to zero") {
  auto m = build_decomposable(model(3));
  for (std::size_t j = 0; j < m.psi.rows(); ++j)
    for (std::size_t i = 0; i < m.objects.pair_count(); ++i) {
      m.psi(j, 2 * i) = m.phi(2 * i + 1, j);
      m.psi(j, 2 * i + 1) = m.phi(2 * i, j);
    }
  const auto r = validate_monad(m);
  CHECK_FALSE(r.passed("composition_zero"));
  bool found = false;
  for (const auto& row : compose(m))
    for (const auto& e : row) found = found || !theta_monad::exactla::is_zero(e);
  CHECK(found);
}

TEST_CASE("zero phi composes to zero but is rejected") {
  auto m = build_decomposable(model(2));
  m.phi = RatMatrix(m.phi.rows(), m.phi.cols());
  m.psi = transpose_via_iota(m.phi);
  const auto r = validate_monad(m);
  CHECK(r.passed("composition_zero"));
  CHECK_FALSE(r.passed("nonzero_entries"));
  CHECK_FALSE(r.all_passed());
}

TEST_CASE("iota transpose") {
  const RatMatrix phi{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
  const RatMatrix psi = transpose_via_iota(phi);
  CHECK(psi == RatMatrix{{3, -1, 7, -5}, {4, -2, 8, -6}});
  CHECK(transpose_via_iota_psi(psi) == -phi);
  CHECK(transpose_via_iota(RatMatrix(4, 3)).is_zero());
}

TEST_CASE("Chern pair of the cohomology bundle") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto c = chern_of_cohomology(build_decomposable(model(n)));
    const auto k = static_cast<std::int64_t>(n);
    CHECK(c == ChernPair{0, 2 * (k - 1)});
    CHECK(theta_monad::chow::twist(c, 1) == ChernPair{2, 2 * k});
    CHECK(theta_monad::chow::discriminant_dot_theta(c) == 6 * (4 * k - 4));
  }
}

TEST_CASE("chain map spaces") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto m = build_decomposable(model(n));
    CHECK(chain_maps(m, m, 0).dim() == 1);
    CHECK(chain_maps(m, m, 1).dim() == oracle::chain_maps_deg1(n));
    CHECK(chain_maps(m, m, 2).dim() == 8 * oracle::sq(n - 1));
  }
}

TEST_CASE("homotopy classes give the q = 0 row of E2") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto m = build_decomposable(model(n, 3));
    CHECK(homotopy_classes(m, 0) == 1);
    CHECK(homotopy_classes(m, 1) == n - 1);
    CHECK(homotopy_classes(m, 2) == oracle::ob_rank(n));
  }
}

TEST_CASE("the Hom complex is a complex") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto m = build_decomposable(model(n, 2));
    HomComplex hc(m, m);
    for (int p = -3; p <= 1; ++p) {
      const RatMatrix dd = hc.differential(p + 1) * hc.differential(p);
      CHECK(dd.is_zero());
    }
    CHECK(hc.layout(0).dim == 2 * oracle::sq(n - 1) + 2 * n);
    CHECK(hc.layout(1).dim == 4 * n * (n - 1));
    CHECK(hc.layout(2).dim == 8 * oracle::sq(n - 1));
    CHECK(hc.layout(-1).dim == 0);
  }
}

TEST_CASE("mismatched models are rejected") {
  const auto a = build_decomposable(model(2, 1));
  const auto b = build_decomposable(model(2, 2));
  CHECK_THROWS_AS(chain_maps(a, b, 0), MonadError);
}

TEST_CASE("monad JSON round-trips") {
  const auto mp = model(3, 4);
  const auto m = build_decomposable(mp, std::vector<Rational>{1, Rational(-2, 3), 4, 5, Rational(7, 2), -1});
  const auto back = monad_from_json(nlohmann::json::parse(to_json(m).dump()), mp);
  CHECK(back.phi == m.phi);
  CHECK(back.psi == m.psi);
  CHECK(back.objects == m.objects);
}

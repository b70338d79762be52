#include <catch_amalgamated.hpp>

#include <numeric>

#include "theta_monad/chow.hpp"
#include "theta_monad/serre.hpp"

using namespace theta_monad::serre;
using theta_monad::chow::ChernPair;
namespace points = theta_monad::points;

TEST_CASE("correspondence Chern pairs") {
  CHECK(correspondence_chern(CurveSpec::generic(2)) == ChernPair{2, 4});
  CHECK(correspondence_chern(CurveSpec::generic(3)) == ChernPair{2, 6});
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto c = correspondence_chern(CurveSpec::generic(n));
    const auto k = static_cast<std::int64_t>(n);
    CHECK(theta_monad::chow::twist(c, -1) == ChernPair{0, 2 * (k - 1)});
    CHECK(theta_monad::chow::existence_gate(c) == theta_monad::chow::Verdict::Exists);
  }
  CHECK_THROWS_AS(correspondence_chern(CurveSpec{}), CurveError);
}

TEST_CASE("stability from containment data") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(stable(CurveSpec::generic(n), 2));
    CHECK(stable(CurveSpec::generic(n), 3));
  }
  CHECK_FALSE(stable(CurveSpec::generic(1), 2));

  const auto g = points::PointGroup::free(2);
  const CurveSpec shared{{CurveSpec::component(g->gen("a1")), CurveSpec::component(g->gen("a1"))}};
  CHECK_FALSE(stable(shared, 2));

  CHECK_THROWS_AS(stable(CurveSpec::generic(2), 4), CurveError);
  CHECK_THROWS_AS(stable(CurveSpec::generic(2), 1), CurveError);
}

TEST_CASE("curve components are checked") {
  CurveSpec::generic(3).check();
  const auto g = points::PointGroup::free(2);
  CurveSpec bad{{CurveComponent{g->gen("a1"), {g->gen("a1")}}}};
  CHECK_THROWS_AS(bad.check(), CurveError);
}

TEST_CASE("family and extension dimensions") {
  CHECK(family_dim(2) == 1);
  CHECK(family_dim(5) == 4);
  CHECK_THROWS_AS(family_dim(1), CurveError);
  CHECK(ext_decomposition_dims(CurveSpec::generic(2)) == std::vector<std::size_t>{1, 1});
  CHECK(ext_decomposition_dims(CurveSpec::generic(4)) == std::vector<std::size_t>{1, 1, 1, 1});
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto d = ext_decomposition_dims(CurveSpec::generic(n));
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == n);
    CHECK(n - family_dim(n) == 1);
  }
}

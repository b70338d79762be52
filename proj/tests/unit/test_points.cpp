#include <catch_amalgamated.hpp>

#include <array>

#include "oracles.hpp"
#include "theta_monad/points.hpp"

using namespace theta_monad::points;

namespace {

PointGroupPtr moduli_like() {
  return PointGroup::create({"a1", "a1p", "a2", "a2p", "b", "bp"},
                            {{1, 1, 0, 0, -1, -1}, {0, 0, 1, 1, -1, -1}});
}

}  // namespace

TEST_CASE("zero tests in the free and relation groups") {
  const auto f = PointGroup::free(3);
  CHECK(is_zero(*f, f->gen("a1") - f->gen("a1")));
  CHECK_FALSE(is_zero(*f, f->gen("a1") - f->gen("a2")));

  const auto g = moduli_like();
  CHECK(is_zero(*g, g->expr({{"a1", 1}, {"a1p", 1}, {"b", -1}, {"bp", -1}})));
  CHECK(g->expr({{"a1", 1}, {"a1p", 1}}) == g->expr({{"a2", 1}, {"a2p", 1}}));
  CHECK_FALSE(g->gen("a1") == g->gen("a2"));
  CHECK(g->rank_of_relations() == 2);
}

TEST_CASE("canonical forms agree for equal expressions") {
  const auto g = moduli_like();
  const auto x = g->gen("a1") * 3 + g->gen("a1p") * 3;
  const auto y = g->gen("b") * 3 + g->gen("bp") * 3;
  CHECK(x.canonical() == y.canonical());
}

TEST_CASE("point group errors") {
  const auto f = PointGroup::free(2);
  const auto g = PointGroup::free(2);
  CHECK_THROWS_AS(f->expr({{"z", 1}}), UnknownGenerator);
  CHECK_THROWS_AS(f->gen("a1") + g->gen("a1"), GroupMismatch);
}

TEST_CASE("ext dimensions of line bundle pairs") {
  const auto f = PointGroup::free(2);
  const auto a1 = f->gen("a1"), a2 = f->gen("a2"), o = f->zero();
  using Dims = std::array<std::int64_t, 4>;
  CHECK(ext_dims({-1, o}, {0, a1}) == Dims{1, 0, 0, 0});
  CHECK(ext_dims({-1, o}, {1, o}) == Dims{8, 0, 0, 0});
  CHECK(ext_dims({0, a1}, {0, a1}) == Dims{1, 3, 3, 1});
  CHECK(ext_dims({0, a1}, {0, a2}) == Dims{0, 0, 0, 0});
  CHECK(ext_dims({1, o}, {-1, o}) == Dims{0, 0, 0, 8});
  CHECK(ext_dims({0, a1}, {0, -a1}) == Dims{0, 0, 0, 0});
}

TEST_CASE("ext dimensions obey Serre duality and Riemann-Roch") {
  const auto f = PointGroup::free(2);
  const std::array<PointExpr, 3> pts{f->zero(), f->gen("a1"), f->gen("a1") - f->gen("a2")};
  for (std::int64_t m1 = -3; m1 <= 3; ++m1)
    for (std::int64_t m2 = -3; m2 <= 3; ++m2)
      for (const auto& x1 : pts)
        for (const auto& x2 : pts) {
          const LineBundleLabel l1{m1, x1}, l2{m2, x2};
          const auto d = ext_dims(l1, l2);
          const auto dual = ext_dims(l2, l1);
          for (std::size_t q = 0; q < 4; ++q) CHECK(d[q] == dual[3 - q]);
          CHECK(d[0] - d[1] + d[2] - d[3] == oracle::chi_line(m2 - m1));
        }
}

TEST_CASE("labels compare through the group") {
  const auto g = moduli_like();
  const LineBundleLabel l1{1, g->gen("a1") + g->gen("a1p")};
  const LineBundleLabel l2{1, g->gen("b") + g->gen("bp")};
  CHECK(l1 == l2);
  CHECK_FALSE(l1 == LineBundleLabel{0, g->gen("b") + g->gen("bp")});
}

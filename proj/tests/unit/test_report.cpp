#include <catch_amalgamated.hpp>

#include <memory>

#include "oracles.hpp"
#include "theta_monad/report.hpp"

using namespace theta_monad::report;
using theta_monad::chow::Verdict;
namespace sections = theta_monad::sections;

namespace {

theta_monad::complexes::ModelPtr model(std::size_t n, std::int64_t seed) {
  return std::make_shared<const sections::GenericModel>(sections::sample_model(n, seed));
}

}  // namespace

TEST_CASE("hyperext report contents") {
  const auto r = analyze(model(3, 2));
  CHECK(r.n == 3);
  CHECK(r.seed == 2);
  CHECK(r.e1_dims == oracle::e1(3));
  CHECK(r.e2_dims == oracle::e2(3));
  CHECK(r.e3_dims == oracle::e3(3));
  CHECK(r.e2_dims[0][4] == 23);
  CHECK(r.ob_rank == 23);
  CHECK(r.ob_kernel == 19);
  CHECK(r.ext_dims == std::array<std::size_t, 4>{1, 21, 21, 1});
  CHECK(r.ext1_formula == 21);
  CHECK(r.chain_maps_deg1 == 15);
  CHECK(r.degenerate);
  CHECK(r.formula_match);
  CHECK(r.serre_symmetric == std::array<bool, 3>{true, true, true});
}

TEST_CASE("hyperext report round-trips through JSON text") {
  const auto r = analyze(model(2, 1));
  const auto text = to_json(r).dump(2);
  CHECK(hyperext_from_json(nlohmann::json::parse(text)) == r);
  CHECK(to_json(analyze(model(2, 1))).dump(2) == text);
}

TEST_CASE("existence table") {
  const auto t = existence_table(0, 4, 0, 10);
  CHECK(t.cells.size() == 5 * 11);
  CHECK(t.at(2, 4) == Verdict::Exists);
  CHECK(t.at(2, 2) == Verdict::BoundarySemihomogeneous);
  CHECK(t.at(1, 2) == Verdict::UnknownHalf);
  CHECK_THROWS_AS(existence_table(3, 2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(existence_table(0, 1, 5, 4), std::invalid_argument);
  CHECK_THROWS(t.at(9, 0));
}

TEST_CASE("existence table round-trips") {
  const auto t = existence_table(-6, 6, 0, 40);
  const auto back = existence_from_json(nlohmann::json::parse(to_json(t).dump()));
  CHECK(back == t);
  for (auto v : {Verdict::Exists, Verdict::BoundarySemihomogeneous, Verdict::UnknownHalf, Verdict::OutsideBogomolov})
    CHECK(verdict_from_string(std::string(theta_monad::chow::to_string(v))) == v);
  CHECK_THROWS(verdict_from_string("MAYBE"));
}

TEST_CASE("moduli2 report round-trips") {
  const auto r = moduli2_report(3, 10);
  CHECK(r.dims.p == 13);
  CHECK(r.sweep.agreements == 10);
  const auto text = to_json(r).dump();
  CHECK(moduli2_from_json(nlohmann::json::parse(text)) == r);
  CHECK(to_json(moduli2_report(3, 10)).dump() == text);
}

TEST_CASE("text renderings are fixed and nonempty") {
  const auto r = analyze(model(2, 1));
  CHECK(render_text(r) == render_text(analyze(model(2, 1))));
  CHECK(render_text(r).find("13") != std::string::npos);
  const auto t = render_text(existence_table(0, 4, 0, 10));
  CHECK(t.find('E') != std::string::npos);
  CHECK_FALSE(render_text(moduli2_report(1, 2)).empty());
}

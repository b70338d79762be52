#include "theta_monad/serre.hpp"

#include <algorithm>

namespace theta_monad::serre {

CurveComponent CurveSpec::component(const PointExpr& a) { return {a, {a, -a}}; }

CurveSpec CurveSpec::generic(std::size_t n) {
  const auto g = points::PointGroup::free(n);
  CurveSpec c;
  for (std::size_t i = 0; i < n; ++i) c.components.push_back(component(g->gen(i)));
  return c;
}

namespace {

bool member(const std::vector<PointExpr>& set, const PointExpr& x) {
  return std::any_of(set.begin(), set.end(), [&](const PointExpr& y) { return y == x; });
}

}  // namespace

void CurveSpec::check() const {
  for (const auto& comp : components) {
    const bool ok = member(comp.containing, comp.a) && member(comp.containing, -comp.a) &&
                    std::all_of(comp.containing.begin(), comp.containing.end(), [&](const PointExpr& x) {
                      return x == comp.a || x == -comp.a;
                    });
    if (!ok) throw CurveError("component over " + comp.a.to_string() + " must lie in exactly Theta_{+-a}");
  }
}

chow::ChernPair correspondence_chern(const CurveSpec& c) {
  if (c.components.empty()) throw CurveError("empty curve");
  return {2, 2 * static_cast<std::int64_t>(c.components.size())};
}

bool stable(const CurveSpec& c, int m) {
  if (m != 2 && m != 3) throw CurveError("stability is only decided for m = 2 or 3");
  if (c.components.empty()) throw CurveError("empty curve");
  std::vector<PointExpr> common = c.components.front().containing;
  for (std::size_t i = 1; i < c.components.size(); ++i) {
    std::vector<PointExpr> kept;
    for (const auto& x : common)
      if (member(c.components[i].containing, x)) kept.push_back(x);
    common = std::move(kept);
  }
  return common.empty();
}

std::size_t family_dim(std::size_t n) {
  if (n < 2) throw CurveError("the family needs at least two components");
  return n - 1;
}

std::vector<std::size_t> ext_decomposition_dims(const CurveSpec& c) {
  return std::vector<std::size_t>(c.components.size(), 1);
}

}  // namespace theta_monad::serre

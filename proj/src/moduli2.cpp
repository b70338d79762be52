#include "theta_monad/moduli2.hpp"

#include <algorithm>
#include <mutex>

#include "theta_monad/chow.hpp"

namespace theta_monad::moduli2 {

using complexes::GradedObject;
using exactla::RatMatrix;

points::PointGroupPtr moduli_group() {
  static std::once_flag once;
  static points::PointGroupPtr g;
  std::call_once(once, [] {
    g = points::PointGroup::create({"a1", "a1p", "a2", "a2p", "b", "bp"},
                                   {{1, 1, 0, 0, -1, -1}, {0, 0, 1, 1, -1, -1}});
  });
  return g;
}

Sixtuple Sixtuple::generic() {
  const auto g = moduli_group();
  return {g->gen("a1"), g->gen("a1p"), g->gen("a2"), g->gen("a2p"), g->gen("b"), g->gen("bp")};
}

bool Sixtuple::relations_hold() const {
  return a1 + a1p == b + bp && a2 + a2p == b + bp;
}

bool Sixtuple::in_T() const {
  if (!relations_hold()) return false;
  const std::array<const PointExpr*, 4> v{&a1, &a1p, &a2, &a2p};
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (*v[i] == *v[j]) return false;
  return true;
}

bool Sixtuple::operator==(const Sixtuple& o) const {
  return a1 == o.a1 && a1p == o.a1p && a2 == o.a2 && a2p == o.a2p && b == o.b && bp == o.bp;
}

Sixtuple act(GGen g, const Sixtuple& s) {
  switch (g) {
    case GGen::S1: return {s.a1p, s.a1, s.a2, s.a2p, s.b, s.bp};
    case GGen::S2: return {s.a1, s.a1p, s.a2p, s.a2, s.b, s.bp};
    case GGen::Tau: return {s.a2, s.a2p, s.a1, s.a1p, s.b, s.bp};
  }
  throw std::logic_error("unknown G generator");
}

Sixtuple act(const GWord& w, Sixtuple s) {
  for (GGen g : w) s = act(g, s);
  return s;
}

ScalarQuad act(GGen g, const ScalarQuad& q) {
  switch (g) {
    case GGen::S1: return {q[1], -q[0], q[2], q[3]};
    case GGen::S2: return {q[0], q[1], q[3], -q[2]};
    case GGen::Tau: return {q[2], q[3], q[0], q[1]};
  }
  throw std::logic_error("unknown G generator");
}

ScalarQuad act(const GWord& w, ScalarQuad q) {
  for (GGen g : w) q = act(g, q);
  return q;
}

namespace {

std::array<std::size_t, 4> b_permutation(GGen g) {
  switch (g) {
    case GGen::S1: return {1, 0, 2, 3};
    case GGen::S2: return {0, 1, 3, 2};
    case GGen::Tau: return {2, 3, 0, 1};
  }
  throw std::logic_error("unknown G generator");
}

}  // namespace

Monad relabel(GGen g, const Monad& m) {
  if (m.objects.b.size() != 4) throw ModuliError("relabeling needs a monad with four middle summands");
  const auto perm = b_permutation(g);
  Monad out = m;
  for (std::size_t s = 0; s < 4; ++s) {
    out.objects.b[s] = m.objects.b[perm[s]];
    for (std::size_t k = 0; k < m.phi.cols(); ++k) out.phi(s, k) = m.phi(perm[s], k);
    for (std::size_t j = 0; j < m.psi.rows(); ++j) out.psi(j, s) = m.psi(j, perm[s]);
  }
  return out;
}

Monad relabel(const GWord& w, Monad m) {
  for (GGen g : w) m = relabel(g, m);
  return m;
}

std::vector<GWord> g_elements() {
  std::vector<GWord> out;
  for (int e1 = 0; e1 < 2; ++e1)
    for (int e2 = 0; e2 < 2; ++e2)
      for (int f = 0; f < 2; ++f) {
        GWord w;
        if (e1) w.push_back(GGen::S1);
        if (e2) w.push_back(GGen::S2);
        if (f) w.push_back(GGen::Tau);
        out.push_back(std::move(w));
      }
  return out;
}

std::vector<Sixtuple> g_orbit(const Sixtuple& s) {
  std::vector<Sixtuple> orbit{s};
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (GGen g : {GGen::S1, GGen::S2, GGen::Tau}) {
      Sixtuple t = act(g, orbit[k]);
      if (std::none_of(orbit.begin(), orbit.end(), [&](const Sixtuple& u) { return u == t; }))
        orbit.push_back(std::move(t));
    }
  return orbit;
}

std::pair<Rational, Rational> gamma_normal_form(const ScalarQuad& q) {
  for (const auto& x : q)
    if (sgn(x) == 0) throw ModuliError("section scalars must be nonzero");
  const Rational v1 = q[0] * q[1];
  const Rational v2 = q[2] * q[3];
  return {Rational(1), Rational(v2 / v1)};
}

GradedObject objects_of(const Sixtuple& s) {
  GradedObject g;
  g.a = {{-1, s.bp}};
  g.b = {{0, s.a1}, {0, s.a1p}, {0, s.a2}, {0, s.a2p}};
  g.c = {{1, s.b}};
  g.b_slots = {{0, +1}, {0, -1}, {1, +1}, {1, -1}};
  return g;
}

Monad standard_monad(ModelPtr model, const Sixtuple& s, const ScalarQuad& q) {
  if (!model || model->n() != 2) throw ModuliError("the N = 2 monad needs a model with two pairs");
  if (!s.in_T()) throw ModuliError("sixtuple is outside T");
  for (const auto& x : q)
    if (sgn(x) == 0) throw ModuliError("section scalars must be nonzero");
  RatMatrix phi(4, 1);
  for (std::size_t s_ = 0; s_ < 4; ++s_) phi(s_, 0) = q[s_];
  return complexes::build_from_phi(std::move(model), objects_of(s), std::move(phi));
}

bool iso_test(const Monad& m1, const Monad& m2) {
  if (!(m1.objects == m2.objects)) throw ModuliError("iso_test compares monads on the same objects only");
  return complexes::chain_maps(m1, m2, 0).dim() == 1;
}

ModuliDims moduli_dims() {
  const auto g = moduli_group();
  const auto& rel = g->relations();
  const std::size_t gens = g->generators().size();
  const std::size_t dim_x = 3;

  // Tangent space of T inside X^6: kernel of (relations tensor I_3).
  RatMatrix jac(rel.size() * dim_x, gens * dim_x);
  for (std::size_t r = 0; r < rel.size(); ++r)
    for (std::size_t c = 0; c < gens; ++c)
      for (std::size_t k = 0; k < dim_x; ++k) jac(r * dim_x + k, c * dim_x + k) = Rational(rel[r][c]);
  ModuliDims d;
  d.t = gens * dim_x - exactla::rank(jac);
  if (d.t != gens * dim_x - dim_x * g->rank_of_relations())
    throw std::logic_error("relation rank disagrees with the Hermite form");

  // Gamma: lambda1 lambda1' = lambda2 lambda2' inside the 4-torus.
  d.gamma = 4 - exactla::rank(RatMatrix{{1, 1, -1, -1}});
  d.p = d.t + (4 - d.gamma);
  d.g_order = g_orbit(Sixtuple::generic()).size();
  if (static_cast<std::int64_t>(d.p) != chow::ext1_dim_formula({0, 2}))
    throw std::logic_error("P dimension disagrees with the Ext^1 formula at N = 2");
  return d;
}

namespace {

PointExpr random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto g = moduli_group();
  std::vector<std::int64_t> c(g->generators().size());
  for (auto& x : c) x = coeff(rng);
  return PointExpr(g, std::move(c));
}

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::bernoulli_distribution neg(0.5);
  Rational x(num(rng), den(rng));
  x.canonicalize();
  return neg(rng) ? Rational(-x) : x;
}

}  // namespace

Sixtuple random_sixtuple(std::mt19937_64& rng) {
  while (true) {
    const PointExpr a1 = random_point(rng);
    const PointExpr a2 = random_point(rng);
    const PointExpr b = random_point(rng);
    const PointExpr bp = random_point(rng);
    Sixtuple s{a1, b + bp - a1, a2, b + bp - a2, b, bp};
    if (s.in_T()) return s;
  }
}

ScalarQuad random_quad(std::mt19937_64& rng) {
  ScalarQuad q;
  for (auto& x : q) x = random_nonzero(rng);
  return q;
}

ScalarQuad random_gamma_translate(std::mt19937_64& rng, const ScalarQuad& q) {
  const Rational l1 = random_nonzero(rng);
  const Rational l1p = random_nonzero(rng);
  const Rational l2 = random_nonzero(rng);
  const Rational l2p = l1 * l1p / l2;
  return {q[0] * l1, q[1] * l1p, q[2] * l2, q[3] * l2p};
}

PairSweep random_pairs(ModelPtr model, std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  const auto words = g_elements();
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  PairSweep sweep;
  for (std::size_t t = 0; t < trials; ++t) {
    const Sixtuple s = random_sixtuple(rng);
    const ScalarQuad q1 = random_quad(rng);
    const ScalarQuad q2 = (t % 2 == 0) ? random_gamma_translate(rng, q1) : random_quad(rng);
    const Monad m1 = standard_monad(model, s, q1);
    const Monad m2 = standard_monad(model, s, q2);

    const bool iso = iso_test(m1, m2);
    const bool same_form = gamma_normal_form(q1) == gamma_normal_form(q2);
    ++sweep.trials;
    if (iso == same_form) ++sweep.agreements;
    if (iso) ++sweep.isomorphic;

    const GWord& w = words[pick(rng)];
    if (iso_test(relabel(w, m1), standard_monad(model, act(w, s), act(w, q1)))) ++sweep.g_compatible;
    ++sweep.orbit_sizes[g_orbit(s).size()];
  }
  return sweep;
}

}  // namespace theta_monad::moduli2

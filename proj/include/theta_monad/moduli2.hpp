#pragma once

// N = 2: points (a1, a1', a2, a2', b, b') with a1 + a1' = a2 + a2' = b + b',
// the group G generated by a1 <-> a1', a2 <-> a2' and the block swap, and the
// torus Gamma acting on the four section scalars.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "theta_monad/complexes.hpp"
#include "theta_monad/points.hpp"

namespace theta_monad::moduli2 {

using complexes::Monad;
using complexes::ModelPtr;
using exactla::Rational;
using points::PointExpr;

class ModuliError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Generators a1, a1p, a2, a2p, b, bp with the two relations. Every call
// returns the same instance.
points::PointGroupPtr moduli_group();

struct Sixtuple {
  PointExpr a1, a1p, a2, a2p, b, bp;

  // The tautological sixtuple of generators.
  static Sixtuple generic();
  bool relations_hold() const;
  // Relations hold and a1, a1', a2, a2' are pairwise distinct.
  bool in_T() const;
  bool operator==(const Sixtuple& o) const;
};

// Section scalars (theta1, theta1', theta2, theta2').
using ScalarQuad = std::array<Rational, 4>;

enum class GGen { S1, S2, Tau };
using GWord = std::vector<GGen>;  // applied left to right

Sixtuple act(GGen g, const Sixtuple& s);
Sixtuple act(const GWord& w, Sixtuple s);
// The action lifted to scalars: s1 (t1, t1', t2, t2') = (t1', -t1, t2, t2'),
// tau swaps the blocks.
ScalarQuad act(GGen g, const ScalarQuad& q);
ScalarQuad act(const GWord& w, ScalarQuad q);
// Reorders B of a monad the way g reorders its labels.
Monad relabel(GGen g, const Monad& m);
Monad relabel(const GWord& w, Monad m);

// All eight words s1^e1 s2^e2 tau^f.
std::vector<GWord> g_elements();

std::vector<Sixtuple> g_orbit(const Sixtuple& s);

// [theta1 theta1' : theta2 theta2'] scaled to first coordinate 1.
std::pair<Rational, Rational> gamma_normal_form(const ScalarQuad& q);

complexes::GradedObject objects_of(const Sixtuple& s);
// A = P_{b'}(-Theta) -> P_{a1} + P_{a1'} + P_{a2} + P_{a2'} -> P_b(Theta).
Monad standard_monad(ModelPtr model, const Sixtuple& s, const ScalarQuad& q);

// dim chain_maps(M1, M2, 0) == 1. Throws ModuliError on different objects.
bool iso_test(const Monad& m1, const Monad& m2);

struct ModuliDims {
  std::size_t t = 0;
  std::size_t gamma = 0;
  std::size_t p = 0;
  std::size_t g_order = 0;
};

// Throws std::logic_error when the internal cross-checks disagree.
ModuliDims moduli_dims();

Sixtuple random_sixtuple(std::mt19937_64& rng);
ScalarQuad random_quad(std::mt19937_64& rng);
// A random element of Gamma applied to q.
ScalarQuad random_gamma_translate(std::mt19937_64& rng, const ScalarQuad& q);

struct PairSweep {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  std::size_t isomorphic = 0;
  std::size_t g_compatible = 0;
  std::map<std::size_t, std::size_t> orbit_sizes;  // size -> count
};

// Half of the pairs are Gamma-translates, the rest independent draws.
PairSweep random_pairs(ModelPtr model, std::uint64_t seed, std::size_t trials);

}  // namespace theta_monad::moduli2

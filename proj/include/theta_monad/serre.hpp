#pragma once

// Serre-construction side: the curve Y = sum_i Y_i with Y_i = Theta_{a_i} cap
// Theta_{-a_i}, recorded through which theta translates contain each
// component.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "theta_monad/chow.hpp"
#include "theta_monad/points.hpp"

namespace theta_monad::serre {

using points::PointExpr;

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurveComponent {
  PointExpr a;
  std::vector<PointExpr> containing;  // x with Y_i inside Theta_x
};

struct CurveSpec {
  std::vector<CurveComponent> components;

  // Y_i = Theta_a cap Theta_{-a}, contained exactly in Theta_{+-a}.
  static CurveComponent component(const PointExpr& a);
  // Components over the generators of a free group of rank n.
  static CurveSpec generic(std::size_t n);

  // Throws CurveError unless every containing set is exactly {a, -a}.
  void check() const;
};

// (2, 2N): E(Theta) has det O(2 Theta) and c2 = [Y] = N Theta^2.
chow::ChernPair correspondence_chern(const CurveSpec& c);

// Only m = 2 and m = 3 are decided by the containment data.
bool stable(const CurveSpec& c, int m);

// Dimension N - 1 of the torus parametrizing the extensions for fixed Y.
std::size_t family_dim(std::size_t n);

// Ext^1(I_{Y_i}(Theta), O(-Theta)) is one-dimensional for each component.
std::vector<std::size_t> ext_decomposition_dims(const CurveSpec& c);

}  // namespace theta_monad::serre

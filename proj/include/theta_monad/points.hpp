#pragma once

// Formal points of X: a finitely generated abelian group given by named
// generators and integer relations. Points label the degree-zero line
// bundles P_x; a free group encodes "generic" points, so x = 0 only when
// every coefficient vanishes.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "theta_monad/exactla.hpp"

namespace theta_monad::points {

class PointGroup;
using PointGroupPtr = std::shared_ptr<const PointGroup>;

class UnknownGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PointExpr {
 public:
  PointExpr(PointGroupPtr group, std::vector<std::int64_t> coeffs);

  const PointGroupPtr& group() const { return group_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  PointExpr operator+(const PointExpr& o) const;
  PointExpr operator-(const PointExpr& o) const;
  PointExpr operator-() const;
  PointExpr operator*(std::int64_t k) const;

  // Equality in the group, i.e. modulo the relation lattice.
  bool operator==(const PointExpr& o) const;

  // Representative reduced against the relation lattice.
  std::vector<std::int64_t> canonical() const;
  std::string to_string() const;

 private:
  PointGroupPtr group_;
  std::vector<std::int64_t> coeffs_;
};

class PointGroup : public std::enable_shared_from_this<PointGroup> {
 public:
  static PointGroupPtr create(std::vector<std::string> generators,
                              std::vector<std::vector<std::int64_t>> relations = {});
  // Free group on a_1, ..., a_n.
  static PointGroupPtr free(std::size_t n, const std::string& prefix = "a");

  const std::vector<std::string>& generators() const { return names_; }
  const std::vector<std::vector<std::int64_t>>& relations() const { return relations_; }
  std::size_t rank_of_relations() const { return hnf_.size(); }

  PointExpr zero() const;
  PointExpr gen(const std::string& name) const;
  PointExpr gen(std::size_t index) const;
  // Throws UnknownGenerator for names not in the group.
  PointExpr expr(const std::vector<std::pair<std::string, std::int64_t>>& terms) const;

  std::vector<std::int64_t> reduce(const std::vector<std::int64_t>& coeffs) const;

 private:
  PointGroup(std::vector<std::string> generators, std::vector<std::vector<std::int64_t>> relations);

  std::vector<std::string> names_;
  std::vector<std::vector<std::int64_t>> relations_;
  // Hermite normal form rows of the relation lattice, pivots strictly increasing.
  std::vector<std::vector<exactla::Integer>> hnf_;
  std::vector<std::size_t> hnf_pivot_;
};

// True iff e lies in the relation lattice of g.
bool is_zero(const PointGroup& g, const PointExpr& e);

// P_point(twist * Theta).
struct LineBundleLabel {
  std::int64_t twist;
  PointExpr point;

  bool operator==(const LineBundleLabel& o) const { return twist == o.twist && point == o.point; }
  std::string to_string() const;
};

// Dimensions of Ext^q(L1, L2) = H^q(P_{x2 - x1}((m2 - m1) Theta)), q = 0..3.
std::array<std::int64_t, 4> ext_dims(const LineBundleLabel& l1, const LineBundleLabel& l2);

}  // namespace theta_monad::points

#pragma once

// Monads A -> B -> C of line bundles over the section model.
//
// Every Hom space between two summands is 0-, 1- or 8-dimensional, so maps
// are stored as scalar coefficients against fixed generators: theta+-_i for
// A -> B, the partner section for B -> C and identities for endomorphisms.
// Only Hom(A, C) = H^0(O(2 Theta)) needs full V2 coordinates; a composite
// A -> B_s -> C lands on c * t_pair(s).

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "theta_monad/chow.hpp"
#include "theta_monad/exactla.hpp"
#include "theta_monad/points.hpp"
#include "theta_monad/sections.hpp"

namespace theta_monad::complexes {

using exactla::RatMatrix;
using exactla::RatVector;
using exactla::Rational;
using points::LineBundleLabel;
using ModelPtr = std::shared_ptr<const sections::GenericModel>;

class MonadError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Which theta pair a summand of B belongs to. sign = +1 for the summand
// receiving theta+_pair from A, -1 for theta-_pair.
struct PairSlot {
  std::size_t pair;
  int sign;
  bool operator==(const PairSlot&) const = default;
};

// Degrees -1, 0, 1 of a monad, together with the pair structure of B.
struct GradedObject {
  std::vector<LineBundleLabel> a;
  std::vector<LineBundleLabel> b;
  std::vector<LineBundleLabel> c;
  std::vector<PairSlot> b_slots;

  // Summands in degree -1, 0 or 1; empty otherwise.
  const std::vector<LineBundleLabel>& at(int degree) const;

  // (N-1) O(-Theta) -> sum_i P_{a_i} + P_{-a_i} -> (N-1) O(Theta) over a
  // group with at least N generators; B is interleaved a_1, -a_1, a_2, ...
  static GradedObject decomposable(const points::PointGroupPtr& group, std::size_t n);
  // Same, over a process-wide free group on N generators; monads built
  // independently for the same N have equal objects.
  static GradedObject decomposable(std::size_t n);

  // Index in b of the summand paired with b[s].
  std::size_t partner(std::size_t s) const;
  std::size_t pair_count() const { return b_slots.size() / 2; }
  bool operator==(const GradedObject& o) const;
};

struct Monad {
  GradedObject objects;
  RatMatrix phi;  // |B| x |A|
  RatMatrix psi;  // |C| x |B|
  ModelPtr model;
};

// V2-valued |C| x |A| matrix, row-major.
using V2Matrix = std::vector<std::vector<RatVector>>;

// Coefficients (c+_0, c-_0, c+_1, c-_1, ...), all nonzero. Defaults to ones.
Monad build_decomposable(ModelPtr model, std::optional<std::vector<Rational>> scalars = std::nullopt);

// Assemble a monad with psi = transpose_via_iota(phi) on arbitrary objects.
Monad build_from_phi(ModelPtr model, GradedObject objects, RatMatrix phi);

// psi_(j, (i,+)) = phi_((i,-), j), psi_(j, (i,-)) = -phi_((i,+), j): the
// transpose f^t = f^dual o iota for the skew form iota = [[0, -1], [1, 0]].
// Rows of the input are interleaved pairs.
RatMatrix transpose_via_iota(const RatMatrix& phi_shaped);
// The same rule read with B along the columns; composing the two gives -1.
RatMatrix transpose_via_iota_psi(const RatMatrix& psi_shaped);

V2Matrix compose(const Monad& m);

struct MonadCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct MonadReport {
  std::vector<MonadCheck> checks;
  bool all_passed() const;
  bool passed(const std::string& name) const;
};

MonadReport validate_monad(const Monad& m);

// Chern pair of the cohomology bundle, by additivity of the Chern character.
chow::ChernPair chern_of_cohomology(const Monad& m);

// Basis block of Ext^q(M1^i, M2^(i+p)) between two summands.
struct Block {
  int degree;           // i
  std::size_t src;      // index in M1^i
  std::size_t tgt;      // index in M2^(i+p)
  std::size_t dim;
  std::size_t offset;
};

struct Layout {
  int p = 0;
  int q = 0;
  std::vector<Block> blocks;
  std::size_t dim = 0;

  // Throws std::out_of_range when the block is absent (zero-dimensional).
  const Block& find(int degree, std::size_t src, std::size_t tgt) const;
  const Block* lookup(int degree, std::size_t src, std::size_t tgt) const;

  std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
};

// Blocks of E1^{p,q} = sum_i Ext^q(M1^i, M2^(i+p)), sized by ext_dims.
Layout ext_layout(const GradedObject& m1, const GradedObject& m2, int p, int q);

// The Hom complex Hom^*(M1, M2) with differential f -> d2 f - (-1)^p f d1.
class HomComplex {
 public:
  HomComplex(const Monad& m1, const Monad& m2);

  const Layout& layout(int p) const;  // p in [-3, 3]
  // Hom^p -> Hom^(p+1), p in [-3, 2].
  const RatMatrix& differential(int p) const;

 private:
  RatMatrix build_differential(int p) const;

  const Monad* m1_;
  const Monad* m2_;
  std::vector<Layout> layouts_;
  std::vector<RatMatrix> diffs_;
};

// Chain maps M1 -> M2[d] as a subspace of Hom^d, d in {0, 1, 2}.
exactla::Subspace chain_maps(const Monad& m1, const Monad& m2, int d);

// dim of chain maps of degree p modulo null-homotopic ones.
std::size_t homotopy_classes(const Monad& m, int p);

nlohmann::ordered_json to_json(const Monad& m);
// Parses phi and psi back; objects are rebuilt as the decomposable shape.
Monad monad_from_json(const nlohmann::json& doc, ModelPtr model);

}  // namespace theta_monad::complexes

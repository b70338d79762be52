#pragma once

// Hyperext spectral sequence E1^{p,q} = sum_i Ext^q(M^i, M^(i+p)) => Ext^(p+q)(E, E)
// for the cohomology E of a monad M, with p in [-2, 2] and q in [0, 3].
//
// Each sheet keeps every E_r^{p,q} as a subquotient Z_r / B_r of the E1
// coordinates, and d_r as a matrix on E1 coordinates representing it. The
// q = 0 row is the Hom complex; the q = 3 row is its Serre dual, written in
// the dual coordinates of Hom^{-p}. The only d2 that can be nonzero are the
// obstruction map E2^{0,1} -> E2^{2,0} and its dual E2^{-2,3} -> E2^{0,2}.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "theta_monad/complexes.hpp"
#include "theta_monad/exactla.hpp"

namespace theta_monad::hyperext {

using complexes::Monad;
using complexes::V2Matrix;
using exactla::RatMatrix;
using exactla::RatVector;
using exactla::Rational;
using exactla::Subspace;

inline constexpr int kPMin = -2;
inline constexpr int kPMax = 2;
inline constexpr int kQMin = 0;
inline constexpr int kQMax = 3;

using Pos = std::pair<int, int>;  // (p, q)
using Grid = std::vector<std::vector<std::size_t>>;  // [q][p + 2]

bool in_grid(Pos pos);

struct SheetEntry {
  Subspace cycles;
  Subspace boundaries;
  std::size_t dim() const { return cycles.dim() - boundaries.dim(); }
};

class SpectralSheet {
 public:
  // E1 with the given dimensions: cycles everything, boundaries nothing.
  static SpectralSheet first(const std::map<Pos, std::size_t>& e1_dims);

  int level() const { return r_; }
  std::size_t dim(Pos pos) const;  // 0 outside the grid
  std::size_t ambient(Pos pos) const;
  const SheetEntry& entry(Pos pos) const;
  Grid dims() const;

  // Target of d_r out of pos.
  Pos target(Pos pos) const { return {pos.first + r_, pos.second - r_ + 1}; }

  // Representative of d_r : E_r^{pos} -> E_r^{target(pos)} on E1 coordinates.
  // Unset differentials are zero; next() refuses to treat a differential
  // between two nonzero entries as zero.
  void set_differential(Pos pos, RatMatrix rep);
  const RatMatrix* differential(Pos pos) const;

  // E_{r+1}: Z' = {z in Z : d z in B(target)}, B' = B + d(Z(source)).
  SpectralSheet next() const;

 private:
  int r_ = 1;
  std::map<Pos, SheetEntry> entries_;
  std::map<Pos, RatMatrix> diffs_;
};

// True when no d_r with r >= from_level between nonzero entries of `sheet`
// is possible, i.e. sheet = E_infinity.
bool degenerates(const SpectralSheet& sheet, int from_level);

// dim E^{p,q} == dim E^{-p,3-q} everywhere.
bool serre_symmetric(const SpectralSheet& sheet);

// Ext^k = sum_{p+q=k} dim E^{p,q} for k = 0..3.
std::array<std::size_t, 4> abutment_dims(const SpectralSheet& sheet);

// Dimensions of E1^{p,q} from the line bundle cohomology of the summands.
std::map<Pos, std::size_t> e1_dims(const Monad& m);

SpectralSheet e1_sheet(const Monad& m);

// A basis element xi of an Ext^1 summand of E1^{0,1}.
struct ObGenerator {
  enum class Kind { F, G, H };
  Kind kind;
  std::size_t i;  // F, H: source summand; G: theta pair
  std::size_t j;  // F, H: target summand; G: unused
  int sign = +1;  // G only
  RatVector xi;
};

// Lifts of xi may be shifted by multiples of t, the ambiguity of beta^{-1}:
// shift_own for the pair named by the generator, shift_last for pair N-1.
struct LiftShift {
  Rational own = 0;
  Rational last = 0;
};

// The (N-1) x (N-1) matrix of V2 elements representing ob(generator) in
// Hom(A, C). Rows index C, columns index A.
V2Matrix obstruction_matrix(const Monad& m, const ObGenerator& gen, const LiftShift& shift = {});

struct ObMap {
  RatMatrix representative;  // E1^{2,0} x E1^{0,1}
  RatMatrix on_e2;           // the same map followed by E1^{2,0} -> E2^{2,0}
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};

// Throws sections::GenericityError when the model fails its checks.
ObMap obstruction_map(const Monad& m);

// True iff ob(gen) computed with shifted lifts differs from the unshifted
// one by an element of the image of d1 : E1^{1,0} -> E1^{2,0}.
bool ob_well_defined(const Monad& m, const ObGenerator& gen, const LiftShift& shift);

// Every basis generator of E1^{0,1}, in column order of the ob matrix.
std::vector<ObGenerator> ob_generators(const Monad& m);

// The single-pair check above over `trials` random (generator, shift) draws.
bool ob_well_defined(const Monad& m, std::uint64_t seed, std::size_t trials = 50);

struct HyperextResult {
  SpectralSheet e1;
  SpectralSheet e2;
  SpectralSheet e3;
  ObMap ob;
  std::array<std::size_t, 4> ext_dims{};
  bool degenerate = false;
  bool formula_match = false;
};

HyperextResult compute(const Monad& m);

}  // namespace theta_monad::hyperext

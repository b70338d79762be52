#pragma once

// Seeded generic realization of the section spaces the deformation
// computation runs through:
//
//   V2  = H^0(O(2 Theta)) = Q^8
//   t_i = theta+_i * theta-_i in V2                     (i = 0..N-1)
//   W_i = H^0(I_{Y_i}(2 Theta)) = span(t_i, U_i), dim 4
//   beta_i : W_i -> H^1(O_X) = Q^3, kernel exactly span(t_i)
//
// Each W_i is stored with the basis (t_i, U_i[0], U_i[1], U_i[2]); beta_i is
// a 3 x 4 integer matrix against that basis whose first column is zero.
// Sampling draws integer coordinates in [-9, 9] and redraws the whole model
// until the genericity checks pass.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "theta_monad/exactla.hpp"

namespace theta_monad::sections {

inline constexpr std::size_t kV2Dim = 8;
inline constexpr std::size_t kH1Dim = 3;
inline constexpr std::size_t kWDim = 4;
inline constexpr std::int64_t kCoordRange = 9;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

class SamplingExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WrongSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GenericModel {
 public:
  // Unchecked assembly; use check_genericity to validate.
  GenericModel(std::size_t n, std::int64_t seed, std::vector<IntVector> t,
               std::vector<IntMatrix> u, std::vector<IntMatrix> beta);

  std::size_t n() const { return t_.size(); }
  std::int64_t seed() const { return seed_; }

  const std::vector<IntVector>& t_raw() const { return t_; }
  const std::vector<IntMatrix>& u_raw() const { return u_; }
  const std::vector<IntMatrix>& beta_raw() const { return beta_; }

  exactla::RatVector t(std::size_t i) const;
  // The four basis vectors of W_i, t_i first.
  std::vector<exactla::RatVector> w_basis(std::size_t i) const;
  exactla::Subspace w(std::size_t i) const;
  // beta_i against the W_i basis (3 x 4).
  exactla::RatMatrix beta(std::size_t i) const;

  // Direct edits, used to build degenerate models in tests and test hooks.
  void set_t(std::size_t i, IntVector v);
  void set_u(std::size_t i, IntMatrix u);

  bool operator==(const GenericModel&) const = default;

 private:
  void check_index(std::size_t i) const;

  std::int64_t seed_;
  std::vector<IntVector> t_;
  std::vector<IntMatrix> u_;
  std::vector<IntMatrix> beta_;
};

struct GenericityCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct GenericityReport {
  std::vector<GenericityCheck> checks;

  bool all_passed() const;
  // Passed flag of the named check; throws std::out_of_range if absent.
  bool passed(const std::string& name) const;
};

// Reads THETA_MONAD_RETRY_BUDGET, defaulting to 1000.
std::size_t default_retry_budget();

// Deterministic in (n, seed). Requires n >= 2.
GenericModel sample_model(std::size_t n, std::int64_t seed,
                          std::optional<std::size_t> retry_budget = std::nullopt);

GenericityReport check_genericity(const GenericModel& model);

enum class SpaceKind { V2, ThetaPlus, ThetaMinus, W, H1 };

struct SpaceTag {
  SpaceKind kind;
  std::size_t index = 0;  // pair index for ThetaPlus, ThetaMinus and W
  bool operator==(const SpaceTag&) const = default;
};

std::size_t space_dim(SpaceTag tag);

struct SectionElement {
  SpaceTag tag;
  exactla::RatVector coords;  // coordinates in the tagged space's basis

  SectionElement(SpaceTag tag, exactla::RatVector coords);
  bool operator==(const SectionElement&) const = default;
};

// (c_plus * theta+_i) * (c_minus * theta-_i) = c_plus * c_minus * t_i in V2.
SectionElement mul(const GenericModel& model, std::size_t i, const exactla::Rational& c_plus,
                   const exactla::Rational& c_minus);

// beta_i(u) for u tagged W_i.
SectionElement boundary(const GenericModel& model, std::size_t i, const SectionElement& u);

// The preimage of xi under beta_i lying in span(U_i).
SectionElement lift(const GenericModel& model, std::size_t i, const SectionElement& xi);
SectionElement lift(const GenericModel& model, std::size_t i, const exactla::RatVector& xi);

// Coordinates in V2 of a W_i or V2 element.
exactla::RatVector to_v2(const GenericModel& model, const SectionElement& e);

SectionElement h1(exactla::RatVector xi);

// Canonical document {N, seed, t, W, beta, U}.
nlohmann::ordered_json to_json(const GenericModel& model);
GenericModel model_from_json(const nlohmann::json& doc);

}  // namespace theta_monad::sections

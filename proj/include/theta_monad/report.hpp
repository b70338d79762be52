#pragma once

// Report records for the batch commands, with their JSON form. Every record
// round-trips: from_json(to_json(r)) == r.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "theta_monad/chow.hpp"
#include "theta_monad/complexes.hpp"
#include "theta_monad/hyperext.hpp"
#include "theta_monad/moduli2.hpp"

namespace theta_monad::report {

using Json = nlohmann::ordered_json;
using hyperext::Grid;

struct HyperextReport {
  std::size_t n = 0;
  std::int64_t seed = 0;
  Grid e1_dims;
  Grid e2_dims;
  Grid e3_dims;
  std::size_t ob_rank = 0;
  std::size_t ob_kernel = 0;
  std::array<std::size_t, 4> ext_dims{};
  bool degenerate = false;
  bool formula_match = false;
  std::int64_t ext1_formula = 0;
  std::array<bool, 3> serre_symmetric{};  // E1, E2, E3
  std::size_t chain_maps_deg1 = 0;

  bool operator==(const HyperextReport&) const = default;
};

// Runs the spectral engine on the decomposable monad over `model`.
HyperextReport analyze(const complexes::ModelPtr& model);

Json to_json(const HyperextReport& r);
HyperextReport hyperext_from_json(const nlohmann::json& j);

struct ExistenceCell {
  std::int64_t m = 0;
  std::int64_t n = 0;
  chow::Verdict verdict = chow::Verdict::Exists;
  bool operator==(const ExistenceCell&) const = default;
};

struct ExistenceTable {
  std::int64_t m_min = 0, m_max = 0, n_min = 0, n_max = 0;
  std::vector<ExistenceCell> cells;  // m-major
  bool operator==(const ExistenceTable&) const = default;

  chow::Verdict at(std::int64_t m, std::int64_t n) const;
};

// Throws std::invalid_argument on an empty range.
ExistenceTable existence_table(std::int64_t m_min, std::int64_t m_max, std::int64_t n_min, std::int64_t n_max);

Json to_json(const ExistenceTable& t);
ExistenceTable existence_from_json(const nlohmann::json& j);
chow::Verdict verdict_from_string(const std::string& s);

struct Moduli2Report {
  std::int64_t seed = 0;
  moduli2::ModuliDims dims;
  moduli2::PairSweep sweep;
  bool operator==(const Moduli2Report& o) const;
};

Moduli2Report moduli2_report(std::int64_t seed, std::size_t trials);

Json to_json(const Moduli2Report& r);
Moduli2Report moduli2_from_json(const nlohmann::json& j);

// Fixed-width text renderings.
std::string render_text(const HyperextReport& r);
std::string render_text(const ExistenceTable& t);
std::string render_text(const Moduli2Report& r);

}  // namespace theta_monad::report

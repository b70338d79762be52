#include "theta_monad/sections.hpp"

#include <cstdlib>
#include <random>

namespace theta_monad::sections {

using exactla::RatMatrix;
using exactla::RatVector;
using exactla::Rational;

namespace {

RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

// Uniform draw in [-kCoordRange, kCoordRange] by rejection on raw engine output.
class CoordSource {
 public:
  CoordSource(std::size_t n, std::int64_t seed)
      : rng_(static_cast<std::uint64_t>(seed) * 0x9E3779B97F4A7C15ULL + n) {}

  std::int64_t draw() {
    constexpr std::uint64_t span = 2 * kCoordRange + 1;
    constexpr std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return static_cast<std::int64_t>(x % span) - kCoordRange;
  }

  IntVector vec(std::size_t len) {
    IntVector v(len);
    for (auto& x : v) x = draw();
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

GenericModel::GenericModel(std::size_t n, std::int64_t seed, std::vector<IntVector> t,
                           std::vector<IntMatrix> u, std::vector<IntMatrix> beta)
    : seed_(seed), t_(std::move(t)), u_(std::move(u)), beta_(std::move(beta)) {
  if (t_.size() != n || u_.size() != n || beta_.size() != n)
    throw std::invalid_argument("model component counts do not match N");
  for (std::size_t i = 0; i < n; ++i) {
    if (t_[i].size() != kV2Dim) throw std::invalid_argument("t_i must have 8 coordinates");
    if (u_[i].size() != kWDim - 1) throw std::invalid_argument("U_i must have 3 vectors");
    for (const auto& v : u_[i])
      if (v.size() != kV2Dim) throw std::invalid_argument("U_i vectors must have 8 coordinates");
    if (beta_[i].size() != kH1Dim) throw std::invalid_argument("beta_i must have 3 rows");
    for (const auto& r : beta_[i])
      if (r.size() != kWDim) throw std::invalid_argument("beta_i must have 4 columns");
  }
}

void GenericModel::check_index(std::size_t i) const {
  if (i >= n()) throw std::out_of_range("pair index " + std::to_string(i) + " out of range");
}

RatVector GenericModel::t(std::size_t i) const {
  check_index(i);
  return to_rat(t_[i]);
}

std::vector<RatVector> GenericModel::w_basis(std::size_t i) const {
  check_index(i);
  std::vector<RatVector> b{to_rat(t_[i])};
  for (const auto& v : u_[i]) b.push_back(to_rat(v));
  return b;
}

exactla::Subspace GenericModel::w(std::size_t i) const { return exactla::Subspace(kV2Dim, w_basis(i)); }

RatMatrix GenericModel::beta(std::size_t i) const {
  check_index(i);
  RatMatrix m(kH1Dim, kWDim);
  for (std::size_t r = 0; r < kH1Dim; ++r)
    for (std::size_t c = 0; c < kWDim; ++c) m(r, c) = beta_[i][r][c];
  return m;
}

void GenericModel::set_t(std::size_t i, IntVector v) {
  check_index(i);
  if (v.size() != kV2Dim) throw std::invalid_argument("t_i must have 8 coordinates");
  t_[i] = std::move(v);
}

void GenericModel::set_u(std::size_t i, IntMatrix u) {
  check_index(i);
  if (u.size() != kWDim - 1) throw std::invalid_argument("U_i must have 3 vectors");
  u_[i] = std::move(u);
}

bool GenericityReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool GenericityReport::passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  throw std::out_of_range("no genericity check named " + name);
}

std::size_t default_retry_budget() {
  if (const char* env = std::getenv("THETA_MONAD_RETRY_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return 1000;
}

GenericModel sample_model(std::size_t n, std::int64_t seed, std::optional<std::size_t> retry_budget) {
  if (n < 2) throw std::invalid_argument("sample_model needs N >= 2");
  const std::size_t budget = retry_budget.value_or(default_retry_budget());
  CoordSource src(n, seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<IntVector> t;
    std::vector<IntMatrix> u;
    std::vector<IntMatrix> beta;
    for (std::size_t i = 0; i < n; ++i) {
      t.push_back(src.vec(kV2Dim));
      IntMatrix ui;
      for (std::size_t k = 0; k + 1 < kWDim; ++k) ui.push_back(src.vec(kV2Dim));
      u.push_back(std::move(ui));
      IntMatrix bi;
      for (std::size_t r = 0; r < kH1Dim; ++r) {
        IntVector row{0};
        const IntVector rest = src.vec(kWDim - 1);
        row.insert(row.end(), rest.begin(), rest.end());
        bi.push_back(std::move(row));
      }
      beta.push_back(std::move(bi));
    }
    GenericModel model(n, seed, std::move(t), std::move(u), std::move(beta));
    if (check_genericity(model).all_passed()) return model;
  }
  throw SamplingExhausted("no generic model for N = " + std::to_string(n) + ", seed = " +
                          std::to_string(seed) + " within " + std::to_string(budget) + " draws");
}

GenericityReport check_genericity(const GenericModel& model) {
  GenericityReport report;
  const std::size_t n = model.n();
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
  };

  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    if (exactla::is_zero(model.t(i))) bad = "t_" + std::to_string(i) + " = 0";
  add("t_nonzero", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    if (exactla::rank(RatMatrix::from_columns(kV2Dim, model.w_basis(i))) != kWDim)
      bad = "W_" + std::to_string(i) + " has dimension < 4";
  add("w_dimension", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i) {
    exactla::EchelonBasis e(kV2Dim);
    for (const auto& v : model.w_basis(i)) e.add(v);
    if (!e.contains(model.t(i))) bad = "t_" + std::to_string(i) + " not in W_" + std::to_string(i);
  }
  add("t_in_w", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < n && bad.empty(); ++j) {
      auto gens = model.w_basis(i);
      const auto wj = model.w_basis(j);
      gens.insert(gens.end(), wj.begin(), wj.end());
      if (exactla::rank(RatMatrix::from_columns(kV2Dim, gens)) != kV2Dim)
        bad = "W_" + std::to_string(i) + " + W_" + std::to_string(j) + " != V2";
    }
  add("transversality", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < n && bad.empty(); ++j)
      for (std::size_t k = j + 1; k < n && bad.empty(); ++k)
        if (exactla::rank(RatMatrix::from_columns(kV2Dim, {model.t(i), model.t(j), model.t(k)})) != 3)
          bad = "t_" + std::to_string(i) + ", t_" + std::to_string(j) + ", t_" + std::to_string(k) +
                " dependent";
  add("triple_independence", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i) {
    const RatMatrix b = model.beta(i);
    const exactla::Subspace ker = exactla::kernel_basis(b);
    RatVector t_coords(kWDim);
    t_coords[0] = 1;
    if (exactla::rank(b) != kH1Dim || ker.dim() != 1 || !ker.contains(t_coords))
      bad = "beta_" + std::to_string(i) + " is not onto with kernel span(t_" + std::to_string(i) + ")";
  }
  add("beta_kernel", bad.empty(), bad);
  return report;
}

std::size_t space_dim(SpaceTag tag) {
  switch (tag.kind) {
    case SpaceKind::V2: return kV2Dim;
    case SpaceKind::ThetaPlus:
    case SpaceKind::ThetaMinus: return 1;
    case SpaceKind::W: return kWDim;
    case SpaceKind::H1: return kH1Dim;
  }
  return 0;
}

SectionElement::SectionElement(SpaceTag t, RatVector c) : tag(t), coords(std::move(c)) {
  if (coords.size() != space_dim(tag)) throw WrongSpace("coordinate count does not match the space");
}

SectionElement h1(RatVector xi) { return SectionElement({SpaceKind::H1, 0}, std::move(xi)); }

SectionElement mul(const GenericModel& model, std::size_t i, const Rational& c_plus,
                   const Rational& c_minus) {
  return SectionElement({SpaceKind::V2, 0}, exactla::scale(c_plus * c_minus, model.t(i)));
}

SectionElement boundary(const GenericModel& model, std::size_t i, const SectionElement& u) {
  if (u.tag != SpaceTag{SpaceKind::W, i}) throw WrongSpace("boundary expects an element of W_i");
  return h1(model.beta(i) * u.coords);
}

SectionElement lift(const GenericModel& model, std::size_t i, const RatVector& xi) {
  if (xi.size() != kH1Dim) throw WrongSpace("lift expects an element of H^1");
  const RatMatrix b = model.beta(i);
  RatMatrix on_u(kH1Dim, kWDim - 1);
  for (std::size_t r = 0; r < kH1Dim; ++r)
    for (std::size_t c = 1; c < kWDim; ++c) on_u(r, c - 1) = b(r, c);
  const auto y = exactla::solve(on_u, xi);
  if (!y) throw GenericityError("beta_" + std::to_string(i) + " is not onto");
  RatVector coords{0};
  coords.insert(coords.end(), y->begin(), y->end());
  return SectionElement({SpaceKind::W, i}, std::move(coords));
}

SectionElement lift(const GenericModel& model, std::size_t i, const SectionElement& xi) {
  if (xi.tag.kind != SpaceKind::H1) throw WrongSpace("lift expects an element of H^1");
  return lift(model, i, xi.coords);
}

RatVector to_v2(const GenericModel& model, const SectionElement& e) {
  switch (e.tag.kind) {
    case SpaceKind::V2: return e.coords;
    case SpaceKind::W: {
      const auto basis = model.w_basis(e.tag.index);
      RatVector out(kV2Dim);
      for (std::size_t k = 0; k < kWDim; ++k)
        if (sgn(e.coords[k]) != 0) out = exactla::add(out, exactla::scale(e.coords[k], basis[k]));
      return out;
    }
    default: throw WrongSpace("only V2 and W_i elements embed into V2");
  }
}

nlohmann::ordered_json to_json(const GenericModel& model) {
  nlohmann::ordered_json doc;
  doc["N"] = model.n();
  doc["seed"] = model.seed();
  doc["t"] = model.t_raw();
  auto w = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < model.n(); ++i) {
    IntMatrix basis{model.t_raw()[i]};
    basis.insert(basis.end(), model.u_raw()[i].begin(), model.u_raw()[i].end());
    w.push_back(basis);
  }
  doc["W"] = w;
  doc["beta"] = model.beta_raw();
  doc["U"] = model.u_raw();
  return doc;
}

GenericModel model_from_json(const nlohmann::json& doc) {
  const auto n = doc.at("N").get<std::size_t>();
  const auto t = doc.at("t").get<std::vector<IntVector>>();
  const auto u = doc.at("U").get<std::vector<IntMatrix>>();
  const auto w = doc.at("W").get<std::vector<IntMatrix>>();
  for (std::size_t i = 0; i < w.size() && i < t.size() && i < u.size(); ++i) {
    IntMatrix expect{t[i]};
    expect.insert(expect.end(), u[i].begin(), u[i].end());
    if (w[i] != expect) throw std::invalid_argument("W basis inconsistent with t and U");
  }
  return GenericModel(n, doc.at("seed").get<std::int64_t>(), t, u,
                      doc.at("beta").get<std::vector<IntMatrix>>());
}

}  // namespace theta_monad::sections

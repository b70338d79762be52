#include "theta_monad/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "theta_monad/sections.hpp"

namespace theta_monad::report {

HyperextReport analyze(const complexes::ModelPtr& model) {
  const auto m = complexes::build_decomposable(model);
  const auto res = hyperext::compute(m);
  HyperextReport r;
  r.n = model->n();
  r.seed = model->seed();
  r.e1_dims = res.e1.dims();
  r.e2_dims = res.e2.dims();
  r.e3_dims = res.e3.dims();
  r.ob_rank = res.ob.rank;
  r.ob_kernel = res.ob.kernel_dim;
  r.ext_dims = res.ext_dims;
  r.degenerate = res.degenerate;
  r.formula_match = res.formula_match;
  r.ext1_formula = chow::ext1_dim_formula(complexes::chern_of_cohomology(m));
  r.serre_symmetric = {hyperext::serre_symmetric(res.e1), hyperext::serre_symmetric(res.e2),
                       hyperext::serre_symmetric(res.e3)};
  r.chain_maps_deg1 = complexes::chain_maps(m, m, 1).dim();
  return r;
}

Json to_json(const HyperextReport& r) {
  Json j;
  j["N"] = r.n;
  j["seed"] = r.seed;
  j["e1_dims"] = r.e1_dims;
  j["e2_dims"] = r.e2_dims;
  j["e3_dims"] = r.e3_dims;
  j["ob_rank"] = r.ob_rank;
  j["ob_kernel"] = r.ob_kernel;
  j["ext_dims"] = r.ext_dims;
  j["degenerate"] = r.degenerate;
  j["formula_match"] = r.formula_match;
  j["ext1_formula"] = r.ext1_formula;
  j["serre_symmetric"] = r.serre_symmetric;
  j["chain_maps_deg1"] = r.chain_maps_deg1;
  return j;
}

HyperextReport hyperext_from_json(const nlohmann::json& j) {
  HyperextReport r;
  r.n = j.at("N").get<std::size_t>();
  r.seed = j.at("seed").get<std::int64_t>();
  r.e1_dims = j.at("e1_dims").get<Grid>();
  r.e2_dims = j.at("e2_dims").get<Grid>();
  r.e3_dims = j.at("e3_dims").get<Grid>();
  r.ob_rank = j.at("ob_rank").get<std::size_t>();
  r.ob_kernel = j.at("ob_kernel").get<std::size_t>();
  r.ext_dims = j.at("ext_dims").get<std::array<std::size_t, 4>>();
  r.degenerate = j.at("degenerate").get<bool>();
  r.formula_match = j.at("formula_match").get<bool>();
  r.ext1_formula = j.at("ext1_formula").get<std::int64_t>();
  r.serre_symmetric = j.at("serre_symmetric").get<std::array<bool, 3>>();
  r.chain_maps_deg1 = j.at("chain_maps_deg1").get<std::size_t>();
  return r;
}

chow::Verdict ExistenceTable::at(std::int64_t m, std::int64_t n) const {
  if (m < m_min || m > m_max || n < n_min || n > n_max) throw std::out_of_range("cell outside the table");
  return cells[static_cast<std::size_t>((m - m_min) * (n_max - n_min + 1) + (n - n_min))].verdict;
}

ExistenceTable existence_table(std::int64_t m_min, std::int64_t m_max, std::int64_t n_min, std::int64_t n_max) {
  if (m_min > m_max || n_min > n_max) throw std::invalid_argument("empty range");
  ExistenceTable t{m_min, m_max, n_min, n_max, {}};
  for (auto m = m_min; m <= m_max; ++m)
    for (auto n = n_min; n <= n_max; ++n) t.cells.push_back({m, n, chow::existence_gate({m, n})});
  return t;
}

chow::Verdict verdict_from_string(const std::string& s) {
  for (auto v : {chow::Verdict::Exists, chow::Verdict::BoundarySemihomogeneous, chow::Verdict::UnknownHalf,
                 chow::Verdict::OutsideBogomolov})
    if (chow::to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict " + s);
}

Json to_json(const ExistenceTable& t) {
  Json j;
  j["m_range"] = {t.m_min, t.m_max};
  j["n_range"] = {t.n_min, t.n_max};
  auto cells = Json::array();
  for (const auto& c : t.cells) cells.push_back({{"m", c.m}, {"n", c.n}, {"verdict", chow::to_string(c.verdict)}});
  j["cells"] = std::move(cells);
  return j;
}

ExistenceTable existence_from_json(const nlohmann::json& j) {
  ExistenceTable t;
  t.m_min = j.at("m_range").at(0).get<std::int64_t>();
  t.m_max = j.at("m_range").at(1).get<std::int64_t>();
  t.n_min = j.at("n_range").at(0).get<std::int64_t>();
  t.n_max = j.at("n_range").at(1).get<std::int64_t>();
  for (const auto& c : j.at("cells"))
    t.cells.push_back({c.at("m").get<std::int64_t>(), c.at("n").get<std::int64_t>(),
                       verdict_from_string(c.at("verdict").get<std::string>())});
  return t;
}

bool Moduli2Report::operator==(const Moduli2Report& o) const {
  return seed == o.seed && dims.t == o.dims.t && dims.gamma == o.dims.gamma && dims.p == o.dims.p &&
         dims.g_order == o.dims.g_order && sweep.trials == o.sweep.trials &&
         sweep.agreements == o.sweep.agreements && sweep.isomorphic == o.sweep.isomorphic &&
         sweep.g_compatible == o.sweep.g_compatible && sweep.orbit_sizes == o.sweep.orbit_sizes;
}

Moduli2Report moduli2_report(std::int64_t seed, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  Moduli2Report r;
  r.seed = seed;
  r.dims = moduli2::moduli_dims();
  const auto model = std::make_shared<const sections::GenericModel>(sections::sample_model(2, seed));
  r.sweep = moduli2::random_pairs(model, static_cast<std::uint64_t>(seed), trials);
  return r;
}

Json to_json(const Moduli2Report& r) {
  Json j;
  j["seed"] = r.seed;
  j["dims"] = {{"T", r.dims.t}, {"Gamma", r.dims.gamma}, {"P", r.dims.p}, {"G_order", r.dims.g_order}};
  Json orbits = Json::object();
  for (const auto& [size, count] : r.sweep.orbit_sizes) orbits[std::to_string(size)] = count;
  j["sweep"] = {{"trials", r.sweep.trials},
                {"agreements", r.sweep.agreements},
                {"isomorphic", r.sweep.isomorphic},
                {"g_compatible", r.sweep.g_compatible},
                {"orbit_sizes", std::move(orbits)}};
  return j;
}

Moduli2Report moduli2_from_json(const nlohmann::json& j) {
  Moduli2Report r;
  r.seed = j.at("seed").get<std::int64_t>();
  const auto& d = j.at("dims");
  r.dims = {d.at("T").get<std::size_t>(), d.at("Gamma").get<std::size_t>(), d.at("P").get<std::size_t>(),
            d.at("G_order").get<std::size_t>()};
  const auto& s = j.at("sweep");
  r.sweep.trials = s.at("trials").get<std::size_t>();
  r.sweep.agreements = s.at("agreements").get<std::size_t>();
  r.sweep.isomorphic = s.at("isomorphic").get<std::size_t>();
  r.sweep.g_compatible = s.at("g_compatible").get<std::size_t>();
  for (const auto& [size, count] : s.at("orbit_sizes").items())
    r.sweep.orbit_sizes[std::stoul(size)] = count.get<std::size_t>();
  return r;
}

namespace {

void grid_text(std::ostringstream& os, const std::string& title, const Grid& g) {
  os << title << "\n";
  os << "  q\\p";
  for (int p = hyperext::kPMin; p <= hyperext::kPMax; ++p) os << std::setw(7) << p;
  os << "\n";
  for (int q = hyperext::kQMax; q >= hyperext::kQMin; --q) {
    os << std::setw(5) << q;
    for (std::size_t c = 0; c < g[static_cast<std::size_t>(q)].size(); ++c)
      os << std::setw(7) << g[static_cast<std::size_t>(q)][c];
    os << "\n";
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const HyperextReport& r) {
  std::ostringstream os;
  os << "N = " << r.n << ", seed = " << r.seed << "\n";
  grid_text(os, "E1", r.e1_dims);
  grid_text(os, "E2", r.e2_dims);
  grid_text(os, "E3", r.e3_dims);
  os << "ob rank " << r.ob_rank << ", kernel " << r.ob_kernel << "\n";
  os << "chain maps of degree 1: " << r.chain_maps_deg1 << "\n";
  os << "Ext dims (" << r.ext_dims[0] << ", " << r.ext_dims[1] << ", " << r.ext_dims[2] << ", " << r.ext_dims[3]
     << ")\n";
  os << "Ext^1 formula " << r.ext1_formula << ", match " << yes_no(r.formula_match) << "\n";
  os << "degenerates at E3: " << yes_no(r.degenerate) << "\n";
  os << "duality E1/E2/E3: " << yes_no(r.serre_symmetric[0]) << "/" << yes_no(r.serre_symmetric[1]) << "/"
     << yes_no(r.serre_symmetric[2]) << "\n";
  return os.str();
}

std::string render_text(const ExistenceTable& t) {
  auto code = [](chow::Verdict v) {
    switch (v) {
      case chow::Verdict::Exists: return "E";
      case chow::Verdict::BoundarySemihomogeneous: return "b";
      case chow::Verdict::UnknownHalf: return "?";
      case chow::Verdict::OutsideBogomolov: return ".";
    }
    return " ";
  };
  std::ostringstream os;
  os << "  m\\n";
  for (auto n = t.n_min; n <= t.n_max; ++n) os << std::setw(4) << n;
  os << "\n";
  for (auto m = t.m_min; m <= t.m_max; ++m) {
    os << std::setw(5) << m;
    for (auto n = t.n_min; n <= t.n_max; ++n) os << std::setw(4) << code(t.at(m, n));
    os << "\n";
  }
  os << "E = EXISTS, b = BOUNDARY_SEMIHOMOGENEOUS, ? = UNKNOWN_HALF, . = OUTSIDE_BOGOMOLOV\n";
  return os.str();
}

std::string render_text(const Moduli2Report& r) {
  std::ostringstream os;
  os << "seed " << r.seed << "\n";
  os << "dim T " << r.dims.t << ", dim Gamma " << r.dims.gamma << ", dim P " << r.dims.p << ", |G| "
     << r.dims.g_order << "\n";
  os << "iso vs normal form agreement " << r.sweep.agreements << "/" << r.sweep.trials << " ("
     << r.sweep.isomorphic << " isomorphic pairs)\n";
  os << "G-compatible relabelings " << r.sweep.g_compatible << "/" << r.sweep.trials << "\n";
  os << "orbit sizes:";
  for (const auto& [size, count] : r.sweep.orbit_sizes) os << " " << size << " x" << count;
  os << "\n";
  return os.str();
}

}  // namespace theta_monad::report

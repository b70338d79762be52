#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "theta_monad/chow.hpp"
#include "theta_monad/complexes.hpp"
#include "theta_monad/exactla.hpp"
#include "theta_monad/hyperext.hpp"
#include "theta_monad/moduli2.hpp"
#include "theta_monad/report.hpp"
#include "theta_monad/sections.hpp"
#include "theta_monad/version.hpp"

namespace py = pybind11;
namespace eng = theta_monad;

using ModelPtr = std::shared_ptr<eng::sections::GenericModel>;

namespace {

eng::exactla::RatMatrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  eng::exactla::RatMatrix a(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw eng::exactla::DimensionMismatch("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = eng::exactla::parse_rational(rows[r][c]);
  }
  return a;
}

std::vector<eng::exactla::Rational> to_rationals(const std::vector<std::string>& xs) {
  std::vector<eng::exactla::Rational> out;
  for (const auto& x : xs) out.push_back(eng::exactla::parse_rational(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for rank-2 monads on principally polarized abelian threefolds";
  m.attr("__version__") = eng::kEngineVersion;

  py::register_exception<eng::sections::SamplingExhausted>(m, "SamplingExhausted", PyExc_RuntimeError);
  py::register_exception<eng::sections::GenericityError>(m, "GenericityError", PyExc_RuntimeError);
  py::register_exception<eng::chow::NonIntegralChi>(m, "NonIntegralChi", PyExc_ValueError);

  // Chern arithmetic
  m.def("chi_rank2", [](std::int64_t c1, std::int64_t c2) { return eng::chow::chi_rank2({c1, c2}); },
        py::arg("m"), py::arg("n"));
  m.def("existence_gate",
        [](std::int64_t c1, std::int64_t c2) { return std::string(eng::chow::to_string(eng::chow::existence_gate({c1, c2}))); },
        py::arg("m"), py::arg("n"));
  m.def("discriminant_dot_theta", [](std::int64_t c1, std::int64_t c2) { return eng::chow::discriminant_dot_theta({c1, c2}); },
        py::arg("m"), py::arg("n"));
  m.def("ext1_dim_formula", [](std::int64_t c1, std::int64_t c2) { return eng::chow::ext1_dim_formula({c1, c2}); },
        py::arg("m"), py::arg("n"));
  m.def("twist", [](std::int64_t c1, std::int64_t c2, std::int64_t k) {
    const auto t = eng::chow::twist({c1, c2}, k);
    return std::make_pair(t.m, t.n);
  }, py::arg("m"), py::arg("n"), py::arg("k"));

  // Exact linear algebra on matrices of "p/q" strings
  m.def("rank", [](const std::vector<std::vector<std::string>>& rows) { return eng::exactla::rank(to_matrix(rows)); });
  m.def("kernel_dim", [](const std::vector<std::vector<std::string>>& rows) {
    return eng::exactla::kernel_basis(to_matrix(rows)).dim();
  });

  py::class_<eng::sections::GenericModel, ModelPtr>(m, "GenericModel")
      .def_property_readonly("N", &eng::sections::GenericModel::n)
      .def_property_readonly("seed", &eng::sections::GenericModel::seed)
      .def("to_json", [](const eng::sections::GenericModel& g) { return eng::sections::to_json(g).dump(); })
      .def("genericity", [](const eng::sections::GenericModel& g) {
        std::vector<std::pair<std::string, bool>> out;
        for (const auto& c : eng::sections::check_genericity(g).checks) out.emplace_back(c.name, c.passed);
        return out;
      });

  m.def("sample_model", [](std::size_t n, std::int64_t seed, std::optional<std::size_t> budget) {
    return std::make_shared<eng::sections::GenericModel>(eng::sections::sample_model(n, seed, budget));
  }, py::arg("N"), py::arg("seed"), py::arg("retry_budget") = py::none());
  m.def("model_from_json", [](const std::string& doc) {
    return std::make_shared<eng::sections::GenericModel>(eng::sections::model_from_json(nlohmann::json::parse(doc)));
  });

  py::class_<eng::complexes::Monad>(m, "Monad")
      .def("to_json", [](const eng::complexes::Monad& x) { return eng::complexes::to_json(x).dump(); })
      .def_property_readonly("shape", [](const eng::complexes::Monad& x) {
        return std::make_tuple(x.objects.a.size(), x.objects.b.size(), x.objects.c.size());
      });

  m.def("build_decomposable", [](ModelPtr model, std::optional<std::vector<std::string>> scalars) {
    std::optional<std::vector<eng::exactla::Rational>> s;
    if (scalars) s = to_rationals(*scalars);
    return eng::complexes::build_decomposable(std::move(model), s);
  }, py::arg("model"), py::arg("scalars") = py::none());
  m.def("validate_monad", [](const eng::complexes::Monad& x) {
    std::vector<std::pair<std::string, bool>> out;
    for (const auto& c : eng::complexes::validate_monad(x).checks) out.emplace_back(c.name, c.passed);
    return out;
  });
  m.def("chern_of_cohomology", [](const eng::complexes::Monad& x) {
    const auto c = eng::complexes::chern_of_cohomology(x);
    return std::make_pair(c.m, c.n);
  });
  m.def("chain_maps_dim", [](const eng::complexes::Monad& a, const eng::complexes::Monad& b, int d) {
    return eng::complexes::chain_maps(a, b, d).dim();
  }, py::arg("m1"), py::arg("m2"), py::arg("degree"));
  m.def("ob_well_defined", [](const eng::complexes::Monad& x, std::uint64_t seed, std::size_t trials) {
    return eng::hyperext::ob_well_defined(x, seed, trials);
  }, py::arg("monad"), py::arg("seed"), py::arg("trials") = 50);

  // Reports come back as JSON text; the package wrapper decodes them.
  m.def("_hyperext_report", [](ModelPtr model) { return eng::report::to_json(eng::report::analyze(model)).dump(); });
  m.def("_existence_table", [](std::int64_t m0, std::int64_t m1, std::int64_t n0, std::int64_t n1) {
    return eng::report::to_json(eng::report::existence_table(m0, m1, n0, n1)).dump();
  });
  m.def("_moduli2_report", [](std::int64_t seed, std::size_t trials) {
    return eng::report::to_json(eng::report::moduli2_report(seed, trials)).dump();
  });

  m.def("moduli_dims", [] {
    const auto d = eng::moduli2::moduli_dims();
    return py::dict(py::arg("T") = d.t, py::arg("Gamma") = d.gamma, py::arg("P") = d.p, py::arg("G_order") = d.g_order);
  });
  m.def("gamma_normal_form", [](const std::vector<std::string>& quad) {
    if (quad.size() != 4) throw std::invalid_argument("expected four scalars");
    const auto r = to_rationals(quad);
    const auto [v1, v2] = eng::moduli2::gamma_normal_form({r[0], r[1], r[2], r[3]});
    return std::make_pair(eng::exactla::to_fraction_string(v1), eng::exactla::to_fraction_string(v2));
  });
}

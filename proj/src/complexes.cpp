#include "theta_monad/complexes.hpp"

#include <mutex>
#include <sstream>

namespace theta_monad::complexes {

using points::PointExpr;
using points::PointGroup;

const std::vector<LineBundleLabel>& GradedObject::at(int degree) const {
  static const std::vector<LineBundleLabel> empty;
  switch (degree) {
    case -1: return a;
    case 0: return b;
    case 1: return c;
    default: return empty;
  }
}

GradedObject GradedObject::decomposable(const points::PointGroupPtr& group, std::size_t n) {
  if (n < 2) throw MonadError("decomposable monad needs N >= 2");
  if (group->generators().size() < n) throw MonadError("point group has fewer than N generators");
  GradedObject g;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    g.a.push_back({-1, group->zero()});
    g.c.push_back({1, group->zero()});
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.b.push_back({0, group->gen(i)});
    g.b_slots.push_back({i, +1});
    g.b.push_back({0, -group->gen(i)});
    g.b_slots.push_back({i, -1});
  }
  return g;
}

GradedObject GradedObject::decomposable(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, points::PointGroupPtr> groups;
  std::lock_guard lock(mu);
  auto& g = groups[n];
  if (!g) g = PointGroup::free(n);
  return decomposable(g, n);
}

std::size_t GradedObject::partner(std::size_t s) const {
  const auto& slot = b_slots.at(s);
  for (std::size_t k = 0; k < b_slots.size(); ++k)
    if (b_slots[k].pair == slot.pair && b_slots[k].sign == -slot.sign) return k;
  throw MonadError("summand " + std::to_string(s) + " of B has no partner");
}

namespace {

bool labels_equal(const std::vector<LineBundleLabel>& x, const std::vector<LineBundleLabel>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].point.group() != y[i].point.group()) return false;
    if (!(x[i] == y[i])) return false;
  }
  return true;
}

}  // namespace

bool GradedObject::operator==(const GradedObject& o) const {
  return b_slots == o.b_slots && labels_equal(a, o.a) && labels_equal(b, o.b) &&
         labels_equal(c, o.c);
}

RatMatrix transpose_via_iota(const RatMatrix& phi) {
  if (phi.rows() % 2 != 0) throw exactla::DimensionMismatch("B must have an even number of summands");
  RatMatrix psi(phi.cols(), phi.rows());
  for (std::size_t i = 0; i < phi.rows() / 2; ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      psi(j, 2 * i) = phi(2 * i + 1, j);
      psi(j, 2 * i + 1) = -phi(2 * i, j);
    }
  return psi;
}

RatMatrix transpose_via_iota_psi(const RatMatrix& psi) {
  if (psi.cols() % 2 != 0) throw exactla::DimensionMismatch("B must have an even number of summands");
  RatMatrix phi(psi.cols(), psi.rows());
  for (std::size_t i = 0; i < psi.cols() / 2; ++i)
    for (std::size_t j = 0; j < psi.rows(); ++j) {
      phi(2 * i, j) = psi(j, 2 * i + 1);
      phi(2 * i + 1, j) = -psi(j, 2 * i);
    }
  return phi;
}

Monad build_from_phi(ModelPtr model, GradedObject objects, RatMatrix phi) {
  if (!model) throw MonadError("monad without a section model");
  RatMatrix psi = transpose_via_iota(phi);
  return Monad{std::move(objects), std::move(phi), std::move(psi), std::move(model)};
}

Monad build_decomposable(ModelPtr model, std::optional<std::vector<Rational>> scalars) {
  if (!model) throw MonadError("monad without a section model");
  const std::size_t n = model->n();
  std::vector<Rational> c = scalars.value_or(std::vector<Rational>(2 * n, Rational(1)));
  if (c.size() != 2 * n) throw MonadError("expected 2N scalars");
  for (const auto& x : c)
    if (sgn(x) == 0) throw MonadError("decomposable monad scalars must be nonzero");

  GradedObject objects = GradedObject::decomposable(n);
  RatMatrix phi(2 * n, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (i != j && i != n - 1) continue;
      phi(2 * i, j) = c[2 * i];
      phi(2 * i + 1, j) = c[2 * i + 1];
    }
  return build_from_phi(std::move(model), std::move(objects), std::move(phi));
}

V2Matrix compose(const Monad& m) {
  const auto& ob = m.objects;
  V2Matrix out(ob.c.size(), std::vector<RatVector>(ob.a.size(), RatVector(sections::kV2Dim)));
  for (std::size_t s = 0; s < ob.b.size(); ++s) {
    const RatVector t = m.model->t(ob.b_slots[s].pair);
    for (std::size_t j = 0; j < ob.c.size(); ++j) {
      if (sgn(m.psi(j, s)) == 0) continue;
      for (std::size_t k = 0; k < ob.a.size(); ++k) {
        if (sgn(m.phi(s, k)) == 0) continue;
        const Rational c = m.psi(j, s) * m.phi(s, k);
        for (std::size_t e = 0; e < t.size(); ++e) out[j][k][e] += c * t[e];
      }
    }
  }
  return out;
}

bool MonadReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool MonadReport::passed(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c.passed;
  throw std::out_of_range("no monad check named " + name);
}

MonadReport validate_monad(const Monad& m) {
  MonadReport rep;
  const auto& ob = m.objects;

  {
    std::string why;
    if (!m.model) why = "no section model";
    else if (m.phi.rows() != ob.b.size() || m.phi.cols() != ob.a.size()) why = "phi is not |B| x |A|";
    else if (m.psi.rows() != ob.c.size() || m.psi.cols() != ob.b.size()) why = "psi is not |C| x |B|";
    else if (ob.b_slots.size() != ob.b.size()) why = "B pairing does not cover B";
    else {
      for (std::size_t s = 0; s < ob.b.size() && why.empty(); ++s) {
        if (ob.b_slots[s].pair >= m.model->n()) why = "B pairing refers to a pair outside the model";
        else if (std::abs(ob.b_slots[s].sign) != 1) why = "pairing sign must be +1 or -1";
        else {
          try {
            ob.partner(s);
          } catch (const MonadError& e) {
            why = e.what();
          }
        }
      }
    }
    rep.checks.push_back({"shape", why.empty(), why});
    if (!why.empty()) return rep;
  }

  {
    std::string why;
    for (std::size_t s = 0; s < ob.b.size(); ++s) {
      for (std::size_t k = 0; k < ob.a.size(); ++k)
        if (sgn(m.phi(s, k)) != 0 && points::ext_dims(ob.a[k], ob.b[s])[0] != 1)
          why = "phi(" + std::to_string(s) + "," + std::to_string(k) + ") is not a section of a line bundle with one section";
      for (std::size_t j = 0; j < ob.c.size(); ++j)
        if (sgn(m.psi(j, s)) != 0 && points::ext_dims(ob.b[s], ob.c[j])[0] != 1)
          why = "psi(" + std::to_string(j) + "," + std::to_string(s) + ") is not a section of a line bundle with one section";
    }
    rep.checks.push_back({"hom_support", why.empty(), why});
  }

  {
    std::string why;
    for (std::size_t k = 0; k < ob.a.size() && why.empty(); ++k)
      if (exactla::is_zero(m.phi.column(k))) why = "phi vanishes on A summand " + std::to_string(k);
    for (std::size_t j = 0; j < ob.c.size() && why.empty(); ++j)
      if (exactla::is_zero(m.psi.row(j))) why = "psi vanishes onto C summand " + std::to_string(j);
    rep.checks.push_back({"nonzero_entries", why.empty(), why});
  }

  {
    std::string why;
    const auto comp = compose(m);
    for (std::size_t j = 0; j < comp.size() && why.empty(); ++j)
      for (std::size_t k = 0; k < comp[j].size() && why.empty(); ++k)
        if (!exactla::is_zero(comp[j][k]))
          why = "psi o phi is nonzero at (" + std::to_string(j) + "," + std::to_string(k) + ")";
    rep.checks.push_back({"composition_zero", why.empty(), why});
  }

  {
    std::string why;
    for (std::size_t s = 0; s < ob.b.size() && why.empty(); ++s) {
      const auto& bp = ob.b[ob.partner(s)];
      for (const auto& cj : ob.c)
        for (const auto& ak : ob.a) {
          const bool twist_ok = cj.twist - ob.b[s].twist == bp.twist - ak.twist;
          const bool point_ok = cj.point - ob.b[s].point == bp.point - ak.point;
          if (!(twist_ok && point_ok) && why.empty())
            why = "C - " + ob.b[s].to_string() + " differs from " + bp.to_string() + " - A";
        }
    }
    rep.checks.push_back({"pairing", why.empty(), why});
  }
  return rep;
}

chow::ChernPair chern_of_cohomology(const Monad& m) {
  using chow::ChernCharacter;
  ChernCharacter ch{0, 0, 0, 0};
  for (const auto& l : m.objects.b) ch = ch + ChernCharacter::of_line_bundle(l.twist);
  for (const auto& l : m.objects.a) ch = ch - ChernCharacter::of_line_bundle(l.twist);
  for (const auto& l : m.objects.c) ch = ch - ChernCharacter::of_line_bundle(l.twist);
  return ch.to_rank2_pair();
}

const Block* Layout::lookup(int degree, std::size_t src, std::size_t tgt) const {
  const auto it = index.find({degree, src, tgt});
  return it == index.end() ? nullptr : &blocks[it->second];
}

const Block& Layout::find(int degree, std::size_t src, std::size_t tgt) const {
  const Block* b = lookup(degree, src, tgt);
  if (!b) throw std::out_of_range("no block (" + std::to_string(degree) + "," + std::to_string(src) + "," + std::to_string(tgt) + ")");
  return *b;
}

Layout ext_layout(const GradedObject& m1, const GradedObject& m2, int p, int q) {
  if (q < 0 || q > 3) throw std::out_of_range("q must lie in [0, 3]");
  Layout lay;
  lay.p = p;
  lay.q = q;
  for (int i = -1; i <= 1; ++i) {
    const auto& src = m1.at(i);
    const auto& tgt = m2.at(i + p);
    for (std::size_t a = 0; a < src.size(); ++a)
      for (std::size_t b = 0; b < tgt.size(); ++b) {
        const auto d = points::ext_dims(src[a], tgt[b])[static_cast<std::size_t>(q)];
        if (d == 0) continue;
        lay.index[{i, a, b}] = lay.blocks.size();
        lay.blocks.push_back({i, a, b, static_cast<std::size_t>(d), lay.dim});
        lay.dim += static_cast<std::size_t>(d);
      }
  }
  return lay;
}

namespace {

// Differential of a monad from degree `from` to from + 1, as a scalar matrix.
const RatMatrix* monad_d(const Monad& m, int from) {
  if (from == -1) return &m.phi;
  if (from == 0) return &m.psi;
  return nullptr;
}

}  // namespace

HomComplex::HomComplex(const Monad& m1, const Monad& m2) : m1_(&m1), m2_(&m2) {
  if (!m1.model || !m2.model) throw MonadError("monad without a section model");
  if (m1.model != m2.model && !(*m1.model == *m2.model))
    throw MonadError("monads over different section models");
  for (int p = -3; p <= 3; ++p) layouts_.push_back(ext_layout(m1.objects, m2.objects, p, 0));
  for (int p = -3; p <= 2; ++p) diffs_.push_back(build_differential(p));
}

const Layout& HomComplex::layout(int p) const {
  if (p < -3 || p > 3) throw std::out_of_range("Hom degree out of range");
  return layouts_[static_cast<std::size_t>(p + 3)];
}

const RatMatrix& HomComplex::differential(int p) const {
  if (p < -3 || p > 2) throw std::out_of_range("Hom differential degree out of range");
  return diffs_[static_cast<std::size_t>(p + 3)];
}

RatMatrix HomComplex::build_differential(int p) const {
  const Layout& src = layout(p);
  const Layout& tgt = layout(p + 1);
  RatMatrix d(tgt.dim, src.dim);
  const Monad& m1 = *m1_;
  const Monad& m2 = *m2_;
  const Rational sign = (p % 2 == 0) ? Rational(-1) : Rational(1);

  // `via` is the theta pair an A -> C composite factors through.
  auto deposit = [&](std::size_t col, int degree, std::size_t a, std::size_t b,
                     const Rational& coeff, std::optional<std::size_t> via) {
    const Block* blk = tgt.lookup(degree, a, b);
    if (!blk) throw MonadError("monad differential lands in a zero Hom space");
    if (blk->dim == 1) {
      d(blk->offset, col) += coeff;
      return;
    }
    if (blk->dim != sections::kV2Dim || !via)
      throw MonadError("composite into a Hom space of unsupported dimension");
    const RatVector t = m1.model->t(*via);
    for (std::size_t e = 0; e < t.size(); ++e) d(blk->offset + e, col) += coeff * t[e];
  };

  for (const Block& f : src.blocks) {
    if (f.dim != 1) {
      // Only Hom(A, C) is wider than a line and it has nowhere to go.
      if (tgt.dim != 0) throw MonadError("differential out of a wide Hom block");
      continue;
    }
    const std::size_t col = f.offset;
    const int out_deg = f.degree + p;  // f : M1^i -> M2^(i+p)

    // d2 o f
    if (const RatMatrix* d2 = monad_d(m2, out_deg)) {
      std::optional<std::size_t> via;
      if (out_deg == 0) via = m2.objects.b_slots[f.tgt].pair;
      for (std::size_t c = 0; c < d2->rows(); ++c)
        if (sgn((*d2)(c, f.tgt)) != 0) deposit(col, f.degree, f.src, c, (*d2)(c, f.tgt), via);
    }
    // -(-1)^p f o d1
    if (const RatMatrix* d1 = monad_d(m1, f.degree - 1)) {
      std::optional<std::size_t> via;
      if (f.degree == 0) via = m1.objects.b_slots[f.src].pair;
      for (std::size_t e = 0; e < d1->cols(); ++e)
        if (sgn((*d1)(f.src, e)) != 0) deposit(col, f.degree - 1, e, f.tgt, sign * (*d1)(f.src, e), via);
    }
  }
  return d;
}

exactla::Subspace chain_maps(const Monad& m1, const Monad& m2, int d) {
  if (d < 0 || d > 2) throw std::out_of_range("chain map degree must be 0, 1 or 2");
  HomComplex hc(m1, m2);
  return exactla::kernel_basis(hc.differential(d));
}

std::size_t homotopy_classes(const Monad& m, int p) {
  if (p < -2 || p > 2) throw std::out_of_range("degree must lie in [-2, 2]");
  HomComplex hc(m, m);
  const auto& dp = hc.differential(p);
  const std::size_t cycles = dp.cols() - exactla::rank(dp);
  return cycles - exactla::rank(hc.differential(p - 1));
}

namespace {

nlohmann::ordered_json matrix_json(const RatMatrix& a) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(exactla::to_fraction_string(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) throw MonadError(std::string(what) + " has the wrong number of rows");
  RatMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw MonadError(std::string(what) + " has the wrong number of columns");
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = exactla::parse_rational(j[r][c].get<std::string>());
  }
  return a;
}

}  // namespace

nlohmann::ordered_json to_json(const Monad& m) {
  nlohmann::ordered_json doc;
  doc["model_ref"] = {{"N", m.model->n()}, {"seed", m.model->seed()}};
  doc["phi"] = matrix_json(m.phi);
  doc["psi"] = matrix_json(m.psi);
  return doc;
}

Monad monad_from_json(const nlohmann::json& doc, ModelPtr model) {
  if (!model) throw MonadError("monad without a section model");
  const auto& ref = doc.at("model_ref");
  if (ref.at("N").get<std::size_t>() != model->n() || ref.at("seed").get<std::int64_t>() != model->seed())
    throw MonadError("monad document refers to a different section model");
  GradedObject objects = GradedObject::decomposable(model->n());
  RatMatrix phi = matrix_from_json(doc.at("phi"), objects.b.size(), objects.a.size(), "phi");
  RatMatrix psi = matrix_from_json(doc.at("psi"), objects.c.size(), objects.b.size(), "psi");
  return Monad{std::move(objects), std::move(phi), std::move(psi), std::move(model)};
}

}  // namespace theta_monad::complexes

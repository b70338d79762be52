#include "theta_monad/hyperext.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "theta_monad/chow.hpp"
#include "theta_monad/sections.hpp"

namespace theta_monad::hyperext {

namespace {

std::string pos_str(Pos pos) {
  return "(" + std::to_string(pos.first) + "," + std::to_string(pos.second) + ")";
}

}  // namespace

bool in_grid(Pos pos) {
  return pos.first >= kPMin && pos.first <= kPMax && pos.second >= kQMin && pos.second <= kQMax;
}

SpectralSheet SpectralSheet::first(const std::map<Pos, std::size_t>& e1_dims) {
  SpectralSheet s;
  for (int q = kQMin; q <= kQMax; ++q)
    for (int p = kPMin; p <= kPMax; ++p) {
      const auto it = e1_dims.find({p, q});
      const std::size_t n = it == e1_dims.end() ? 0 : it->second;
      s.entries_.emplace(Pos{p, q}, SheetEntry{Subspace::full(n), Subspace::zero(n)});
    }
  for (const auto& [pos, n] : e1_dims)
    if (!in_grid(pos) && n != 0) throw std::out_of_range("E1 entry outside the grid at " + pos_str(pos));
  return s;
}

std::size_t SpectralSheet::dim(Pos pos) const {
  if (!in_grid(pos)) return 0;
  return entries_.at(pos).dim();
}

std::size_t SpectralSheet::ambient(Pos pos) const {
  if (!in_grid(pos)) return 0;
  return entries_.at(pos).cycles.ambient_dim();
}

const SheetEntry& SpectralSheet::entry(Pos pos) const {
  if (!in_grid(pos)) throw std::out_of_range("no entry at " + pos_str(pos));
  return entries_.at(pos);
}

Grid SpectralSheet::dims() const {
  Grid g(kQMax - kQMin + 1, std::vector<std::size_t>(kPMax - kPMin + 1));
  for (int q = kQMin; q <= kQMax; ++q)
    for (int p = kPMin; p <= kPMax; ++p) g[q - kQMin][p - kPMin] = dim({p, q});
  return g;
}

void SpectralSheet::set_differential(Pos pos, RatMatrix rep) {
  const Pos tgt = target(pos);
  if (!in_grid(pos) || !in_grid(tgt))
    throw std::out_of_range("differential out of " + pos_str(pos) + " leaves the grid");
  if (rep.cols() != ambient(pos) || rep.rows() != ambient(tgt))
    throw exactla::DimensionMismatch("d" + std::to_string(r_) + " at " + pos_str(pos) + " has the wrong shape");
  diffs_[pos] = std::move(rep);
}

const RatMatrix* SpectralSheet::differential(Pos pos) const {
  const auto it = diffs_.find(pos);
  return it == diffs_.end() ? nullptr : &it->second;
}

SpectralSheet SpectralSheet::next() const {
  // Which differentials actually act on this page.
  auto active = [&](Pos pos) -> const RatMatrix* {
    const Pos tgt = target(pos);
    if (!in_grid(tgt) || dim(pos) == 0 || dim(tgt) == 0) return nullptr;
    const RatMatrix* d = differential(pos);
    if (!d)
      throw std::logic_error("d" + std::to_string(r_) + " " + pos_str(pos) + " -> " + pos_str(tgt) +
                             " joins nonzero entries but was never supplied");
    return d;
  };

  SpectralSheet out;
  out.r_ = r_ + 1;
  for (const auto& [pos, e] : entries_) {
    const std::size_t amb = e.cycles.ambient_dim();

    std::vector<RatVector> z = e.cycles.basis();
    if (const RatMatrix* d = active(pos)) {
      const SheetEntry& te = entries_.at(target(pos));
      for (const auto& b : e.boundaries.basis())
        if (!te.boundaries.contains((*d) * b))
          throw std::logic_error("d" + std::to_string(r_) + " at " + pos_str(pos) + " does not preserve boundaries");
      // Solve d Z y + B w = 0 and keep Z y.
      const RatMatrix dz = (*d) * e.cycles.as_columns();
      const RatMatrix sys = dz.hstack(te.boundaries.as_columns());
      const std::size_t zc = e.cycles.dim();
      z.clear();
      const Subspace ker = exactla::kernel_basis(sys);
      for (const auto& k : ker.basis()) {
        RatVector y(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(zc));
        RatVector v(amb);
        for (std::size_t c = 0; c < zc; ++c) {
          if (sgn(y[c]) == 0) continue;
          const auto& col = e.cycles.basis()[c];
          for (std::size_t a = 0; a < amb; ++a) v[a] += y[c] * col[a];
        }
        z.push_back(std::move(v));
      }
    }

    std::vector<RatVector> b = e.boundaries.basis();
    const Pos src{pos.first - r_, pos.second + r_ - 1};
    if (in_grid(src)) {
      if (const RatMatrix* d = active(src))
        for (const auto& v : entries_.at(src).cycles.basis()) b.push_back((*d) * v);
    }

    Subspace zs = Subspace::span(amb, z);
    Subspace bs = Subspace::span(amb, b);
    if (zs.dim() < bs.dim()) throw std::logic_error("boundaries outgrew cycles at " + pos_str(pos));
    out.entries_.emplace(pos, SheetEntry{std::move(zs), std::move(bs)});
  }
  return out;
}

bool degenerates(const SpectralSheet& sheet, int from_level) {
  const int span = std::max(kPMax - kPMin, kQMax - kQMin) + 2;
  for (int r = from_level; r <= span; ++r)
    for (int q = kQMin; q <= kQMax; ++q)
      for (int p = kPMin; p <= kPMax; ++p) {
        if (sheet.dim({p, q}) == 0) continue;
        if (sheet.dim({p + r, q - r + 1}) != 0) return false;
      }
  return true;
}

bool serre_symmetric(const SpectralSheet& sheet) {
  for (int q = kQMin; q <= kQMax; ++q)
    for (int p = kPMin; p <= kPMax; ++p)
      if (sheet.dim({p, q}) != sheet.dim({-p, 3 - q})) return false;
  return true;
}

std::array<std::size_t, 4> abutment_dims(const SpectralSheet& sheet) {
  std::array<std::size_t, 4> out{};
  for (int q = kQMin; q <= kQMax; ++q)
    for (int p = kPMin; p <= kPMax; ++p) {
      const std::size_t d = sheet.dim({p, q});
      if (d == 0) continue;
      const int k = p + q;
      if (k < 0 || k > 3) throw std::logic_error("nonzero entry in total degree " + std::to_string(k));
      out[static_cast<std::size_t>(k)] += d;
    }
  return out;
}

std::map<Pos, std::size_t> e1_dims(const Monad& m) {
  std::map<Pos, std::size_t> dims;
  for (int q = kQMin; q <= kQMax; ++q)
    for (int p = kPMin; p <= kPMax; ++p)
      dims[{p, q}] = complexes::ext_layout(m.objects, m.objects, p, q).dim;
  return dims;
}

SpectralSheet e1_sheet(const Monad& m) {
  SpectralSheet s = SpectralSheet::first(e1_dims(m));
  complexes::HomComplex hc(m, m);
  for (int p = kPMin; p <= kPMax; ++p) {
    if (s.dim({p, 3}) != hc.layout(-p).dim)
      throw std::logic_error("E1^{p,3} is not dual to E1^{-p,0} at p = " + std::to_string(p));
  }
  for (int p = kPMin; p < kPMax; ++p) {
    s.set_differential({p, 0}, hc.differential(p));
    s.set_differential({p, 3}, hc.differential(-p - 1).transpose());
  }
  return s;
}

namespace {

using sections::to_v2;

RatVector lifted(const Monad& m, std::size_t pair, const RatVector& xi, const Rational& shift) {
  RatVector v = to_v2(*m.model, sections::lift(*m.model, pair, xi));
  if (sgn(shift) != 0) v = exactla::add(v, exactla::scale(shift, m.model->t(pair)));
  return v;
}

}  // namespace

V2Matrix obstruction_matrix(const Monad& m, const ObGenerator& gen, const LiftShift& shift) {
  const std::size_t n = m.model->n();
  const std::size_t last = n - 1;
  const std::size_t k = n - 1;  // |A| = |C|
  if (gen.xi.size() != sections::kH1Dim) throw exactla::DimensionMismatch("xi must lie in H^1(O_X)");
  V2Matrix out(k, std::vector<RatVector>(k, RatVector(sections::kV2Dim)));

  switch (gen.kind) {
    case ObGenerator::Kind::F: {
      if (gen.i >= k || gen.j >= k) throw std::out_of_range("f generator index out of range");
      const RatVector u = lifted(m, gen.i, gen.xi, shift.own);
      const RatVector v = lifted(m, last, gen.xi, shift.last);
      for (std::size_t r = 0; r < k; ++r) out[r][gen.j] = v;
      out[gen.i][gen.j] = exactla::add(out[gen.i][gen.j], u);
      break;
    }
    case ObGenerator::Kind::G: {
      if (gen.i >= n) throw std::out_of_range("g generator pair out of range");
      const RatVector u = lifted(m, gen.i, gen.xi, shift.own);
      if (gen.i != last) {
        out[gen.i][gen.i] = u;
      } else {
        for (auto& row : out)
          for (auto& e : row) e = u;
      }
      break;
    }
    case ObGenerator::Kind::H: {
      if (gen.i >= k || gen.j >= k) throw std::out_of_range("h generator index out of range");
      const RatVector u = lifted(m, gen.j, gen.xi, shift.own);
      const RatVector v = lifted(m, last, gen.xi, shift.last);
      for (std::size_t c = 0; c < k; ++c) out[gen.i][c] = v;
      out[gen.i][gen.j] = exactla::add(out[gen.i][gen.j], u);
      break;
    }
  }
  return out;
}

namespace {

RatVector flatten_hom2(const complexes::Layout& hom2, const V2Matrix& mat) {
  RatVector v(hom2.dim);
  for (std::size_t r = 0; r < mat.size(); ++r)
    for (std::size_t c = 0; c < mat[r].size(); ++c) {
      const auto& blk = hom2.find(-1, c, r);
      for (std::size_t e = 0; e < blk.dim; ++e) v[blk.offset + e] = mat[r][c][e];
    }
  return v;
}

std::vector<ObGenerator> generators_of(const Monad& m, const complexes::Layout& ext1) {
  std::vector<ObGenerator> gens;
  for (const auto& blk : ext1.blocks)
    for (std::size_t e = 0; e < blk.dim; ++e) {
      RatVector xi(sections::kH1Dim);
      xi[e] = 1;
      ObGenerator g{ObGenerator::Kind::F, blk.src, blk.tgt, +1, std::move(xi)};
      if (blk.degree == 0) {
        const auto& slot = m.objects.b_slots.at(blk.src);
        g.kind = ObGenerator::Kind::G;
        g.i = slot.pair;
        g.j = 0;
        g.sign = slot.sign;
      } else if (blk.degree == 1) {
        g.kind = ObGenerator::Kind::H;
      }
      gens.push_back(std::move(g));
    }
  return gens;
}

void require_generic(const Monad& m) {
  const auto rep = sections::check_genericity(*m.model);
  if (rep.all_passed()) return;
  std::string failed;
  for (const auto& c : rep.checks)
    if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
  throw sections::GenericityError("section model is not generic: " + failed);
}

void require_decomposable_shape(const Monad& m) {
  const std::size_t n = m.model->n();
  if (m.objects.a.size() != n - 1 || m.objects.c.size() != n - 1 || m.objects.b.size() != 2 * n)
    throw complexes::MonadError("obstruction map needs the decomposable monad shape");
}

RatMatrix representative(const Monad& m, const complexes::Layout& ext1, const complexes::Layout& hom2,
                         const LiftShift& shift) {
  const auto gens = generators_of(m, ext1);
  std::vector<RatVector> cols;
  cols.reserve(gens.size());
  for (const auto& g : gens) cols.push_back(flatten_hom2(hom2, obstruction_matrix(m, g, shift)));
  return RatMatrix::from_columns(hom2.dim, cols);
}

}  // namespace

ObMap obstruction_map(const Monad& m) {
  require_decomposable_shape(m);
  require_generic(m);
  complexes::HomComplex hc(m, m);
  const auto ext1 = complexes::ext_layout(m.objects, m.objects, 0, 1);
  const auto& hom2 = hc.layout(2);

  ObMap ob;
  ob.representative = representative(m, ext1, hom2, {});

  exactla::EchelonBasis im(hom2.dim);
  const RatMatrix& d1 = hc.differential(1);
  for (std::size_t c = 0; c < d1.cols(); ++c) im.add(d1.column(c));
  const auto free = im.non_pivots();
  ob.on_e2 = RatMatrix(free.size(), ob.representative.cols());
  for (std::size_t c = 0; c < ob.representative.cols(); ++c) {
    const RatVector res = im.residual(ob.representative.column(c));
    for (std::size_t r = 0; r < free.size(); ++r) ob.on_e2(r, c) = res[free[r]];
  }
  ob.rank = exactla::rank(ob.on_e2);
  ob.kernel_dim = ob.on_e2.cols() - ob.rank;
  return ob;
}

namespace {

// Membership test for im(d1) inside E1^{2,0}, with the layout to flatten into.
struct ImageOfD1 {
  complexes::Layout hom2;
  exactla::EchelonBasis im;

  explicit ImageOfD1(const Monad& m) : hom2(), im(0) {
    complexes::HomComplex hc(m, m);
    hom2 = hc.layout(2);
    im = exactla::EchelonBasis(hom2.dim);
    const RatMatrix& d1 = hc.differential(1);
    for (std::size_t c = 0; c < d1.cols(); ++c) im.add(d1.column(c));
  }

  bool same_class(const Monad& m, const ObGenerator& g, const LiftShift& shift) const {
    const RatVector base = flatten_hom2(hom2, obstruction_matrix(m, g));
    const RatVector moved = flatten_hom2(hom2, obstruction_matrix(m, g, shift));
    RatVector diff(base.size());
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = moved[k] - base[k];
    return im.contains(diff);
  }
};

}  // namespace

std::vector<ObGenerator> ob_generators(const Monad& m) {
  require_decomposable_shape(m);
  return generators_of(m, complexes::ext_layout(m.objects, m.objects, 0, 1));
}

bool ob_well_defined(const Monad& m, const ObGenerator& gen, const LiftShift& shift) {
  require_decomposable_shape(m);
  require_generic(m);
  return ImageOfD1(m).same_class(m, gen, shift);
}

bool ob_well_defined(const Monad& m, std::uint64_t seed, std::size_t trials) {
  require_decomposable_shape(m);
  require_generic(m);
  const ImageOfD1 image(m);
  const auto gens = ob_generators(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 7);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& g = gens[pick(rng)];
    LiftShift shift;
    do {
      shift = {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
      shift.own.canonicalize();
      shift.last.canonicalize();
    } while (sgn(shift.own) == 0 && sgn(shift.last) == 0);
    if (!image.same_class(m, g, shift)) return false;
  }
  return true;
}

HyperextResult compute(const Monad& m) {
  HyperextResult res;
  res.ob = obstruction_map(m);
  res.e1 = e1_sheet(m);
  res.e2 = res.e1.next();
  res.e2.set_differential({0, 1}, res.ob.representative);
  res.e2.set_differential({-2, 3}, res.ob.representative.transpose());
  res.e3 = res.e2.next();
  for (const auto* s : {&res.e1, &res.e2, &res.e3})
    if (!serre_symmetric(*s))
      throw std::logic_error("E" + std::to_string(s->level()) + " is not Serre symmetric");
  res.degenerate = degenerates(res.e3, 3);
  res.ext_dims = abutment_dims(res.e3);
  const auto formula = chow::ext1_dim_formula(complexes::chern_of_cohomology(m));
  res.formula_match = res.degenerate && static_cast<std::int64_t>(res.ext_dims[1]) == formula;
  return res;
}

}  // namespace theta_monad::hyperext

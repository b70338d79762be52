#include "theta_monad/points.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace theta_monad::points {

using exactla::Integer;

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row-style Hermite normal form over the integers.
void hermite(std::vector<std::vector<Integer>> rows, std::size_t width,
             std::vector<std::vector<Integer>>& out, std::vector<std::size_t>& pivots) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][c]) == 0) continue;
        const Integer q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < width; ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][c]) != 0) others = true;
      }
      if (!others) break;
    }
    if (sgn(rows[r][c]) == 0) continue;
    if (sgn(rows[r][c]) < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer q = floor_div(rows[i][c], rows[r][c]);
      if (sgn(q) != 0)
        for (std::size_t j = c; j < width; ++j) rows[i][j] -= q * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out = std::move(rows);
}

}  // namespace

PointGroup::PointGroup(std::vector<std::string> generators,
                       std::vector<std::vector<std::int64_t>> relations)
    : names_(std::move(generators)), relations_(std::move(relations)) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& rel : relations_) {
    if (rel.size() != names_.size())
      throw std::invalid_argument("relation length does not match generator count");
    rows.emplace_back(rel.begin(), rel.end());
  }
  hermite(std::move(rows), names_.size(), hnf_, hnf_pivot_);
}

PointGroupPtr PointGroup::create(std::vector<std::string> generators,
                                 std::vector<std::vector<std::int64_t>> relations) {
  std::vector<std::string> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate generator name");
  return PointGroupPtr(new PointGroup(std::move(generators), std::move(relations)));
}

PointGroupPtr PointGroup::free(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return create(std::move(names));
}

PointExpr PointGroup::zero() const {
  return PointExpr(shared_from_this(), std::vector<std::int64_t>(names_.size(), 0));
}

PointExpr PointGroup::gen(std::size_t index) const {
  if (index >= names_.size()) throw UnknownGenerator("generator index out of range");
  std::vector<std::int64_t> c(names_.size(), 0);
  c[index] = 1;
  return PointExpr(shared_from_this(), std::move(c));
}

PointExpr PointGroup::gen(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UnknownGenerator("unknown generator '" + name + "'");
  return gen(static_cast<std::size_t>(it - names_.begin()));
}

PointExpr PointGroup::expr(const std::vector<std::pair<std::string, std::int64_t>>& terms) const {
  PointExpr e = zero();
  for (const auto& [name, k] : terms) e = e + gen(name) * k;
  return e;
}

std::vector<std::int64_t> PointGroup::reduce(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != names_.size()) throw GroupMismatch("coefficient vector has wrong length");
  std::vector<Integer> v(coeffs.begin(), coeffs.end());
  for (std::size_t k = 0; k < hnf_.size(); ++k) {
    const std::size_t p = hnf_pivot_[k];
    const Integer q = floor_div(v[p], hnf_[k][p]);
    if (sgn(q) == 0) continue;
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * hnf_[k][j];
  }
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("point coefficient overflow");
    out.push_back(x.get_si());
  }
  return out;
}

PointExpr::PointExpr(PointGroupPtr group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (!group_) throw std::invalid_argument("point expression without a group");
  if (coeffs_.size() != group_->generators().size())
    throw GroupMismatch("coefficient vector has wrong length");
}

namespace {
void require_same(const PointExpr& a, const PointExpr& b) {
  if (a.group() != b.group()) throw GroupMismatch("point expressions over different groups");
}
}  // namespace

PointExpr PointExpr::operator+(const PointExpr& o) const {
  require_same(*this, o);
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return PointExpr(group_, std::move(c));
}

PointExpr PointExpr::operator-(const PointExpr& o) const { return *this + (-o); }

PointExpr PointExpr::operator-() const { return *this * -1; }

PointExpr PointExpr::operator*(std::int64_t k) const {
  auto c = coeffs_;
  for (auto& x : c) x *= k;
  return PointExpr(group_, std::move(c));
}

bool PointExpr::operator==(const PointExpr& o) const {
  require_same(*this, o);
  return is_zero(*group_, *this - o);
}

std::vector<std::int64_t> PointExpr::canonical() const { return group_->reduce(coeffs_); }

std::string PointExpr::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto k = coeffs_[i];
    if (k == 0) continue;
    if (k < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    if (std::llabs(k) != 1) os << std::llabs(k);
    os << group_->generators()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

bool is_zero(const PointGroup& g, const PointExpr& e) {
  if (e.group().get() != &g) throw GroupMismatch("expression is not over this group");
  const auto r = g.reduce(e.coeffs());
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::string LineBundleLabel::to_string() const {
  std::string s = "P_{" + point.to_string() + "}";
  if (twist != 0) s += "(" + std::to_string(twist) + "Theta)";
  return s;
}

std::array<std::int64_t, 4> ext_dims(const LineBundleLabel& l1, const LineBundleLabel& l2) {
  if (l1.point.group() != l2.point.group()) throw GroupMismatch("labels over different point groups");
  const std::int64_t d = l2.twist - l1.twist;
  if (d > 0) return {d * d * d, 0, 0, 0};
  if (d < 0) return {0, 0, 0, -d * d * d};
  if (l1.point == l2.point) return {1, 3, 3, 1};
  return {0, 0, 0, 0};
}

}  // namespace theta_monad::points

#include "theta_monad/exactla.hpp"

#include <algorithm>
#include <numeric>

namespace theta_monad::exactla {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, const std::vector<RatVector>& cols) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const { return *this + (-rhs); }

RatMatrix RatMatrix::operator-() const {
  RatMatrix out = *this;
  for (auto& q : out.data_) q = -q;
  return out;
}

RatMatrix RatMatrix::hstack(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw DimensionMismatch("hstack row mismatch");
  RatMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

std::vector<Integer> primitive_integer(const RatVector& v) {
  Integer den = 1;
  for (const auto& q : v)
    if (sgn(q) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    out[i] = v[i].get_num() * (den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

std::size_t first_nonzero(const std::vector<Integer>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (sgn(w[i]) != 0) return i;
  return w.size();
}

void make_primitive(std::vector<Integer>& w, std::size_t from) {
  Integer g = 0;
  for (std::size_t i = from; i < w.size(); ++i) {
    if (sgn(w[i]) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (std::size_t i = from; i < w.size(); ++i)
      if (sgn(w[i]) != 0) mpz_divexact(w[i].get_mpz_t(), w[i].get_mpz_t(), g.get_mpz_t());
}

// w <- a*w - b*row with a = row[p], b = w[p]; zeroes w[p].
void eliminate(std::vector<Integer>& w, const std::vector<Integer>& row, std::size_t p) {
  Integer a = row[p];
  Integer b = w[p];
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
  }
  if (a != 1)
    for (auto& x : w)
      if (sgn(x) != 0) x *= a;
  for (std::size_t j = p; j < w.size(); ++j)
    if (sgn(row[j]) != 0) w[j] -= b * row[j];
}

bool reduce_integer(std::vector<Integer>& w, const std::vector<std::vector<Integer>>& rows,
                    const std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t p = pivots[k];
    if (sgn(w[p]) == 0) continue;
    eliminate(w, rows[k], p);
    make_primitive(w, 0);
  }
  return first_nonzero(w) != w.size();
}

}  // namespace

bool EchelonBasis::add(const RatVector& v) {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  std::vector<Integer> w = primitive_integer(v);
  if (!reduce_integer(w, rows_, pivot_)) return false;
  const std::size_t p = first_nonzero(w);
  if (sgn(w[p]) < 0)
    for (auto& x : w) x = -x;
  const auto pos = std::lower_bound(pivot_.begin(), pivot_.end(), p) - pivot_.begin();
  pivot_.insert(pivot_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

bool EchelonBasis::contains(const RatVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  std::vector<Integer> w = primitive_integer(v);
  return !reduce_integer(w, rows_, pivot_);
}

RatVector EchelonBasis::residual(const RatVector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  RatVector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivot_[k];
    if (sgn(r[p]) == 0) continue;
    const Rational c = r[p] / Rational(rows_[k][p]);
    for (std::size_t j = p; j < ambient_; ++j)
      if (sgn(rows_[k][j]) != 0) r[j] -= c * rows_[k][j];
  }
  return r;
}

std::vector<std::size_t> EchelonBasis::pivots() const { return pivot_; }

std::vector<std::size_t> EchelonBasis::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < pivot_.size() && pivot_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

std::vector<RatVector> EchelonBasis::basis() const {
  std::vector<RatVector> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.emplace_back(row.begin(), row.end());
  return out;
}

Subspace::Subspace(std::size_t ambient_dim, std::vector<RatVector> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
  EchelonBasis check(ambient_);
  for (const auto& v : basis_) {
    if (v.size() != ambient_) throw std::invalid_argument("subspace basis vector has wrong length");
    if (!check.add(v)) throw std::invalid_argument("subspace basis vectors are linearly dependent");
  }
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RatVector> basis(ambient_dim, RatVector(ambient_dim));
  for (std::size_t i = 0; i < ambient_dim; ++i) basis[i][i] = 1;
  return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<RatVector>& generators) {
  EchelonBasis e(ambient_dim);
  for (const auto& g : generators) e.add(g);
  return Subspace(ambient_dim, e.basis());
}

bool Subspace::contains(const RatVector& v) const {
  EchelonBasis e(ambient_);
  for (const auto& b : basis_) e.add(b);
  return e.contains(v);
}

RatMatrix Subspace::as_columns() const { return RatMatrix::from_columns(ambient_, basis_); }

std::size_t rank(const RatMatrix& a) {
  // Eliminate along the shorter vectors.
  const bool by_rows = a.cols() <= a.rows();
  EchelonBasis e(by_rows ? a.cols() : a.rows());
  const std::size_t count = by_rows ? a.rows() : a.cols();
  for (std::size_t i = 0; i < count; ++i) {
    e.add(by_rows ? a.row(i) : a.column(i));
    if (e.dim() == e.ambient_dim()) break;
  }
  return e.dim();
}

namespace {

// Back substitution through an echelon form whose rows describe
// sum_j row[j] * x[j] = 0 over the first `vars` coordinates.
RatVector back_substitute(const EchelonBasis& e, std::size_t vars, RatVector x,
                          const std::vector<Integer>* rhs_col) {
  const auto& rows = e.integer_rows();
  const auto& piv = e.pivot_of_rows();
  for (std::size_t k = rows.size(); k-- > 0;) {
    const std::size_t p = piv[k];
    Rational acc = rhs_col ? Rational((*rhs_col)[k]) : Rational(0);
    for (std::size_t j = p + 1; j < vars; ++j)
      if (sgn(rows[k][j]) != 0 && sgn(x[j]) != 0) acc -= rows[k][j] * x[j];
    x[p] = acc / Rational(rows[k][p]);
  }
  return x;
}

}  // namespace

Subspace kernel_basis(const RatMatrix& a) {
  EchelonBasis e(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) e.add(a.row(r));
  std::vector<RatVector> basis;
  for (std::size_t f : e.non_pivots()) {
    RatVector x(a.cols());
    x[f] = 1;
    x = back_substitute(e, a.cols(), std::move(x), nullptr);
    const auto prim = primitive_integer(x);
    basis.emplace_back(prim.begin(), prim.end());
  }
  return Subspace(a.cols(), std::move(basis));
}

Subspace image_basis(const RatMatrix& a) {
  EchelonBasis e(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) e.add(a.column(c));
  return Subspace(a.rows(), e.basis());
}

std::size_t quotient_dim(std::size_t ambient, const Subspace& sub) {
  if (sub.ambient_dim() != ambient)
    throw DimensionMismatch("subspace ambient dimension " + std::to_string(sub.ambient_dim()) +
                            " does not match " + std::to_string(ambient));
  return ambient - sub.dim();
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t n = a.cols();
  EchelonBasis e(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    RatVector row = a.row(r);
    row.push_back(b[r]);
    e.add(row);
  }
  for (std::size_t p : e.pivots())
    if (p == n) return std::nullopt;
  std::vector<Integer> rhs;
  for (const auto& row : e.integer_rows()) rhs.push_back(row[n]);
  return back_substitute(e, n, RatVector(n), &rhs);
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || sgn(q.get_den()) == 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  q.canonicalize();
  return q;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RatVector add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
  RatVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RatVector scale(const Rational& c, const RatVector& v) {
  RatVector out = v;
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace theta_monad::exactla

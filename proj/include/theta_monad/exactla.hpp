#pragma once

// Exact rational linear algebra over GMP rationals.
//
// Elimination is fraction-free: vectors are scaled to primitive integer rows
// and combined by cross-multiplication.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta_monad::exactla {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(std::size_t rows, const std::vector<RatVector>& cols);
  static RatMatrix from_rows(std::size_t cols, const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatVector operator*(const RatVector& v) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix operator-() const;
  bool operator==(const RatMatrix& rhs) const = default;

  // [this | rhs]
  RatMatrix hstack(const RatMatrix& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Incrementally built row-echelon basis of a subspace of Q^n.
//
// Stored vectors are primitive integer vectors; vector k has its first
// nonzero entry at pivots()[k] and basis vectors are kept sorted by pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  // Returns true when v was independent of the current span (and was added).
  bool add(const RatVector& v);
  bool contains(const RatVector& v) const;

  // Exact residual of v after eliminating every pivot coordinate. Two vectors
  // have equal residuals iff they agree modulo the span.
  RatVector residual(const RatVector& v) const;

  std::vector<std::size_t> pivots() const;
  std::vector<std::size_t> non_pivots() const;
  std::vector<RatVector> basis() const;

  const std::vector<std::vector<Integer>>& integer_rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_of_rows() const { return pivot_; }

 private:
  std::size_t ambient_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivot_;
};

class Subspace {
 public:
  // Throws std::invalid_argument when the vectors are dependent or of the
  // wrong length.
  Subspace(std::size_t ambient_dim, std::vector<RatVector> basis);

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  // Independent basis of the span of arbitrary generators.
  static Subspace span(std::size_t ambient_dim, const std::vector<RatVector>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  bool contains(const RatVector& v) const;

  // Basis vectors as the columns of an ambient_dim x dim matrix.
  RatMatrix as_columns() const;

 private:
  std::size_t ambient_;
  std::vector<RatVector> basis_;
};

std::size_t rank(const RatMatrix& a);
Subspace kernel_basis(const RatMatrix& a);
Subspace image_basis(const RatMatrix& a);
std::size_t quotient_dim(std::size_t ambient, const Subspace& sub);

// Some x with a*x = b, free variables set to zero; nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

// Integer multiple of v with coprime integer entries (zero stays zero).
std::vector<Integer> primitive_integer(const RatVector& v);

std::string to_fraction_string(const Rational& q);
Rational parse_rational(const std::string& s);

bool is_zero(const RatVector& v);
RatVector add(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& c, const RatVector& v);

}  // namespace theta_monad::exactla

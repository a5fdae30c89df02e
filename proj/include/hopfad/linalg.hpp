#pragma once

#include "hopfad/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hopfad {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldContext& f, std::size_t n);
Vector unit_vector(const FieldContext& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
/// Index of the first nonzero entry, or v.size() when v = 0.
std::size_t first_nonzero(const Vector& v);
void axpy(Vector& y, const Scalar& a, const Vector& x);  // y += a*x
Vector scaled(const Scalar& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);

/// Dense row-major matrix over one cyclotomic field.
class Matrix {
 public:
  Matrix(const FieldContext& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldContext& field, std::size_t n);
  static Matrix from_columns(const FieldContext& field, std::size_t rows,
                             const std::vector<Vector>& cols);
  static Matrix from_rows(const FieldContext& field, std::size_t cols,
                          const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldContext& field() const { return field_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  bool is_zero() const;

  Vector apply(const Vector& v) const;  // this * v
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  FieldContext field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination with leftmost pivots normalized to 1.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace given by its unique reduced-echelon basis: pivot columns
/// strictly increase, pivot entries are 1, and every other basis vector is
/// zero in each pivot column. Equal subspaces have equal representations.
class SubspaceBasis {
 public:
  SubspaceBasis(const FieldContext& field, std::size_t ambient_dim)
      : field_(field), ambient_dim_(ambient_dim) {}

  /// Canonical basis of span(vectors).
  static SubspaceBasis span(const FieldContext& field, std::size_t ambient_dim,
                            const std::vector<Vector>& vectors);

  const FieldContext& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

 private:
  FieldContext field_;
  std::size_t ambient_dim_;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

SubspaceBasis kernel_basis(const Matrix& m);

/// Exact coordinates c with sum c_i b_i = v, or nullopt when v is outside
/// the span (a closure failure for whoever asked).
std::optional<Vector> coords_in_basis(const Vector& v, const SubspaceBasis& b);

/// Kronecker product; (i (x) j) sits at index i*dim_b + j.
Matrix kron(const Matrix& a, const Matrix& b);

/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);

/// A particular solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

/// Accumulates linear equations one row at a time, keeping a semi-echelon
/// form (distinct leading columns). The kernel it reports is canonical, so
/// it agrees bit-for-bit with kernel_basis on the dense matrix.
class SparseEliminator {
 public:
  SparseEliminator(const FieldContext& field, std::size_t cols);

  /// Row entries may be unsorted and may repeat a column; they are merged.
  void add_row(SparseRow row);
  void add_row(const Vector& dense);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }
  SubspaceBasis kernel() const;

 private:
  FieldContext field_;
  std::size_t cols_;
  std::size_t rank_ = 0;
  std::vector<SparseRow> pivot_rows_;  // indexed by leading column; empty = none
};

}  // namespace hopfad

#pragma once

#include "hopfad/linalg.hpp"

namespace hopfad {

/// Sorted (index, value) pairs with nonzero values; same layout as SparseRow.
using SparseVec = SparseRow;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const FieldContext& f, std::size_t n, const SparseVec& v);
/// a + s*b
SparseVec sparse_axpy(const SparseVec& a, const Scalar& s, const SparseVec& b);
SparseVec sparse_scaled(const Scalar& s, const SparseVec& v);
SparseVec sparse_unit(const FieldContext& f, std::size_t i);
/// Merges repeated indices and drops zeros.
void sparse_normalize(SparseVec& v);

/// Linear map stored column by column; column c is the image of e_c.
/// Structure maps (products, coproducts, actions) are mostly sparse, and
/// composites like m(m (x) id) only ever touch a few entries per column.
class LinearMap {
 public:
  LinearMap(const FieldContext& field, std::size_t rows, std::size_t cols);

  static LinearMap identity(const FieldContext& field, std::size_t n);
  static LinearMap from_matrix(const Matrix& m);
  /// Permutation sending e_c to e_{perm[c]}.
  static LinearMap permutation(const FieldContext& field, const std::vector<std::size_t>& perm);
  /// Flip V (x) W -> W (x) V.
  static LinearMap flip(const FieldContext& field, std::size_t dim_v, std::size_t dim_w);

  Matrix to_matrix() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldContext& field() const { return field_; }

  const SparseVec& column(std::size_t c) const { return columns_[c]; }
  void set_column(std::size_t c, SparseVec v);
  void add(std::size_t r, std::size_t c, const Scalar& s);
  Scalar entry(std::size_t r, std::size_t c) const;

  SparseVec apply(const SparseVec& v) const;
  Vector apply(const Vector& v) const;

  LinearMap operator*(const LinearMap& o) const;  // composition this o o
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& s) const;
  bool is_zero() const;

  /// First column where the maps differ, or cols() when equal.
  std::size_t first_difference(const LinearMap& o) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  FieldContext field_;
  std::size_t rows_, cols_;
  std::vector<SparseVec> columns_;
};

/// Kronecker product with the kron index convention.
LinearMap kron(const LinearMap& a, const LinearMap& b);
LinearMap kron(const std::vector<const LinearMap*>& factors);

}  // namespace hopfad

#include "hopfad/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfad {

SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const FieldContext& f, std::size_t n, const SparseVec& v) {
  Vector out = zero_vector(f, n);
  for (const auto& [i, s] : v) out.at(i) = s;
  return out;
}

SparseVec sparse_axpy(const SparseVec& a, const Scalar& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Scalar v = a[i].second + s * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scaled(const Scalar& s, const SparseVec& v) {
  SparseVec out;
  if (s.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, s * x);
  return out;
}

SparseVec sparse_unit(const FieldContext& f, std::size_t i) { return {{i, Scalar::one(f)}}; }

void sparse_normalize(SparseVec& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec merged;
  merged.reserve(v.size());
  for (auto& e : v) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
      merged.push_back(std::move(e));
    }
  }
  if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
  v = std::move(merged);
}

LinearMap::LinearMap(const FieldContext& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), columns_(cols) {}

LinearMap LinearMap::identity(const FieldContext& field, std::size_t n) {
  LinearMap m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = sparse_unit(field, i);
  return m;
}

LinearMap LinearMap::from_matrix(const Matrix& a) {
  LinearMap m(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero()) m.columns_[c].emplace_back(r, a(r, c));
  return m;
}

LinearMap LinearMap::permutation(const FieldContext& field, const std::vector<std::size_t>& perm) {
  LinearMap m(field, perm.size(), perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) m.columns_[c] = sparse_unit(field, perm[c]);
  return m;
}

LinearMap LinearMap::flip(const FieldContext& field, std::size_t dim_v, std::size_t dim_w) {
  std::vector<std::size_t> perm(dim_v * dim_w);
  for (std::size_t v = 0; v < dim_v; ++v)
    for (std::size_t w = 0; w < dim_w; ++w) perm[v * dim_w + w] = w * dim_v + v;
  return permutation(field, perm);
}

Matrix LinearMap::to_matrix() const {
  Matrix m(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& [r, s] : columns_[c]) m(r, c) = s;
  return m;
}

void LinearMap::set_column(std::size_t c, SparseVec v) {
  sparse_normalize(v);
  if (!v.empty() && v.back().first >= rows_) throw std::out_of_range("LinearMap: row out of range");
  columns_.at(c) = std::move(v);
}

void LinearMap::add(std::size_t r, std::size_t c, const Scalar& s) {
  if (r >= rows_) throw std::out_of_range("LinearMap: row out of range");
  columns_.at(c) = sparse_axpy(columns_[c], s, sparse_unit(field_, r));
}

Scalar LinearMap::entry(std::size_t r, std::size_t c) const {
  for (const auto& [i, s] : columns_.at(c))
    if (i == r) return s;
  return Scalar::zero(field_);
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [c, s] : v) {
    if (c >= cols_) throw std::out_of_range("LinearMap::apply: index out of range");
    for (const auto& [r, x] : columns_[c]) acc.emplace_back(r, s * x);
  }
  sparse_normalize(acc);
  return acc;
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("LinearMap::apply: size mismatch");
  return to_dense(field_, rows_, apply(to_sparse(v)));
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("LinearMap composition: shape mismatch");
  LinearMap out(field_, rows_, o.cols_);
  for (std::size_t c = 0; c < o.cols_; ++c) out.columns_[c] = apply(o.columns_[c]);
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("LinearMap sum: shape mismatch");
  LinearMap out(field_, rows_, cols_);
  const Scalar one = Scalar::one(field_);
  for (std::size_t c = 0; c < cols_; ++c) out.columns_[c] = sparse_axpy(columns_[c], one, o.columns_[c]);
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + o.scaled(-Scalar::one(field_)); }

LinearMap LinearMap::scaled(const Scalar& s) const {
  LinearMap out(field_, rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.columns_[c] = sparse_scaled(s, columns_[c]);
  return out;
}

bool LinearMap::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

std::size_t LinearMap::first_difference(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return 0;
  for (std::size_t c = 0; c < cols_; ++c)
    if (columns_[c] != o.columns_[c]) return c;
  return cols_;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      SparseVec col;
      col.reserve(a.column(i).size() * b.column(j).size());
      for (const auto& [ra, sa] : a.column(i))
        for (const auto& [rb, sb] : b.column(j)) col.emplace_back(ra * b.rows() + rb, sa * sb);
      out.set_column(i * b.cols() + j, std::move(col));
    }
  }
  return out;
}

LinearMap kron(const std::vector<const LinearMap*>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron of no factors");
  LinearMap out = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, *factors[i]);
  return out;
}

}  // namespace hopfad

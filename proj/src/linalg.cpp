#include "hopfad/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfad {

Vector zero_vector(const FieldContext& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldContext& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector scaled(const Scalar& a, const Vector& x) {
  Vector out(x);
  for (auto& s : out) s *= a;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: length mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Matrix::Matrix(const FieldContext& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldContext& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(const FieldContext& field, std::size_t rows,
                            const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const FieldContext& field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& b = o(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= o.entries_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(*this);
  for (auto& e : out.entries_) e *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// In-place Gauss-Jordan on a list of rows; returns pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    Vector& prow = rows[next];
    if (!prow[c].is_one()) {
      const Scalar s = prow[c].inv();
      for (std::size_t j = c; j < cols; ++j)
        if (!prow[j].is_zero()) prow[j] *= s;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c].is_zero()) continue;
      const Scalar f = rows[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!prow[j].is_zero()) rows[r][j] -= f * prow[j];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  auto pivots = reduce_rows(rows, m.cols());
  Matrix reduced = rows.empty() ? Matrix(m.field(), 0, m.cols()) : Matrix::from_rows(m.field(), m.cols(), rows);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

SubspaceBasis SubspaceBasis::span(const FieldContext& field, std::size_t ambient_dim,
                                  const std::vector<Vector>& vectors) {
  std::vector<Vector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("span: vector length mismatch");
    if (!hopfad::is_zero(v)) rows.push_back(v);
  }
  SubspaceBasis b(field, ambient_dim);
  b.pivots_ = reduce_rows(rows, ambient_dim);
  rows.resize(b.pivots_.size());
  b.vectors_ = std::move(rows);
  return b;
}

bool SubspaceBasis::contains(const Vector& v) const { return coords_in_basis(v, *this).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [this](const Vector& v) { return contains(v); });
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ && a.vectors_ == b.vectors_;
}

SubspaceBasis kernel_basis(const Matrix& m) {
  SparseEliminator elim(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) elim.add_row(m.row(r));
  return elim.kernel();
}

std::optional<Vector> coords_in_basis(const Vector& v, const SubspaceBasis& b) {
  if (v.size() != b.ambient_dim()) throw std::invalid_argument("coords_in_basis: length mismatch");
  const auto& field = b.field();
  Vector c;
  c.reserve(b.dim());
  Vector rest(v);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    c.push_back(v[b.pivots()[i]]);
    axpy(rest, -c.back(), b[i]);
  }
  if (!is_zero(rest)) return std::nullopt;
  (void)field;
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& t = b(k, l);
          if (!t.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = s * t;
        }
    }
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row(r);
    Vector id = unit_vector(m.field(), n, r);
    row.insert(row.end(), id.begin(), id.end());
    rows.push_back(std::move(row));
  }
  auto pivots = reduce_rows(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rows[r][n + c];
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  auto pivots = reduce_rows(rows, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][m.cols()];
  return x;
}

SparseEliminator::SparseEliminator(const FieldContext& field, std::size_t cols)
    : field_(field), cols_(cols), pivot_rows_(cols) {}

namespace {

void normalize(SparseRow& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  merged.reserve(row.size());
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
      merged.push_back(std::move(e));
    }
  }
  if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
  row = std::move(merged);
}

// a - f*b over sorted rows, dropping cancellations.
SparseRow sub_scaled(const SparseRow& a, const Scalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void SparseEliminator::add_row(SparseRow row) {
  for (const auto& e : row)
    if (e.first >= cols_) throw std::out_of_range("SparseEliminator: column out of range");
  normalize(row);
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    const SparseRow& pivot = pivot_rows_[lead];
    if (pivot.empty()) {
      if (!row.front().second.is_one()) {
        const Scalar s = row.front().second.inv();
        for (auto& e : row) e.second *= s;
      }
      pivot_rows_[lead] = std::move(row);
      ++rank_;
      return;
    }
    const Scalar f = row.front().second;
    row = sub_scaled(row, f, pivot);
  }
}

void SparseEliminator::add_row(const Vector& dense) {
  if (dense.size() != cols_) throw std::invalid_argument("SparseEliminator: row length mismatch");
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (!dense[c].is_zero()) row.emplace_back(c, dense[c]);
  add_row(std::move(row));
}

SubspaceBasis SparseEliminator::kernel() const {
  // Back-substitute from the right so each pivot row ends with zeros in
  // every other pivot column.
  std::vector<SparseRow> reduced(cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c = 0; c < cols_; ++c) is_pivot[c] = !pivot_rows_[c].empty();
  for (std::size_t c = cols_; c-- > 0;) {
    if (!is_pivot[c]) continue;
    SparseRow row = pivot_rows_[c];
    for (;;) {
      auto it = std::find_if(row.begin() + 1, row.end(),
                             [&](const auto& e) { return is_pivot[e.first]; });
      if (it == row.end()) break;
      const Scalar f = it->second;
      row = sub_scaled(row, f, reduced[it->first]);
    }
    reduced[c] = std::move(row);
  }
  std::vector<std::size_t> free_index(cols_, cols_);
  std::vector<Vector> vectors;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    free_index[c] = vectors.size();
    vectors.push_back(unit_vector(field_, cols_, c));
  }
  for (std::size_t p = 0; p < cols_; ++p) {
    if (!is_pivot[p]) continue;
    for (auto it = reduced[p].begin() + 1; it != reduced[p].end(); ++it)
      vectors[free_index[it->first]][p] = -it->second;
  }
  return SubspaceBasis::span(field_, cols_, vectors);
}

}  // namespace hopfad

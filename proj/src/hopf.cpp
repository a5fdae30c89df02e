#include "hopfad/hopf.hpp"

#include <stdexcept>

namespace hopfad {

SparseVec FinDimAlgebra::product(const SparseVec& a, const SparseVec& b) const {
  SparseVec acc;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      const Scalar xy = x * y;
      for (const auto& [r, c] : product(i, j)) acc.emplace_back(r, xy * c);
    }
  sparse_normalize(acc);
  return acc;
}

LinearMap FinDimAlgebra::left_mult(const SparseVec& a) const {
  LinearMap out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.set_column(j, product(a, sparse_unit(field, j)));
  return out;
}

LinearMap FinDimAlgebra::right_mult(const SparseVec& a) const {
  LinearMap out(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) out.set_column(j, product(sparse_unit(field, j), a));
  return out;
}

LinearMap FinDimAlgebra::unit_map() const {
  LinearMap out(field, dim, 1);
  out.set_column(0, unit);
  return out;
}

Scalar FinDimCoalgebra::counit_of(const SparseVec& v) const {
  Scalar acc = Scalar::zero(field);
  for (const auto& [i, x] : v) acc += x * counit_of(i);
  return acc;
}

LinearMap FinDimCoalgebra::comult2() const {
  return kron(comult, LinearMap::identity(field, dim)) * comult;
}

LinearMap tensor_mult_map(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  const auto& f = a.field;
  const LinearMap ia = LinearMap::identity(f, a.dim), ib = LinearMap::identity(f, b.dim);
  const LinearMap middle = LinearMap::flip(f, b.dim, a.dim);
  return kron(a.mult, b.mult) * kron({&ia, &middle, &ib});
}

FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  FinDimAlgebra out(a.field, a.dim * b.dim);
  out.mult = tensor_mult_map(a, b);
  for (const auto& [i, x] : a.unit)
    for (const auto& [j, y] : b.unit) out.unit.emplace_back(i * b.dim + j, x * y);
  return out;
}

SparseVec tensor_product(const FinDimAlgebra& a, const FinDimAlgebra& b, const SparseVec& u,
                         const SparseVec& v) {
  SparseVec acc;
  for (const auto& [i, x] : u) {
    const std::size_t i1 = i / b.dim, i2 = i % b.dim;
    for (const auto& [j, y] : v) {
      const std::size_t j1 = j / b.dim, j2 = j % b.dim;
      const Scalar xy = x * y;
      const SparseVec& pa = a.product(i1, j1);
      const SparseVec& pb = b.product(i2, j2);
      for (const auto& [r, s] : pa)
        for (const auto& [t, w] : pb) acc.emplace_back(r * b.dim + t, xy * s * w);
    }
  }
  sparse_normalize(acc);
  return acc;
}

FinDimAlgebra dual_algebra(const FinDimCoalgebra& c) {
  FinDimAlgebra out(c.field, c.dim);
  LinearMap mult(c.field, c.dim, c.dim * c.dim);
  for (std::size_t i = 0; i < c.dim; ++i)
    for (const auto& [jk, s] : c.comult.column(i)) mult.add(i, jk, s);
  out.mult = std::move(mult);
  for (std::size_t i = 0; i < c.dim; ++i) {
    const Scalar e = c.counit_of(i);
    if (!e.is_zero()) out.unit.emplace_back(i, e);
  }
  return out;
}

std::vector<std::size_t> split_index(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = index % dims[k];
    index /= dims[k];
  }
  return out;
}

json map_witness(const LinearMap& lhs, const LinearMap& rhs, std::size_t column,
                 const std::vector<std::size_t>& dims) {
  const SparseVec residual = sparse_axpy(lhs.column(column), -Scalar::one(lhs.field()), rhs.column(column));
  return {{"indices", split_index(column, dims)}, {"residual", sparse_to_json(residual)}};
}

void record_equal(VerificationReport& r, const std::string& claim_id, const LinearMap& lhs,
                  const LinearMap& rhs, const std::vector<std::size_t>& dims) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.fail(claim_id, {{"shape", {lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()}}});
    return;
  }
  const std::size_t c = lhs.first_difference(rhs);
  if (c == lhs.cols()) r.pass(claim_id);
  else r.fail(claim_id, map_witness(lhs, rhs, c, dims));
}

VerificationReport check_algebra(const FinDimAlgebra& a) {
  VerificationReport r;
  const LinearMap id = LinearMap::identity(a.field, a.dim);
  record_equal(r, "associativity", a.mult * kron(a.mult, id), a.mult * kron(id, a.mult),
               {a.dim, a.dim, a.dim});
  const LinearMap u = a.unit_map();
  record_equal(r, "left-unit", a.mult * kron(u, id), id, {a.dim});
  record_equal(r, "right-unit", a.mult * kron(id, u), id, {a.dim});
  return r;
}

VerificationReport check_coalgebra(const FinDimCoalgebra& c) {
  VerificationReport r;
  const LinearMap id = LinearMap::identity(c.field, c.dim);
  record_equal(r, "coassociativity", kron(c.comult, id) * c.comult, kron(id, c.comult) * c.comult,
               {c.dim});
  record_equal(r, "left-counit", kron(c.counit, id) * c.comult, id, {c.dim});
  record_equal(r, "right-counit", kron(id, c.counit) * c.comult, id, {c.dim});
  return r;
}

VerificationReport check_bialgebra(const FinDimAlgebra& a, const FinDimCoalgebra& c) {
  VerificationReport r;
  if (a.dim != c.dim) {
    r.fail("dimensions", {{"algebra", a.dim}, {"coalgebra", c.dim}});
    return r;
  }
  r.merge(check_algebra(a));
  r.merge(check_coalgebra(c));
  const auto& f = a.field;
  record_equal(r, "comult-multiplicative", c.comult * a.mult,
               tensor_mult_map(a, a) * kron(c.comult, c.comult), {a.dim, a.dim});
  record_equal(r, "counit-multiplicative", c.counit * a.mult, kron(c.counit, c.counit),
               {a.dim, a.dim});
  const LinearMap u = a.unit_map();
  record_equal(r, "comult-unit", c.comult * u, kron(u, u), {1});
  record_equal(r, "counit-unit", c.counit * u, LinearMap::identity(f, 1), {1});
  return r;
}

VerificationReport check_antipode(const FinDimHopf& h) {
  VerificationReport r;
  const auto& a = h.algebra;
  const auto& c = h.coalgebra;
  const LinearMap id = LinearMap::identity(a.field, a.dim);
  const LinearMap ue = a.unit_map() * c.counit;
  record_equal(r, "antipode-left", a.mult * kron(h.antipode, id) * c.comult, ue, {a.dim});
  record_equal(r, "antipode-right", a.mult * kron(id, h.antipode) * c.comult, ue, {a.dim});
  return r;
}

VerificationReport check_hopf(const FinDimHopf& h) {
  VerificationReport r = check_bialgebra(h.algebra, h.coalgebra);
  r.merge(check_antipode(h));
  return r;
}

LinearMap solve_antipode(const FinDimAlgebra& a, const FinDimCoalgebra& c) {
  // Unknowns: column 0 is a homogenizing variable t, then S_{rj} at
  // 1 + r*dim + j. A kernel vector with t = 1 is a solution.
  const auto& f = a.field;
  const std::size_t n = a.dim;
  SparseEliminator elim(f, 1 + n * n);
  for (std::size_t col = 0; col < n; ++col) {
    // sum_{j,k} Delta_col^{jk} sum_r S_{rj} m(e_r, e_k) = eps(col) 1
    std::vector<SparseRow> rows(n);
    for (const auto& [jk, dc] : c.comult.column(col)) {
      const std::size_t j = jk / n, k = jk % n;
      for (std::size_t rr = 0; rr < n; ++rr)
        for (const auto& [s, m] : a.product(rr, k)) rows[s].emplace_back(1 + rr * n + j, dc * m);
    }
    const Scalar e = c.counit_of(col);
    if (!e.is_zero())
      for (const auto& [s, u] : a.unit) rows[s].emplace_back(0, -(e * u));
    for (auto& row : rows) elim.add_row(std::move(row));
  }
  const SubspaceBasis ker = elim.kernel();
  if (ker.dim() == 0 || ker.pivots().front() != 0) throw NoAntipode();
  if (ker.dim() > 1) throw std::logic_error("antipode is not unique");
  LinearMap s(f, n, n);
  const Vector& v = ker[0];
  for (std::size_t rr = 0; rr < n; ++rr)
    for (std::size_t j = 0; j < n; ++j)
      if (!v[1 + rr * n + j].is_zero()) s.add(rr, j, v[1 + rr * n + j]);
  return s;
}

FinDimHopf make_hopf(FinDimAlgebra a, FinDimCoalgebra c) {
  LinearMap s = solve_antipode(a, c);
  return FinDimHopf(std::move(a), std::move(c), std::move(s));
}

}  // namespace hopfad

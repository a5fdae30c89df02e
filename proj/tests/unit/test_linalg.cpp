#include <doctest.h>

#include "hopfad/json_io.hpp"
#include "hopfad/sparse.hpp"

#include <random>

using namespace hopfad;

namespace {

Matrix rational_matrix(const FieldContext& f, const std::vector<std::vector<long>>& rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Scalar(f, Rational(rows[r][c]));
  return m;
}

Matrix random_matrix(const FieldContext& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     int sparsity) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, sparsity);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng) == 0) {
        std::vector<Rational> co;
        for (std::size_t k = 0; k < f->degree(); ++k) co.emplace_back(val(rng));
        m(r, c) = Scalar(f, co);
      }
  return m;
}

}  // namespace

TEST_CASE("rref examples") {
  const auto q = make_field(1);
  const auto id = Matrix::identity(q, 3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  const Matrix z(q, 2, 3);
  r = rref(z);
  CHECK(r.reduced == z);
  CHECK(r.pivots.empty());

  r = rref(rational_matrix(q, {{1, 2}, {2, 4}}));
  CHECK(r.reduced == rational_matrix(q, {{1, 2}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernels") {
  const auto q = make_field(1);
  CHECK(kernel_basis(Matrix::identity(q, 4)).dim() == 0);
  CHECK(kernel_basis(Matrix(q, 2, 3)).dim() == 3);
  const auto k = kernel_basis(rational_matrix(q, {{1, 1, 0}}));
  CHECK(k.dim() == 2);
  for (const auto& v : k.vectors()) CHECK(is_zero(rational_matrix(q, {{1, 1, 0}}).apply(v)));
}

TEST_CASE("rank-nullity, idempotence, sparse agreement") {
  std::mt19937_64 rng(7);
  for (int n : {1, 3, 4}) {
    const auto f = make_field(n);
    for (int t = 0; t < 8; ++t) {
      const Matrix m = random_matrix(f, 5 + t % 3, 7, rng, 2);
      const auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.dim() == m.cols());
      for (const auto& v : ker.vectors()) CHECK(is_zero(m.apply(v)));
      const auto r1 = rref(m);
      CHECK(rref(r1.reduced).reduced == r1.reduced);

      SparseEliminator e(f, m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r) e.add_row(m.row(r));
      CHECK(e.kernel() == ker);
      CHECK(e.rank() == rank(m));
    }
  }
}

TEST_CASE("coordinates in a subspace basis") {
  const auto q = make_field(1);
  const auto b = SubspaceBasis::span(q, 3, {rational_matrix(q, {{1, 0, 2}}).row(0),
                                            rational_matrix(q, {{0, 1, 1}}).row(0)});
  auto c = coords_in_basis(b[0], b);
  REQUIRE(c);
  CHECK((*c)[0].is_one());
  CHECK((*c)[1].is_zero());
  c = coords_in_basis(zero_vector(q, 3), b);
  REQUIRE(c);
  CHECK(is_zero(*c));
  // Nonzero only off the pivots, so it cannot lie in the span.
  CHECK_FALSE(coords_in_basis(unit_vector(q, 3, 2), b));
}

TEST_CASE("kron conventions") {
  const auto f = make_field(4);
  CHECK(kron(Matrix::identity(f, 2), Matrix::identity(f, 3)) == Matrix::identity(f, 6));
  CHECK(kron(Matrix::identity(f, 2), Matrix(f, 2, 2)).is_zero());
  const Scalar q = zeta_power(f, 1), one = Scalar::one(f);
  Matrix a(f, 2, 2), b(f, 2, 2);
  a(0, 0) = q;
  a(1, 1) = one;
  b(0, 0) = one;
  b(1, 1) = q;
  const Matrix k = kron(a, b);
  // (i (x) j) at i*2 + j: diag(q*1, q*q, 1*1, 1*q)
  CHECK(k(0, 0) == q);
  CHECK(k(1, 1) == q * q);
  CHECK(k(2, 2) == one);
  CHECK(k(3, 3) == q);
  CHECK(LinearMap::from_matrix(k) == kron(LinearMap::from_matrix(a), LinearMap::from_matrix(b)));
}

TEST_CASE("inverse and solve") {
  const auto f = make_field(3);
  std::mt19937_64 rng(11);
  const Matrix m = random_matrix(f, 4, 4, rng, 0);
  if (rank(m) == 4) CHECK(m * inverse(m) == Matrix::identity(f, 4));
  CHECK_THROWS(inverse(Matrix(f, 2, 2)));
  const auto q = make_field(1);
  CHECK_FALSE(solve(rational_matrix(q, {{1, 1}, {1, 1}}), {Scalar::one(q), Scalar::zero(q)}));
}

TEST_CASE("linear maps") {
  const auto f = make_field(3);
  std::mt19937_64 rng(5);
  const Matrix a = random_matrix(f, 3, 4, rng, 1), b = random_matrix(f, 4, 2, rng, 1);
  CHECK((LinearMap::from_matrix(a) * LinearMap::from_matrix(b)).to_matrix() == a * b);
  const LinearMap flip = LinearMap::flip(f, 2, 3);
  CHECK(flip.column(1 * 3 + 2) == sparse_unit(f, 2 * 2 + 1));
  CHECK(LinearMap::flip(f, 3, 2) * flip == LinearMap::identity(f, 6));
}

TEST_CASE("json round trips") {
  const auto f = make_field(2);
  CHECK(field_to_json(*f).dump() == R"({"conductor":2,"cyclotomic_poly":["1","1"]})");
  CHECK(field_from_json(field_to_json(*make_field(5))) == make_field(5));
  const auto f5 = make_field(5);
  const Scalar s = Scalar(f5, {Rational(1, 2), Rational(-3), Rational(0), Rational(7, 9)});
  CHECK(scalar_from_json(f5, scalar_to_json(s)) == s);
  std::mt19937_64 rng(3);
  const Matrix m = random_matrix(f5, 3, 2, rng, 1);
  CHECK(matrix_from_json(f5, matrix_to_json(m)) == m);
}

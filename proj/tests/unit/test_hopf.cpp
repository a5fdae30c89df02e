#include <doctest.h>

#include "hopfad/constructions.hpp"

using namespace hopfad;

namespace {

bool all_pass(const VerificationReport& r) {
  for (const auto& e : r.entries())
    if (e.status == Status::Fail) {
      MESSAGE("failed: " << e.claim_id << " " << (e.witness ? e.witness->dump() : ""));
      return false;
    }
  return !r.empty();
}

}  // namespace

TEST_CASE("group algebras are Hopf algebras") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = group_algebra_cn(n);
    CHECK(all_pass(check_hopf(*g)));
    // S(g^i) = g^{n-i}
    for (int i = 0; i < n; ++i)
      CHECK(g->antipode.column(i) == sparse_unit(g->field(), (n - i) % n));
  }
}

TEST_CASE("a perturbed product fails associativity with a witness") {
  const auto g = group_algebra_cn(2);
  FinDimAlgebra a = g->algebra;
  a.mult.set_column(0 * 2 + 1, sparse_scaled(Scalar(g->field(), Rational(2)), a.mult.column(1)));
  const auto r = check_algebra(a);
  const ClaimResult* c = r.find("associativity");
  REQUIRE(c);
  CHECK(c->status == Status::Fail);
  REQUIRE(c->witness);
  CHECK(c->witness->at("indices").size() == 3);
}

TEST_CASE("Taft antipode at n = 2") {
  const auto s = make_taft_setting(2);
  const auto& t = *s.taft;
  CHECK(all_pass(check_hopf(t)));
  // S(x) = -g^{-1}x, and S^2(x) = q^{-1}x = -x at q = -1
  const auto& f = s.field;
  const SparseVec x = sparse_unit(f, 2), g = sparse_unit(f, 1);
  const SparseVec sx = t.antipode.apply(x);
  CHECK(sx == sparse_scaled(-Scalar::one(f), t.algebra.product(g, x)));
  CHECK(t.antipode.apply(sx) == sparse_scaled(zeta_power(f, -1), x));
}

TEST_CASE("primitive element in Q[t]/(t^2): convolution system solves") {
  const auto f = make_field(1);
  FinDimAlgebra a(f, 2);
  a.mult.set_column(0, sparse_unit(f, 0));
  a.mult.set_column(1, sparse_unit(f, 1));
  a.mult.set_column(2, sparse_unit(f, 1));
  a.unit = sparse_unit(f, 0);
  FinDimCoalgebra c(f, 2);
  c.comult.set_column(0, sparse_unit(f, 0));
  c.comult.set_column(1, {{1, Scalar::one(f)}, {2, Scalar::one(f)}});
  c.counit.set_column(0, sparse_unit(f, 0));
  // Delta(t)^2 = 2 t (x) t, so in characteristic 0 this is not a bialgebra;
  // the convolution system still has the solution S(t) = -t.
  CHECK_FALSE(check_bialgebra(a, c).passed("comult-multiplicative"));
  const LinearMap s = solve_antipode(a, c);
  CHECK(s.column(1) == sparse_scaled(-Scalar::one(f), sparse_unit(f, 1)));
}

TEST_CASE("no antipode for a bialgebra with a non-invertible grouplike") {
  // k[t]/(t^2 - t) with t grouplike: t is idempotent, so no convolution inverse.
  const auto f = make_field(1);
  FinDimAlgebra a(f, 2);
  a.mult.set_column(0, sparse_unit(f, 0));
  a.mult.set_column(1, sparse_unit(f, 1));
  a.mult.set_column(2, sparse_unit(f, 1));
  a.mult.set_column(3, sparse_unit(f, 1));
  a.unit = sparse_unit(f, 0);
  FinDimCoalgebra c(f, 2);
  c.comult.set_column(0, sparse_unit(f, 0));
  c.comult.set_column(1, sparse_unit(f, 3));
  c.counit.set_column(0, sparse_unit(f, 0));
  c.counit.set_column(1, sparse_unit(f, 0));
  CHECK(all_pass(check_bialgebra(a, c)));
  CHECK_THROWS_AS(solve_antipode(a, c), NoAntipode);
}

TEST_CASE("tensor algebra") {
  const auto g = group_algebra_cn(2);
  const auto t = tensor_algebra(g->algebra, g->algebra);
  CHECK(t.dim == 4);
  CHECK(all_pass(check_algebra(t)));
  CHECK(t.unit == sparse_unit(g->field(), 0));
  // (g (x) 1)(1 (x) g) = g (x) g
  CHECK(t.product(sparse_unit(g->field(), 2), sparse_unit(g->field(), 1)) == sparse_unit(g->field(), 3));
  CHECK(tensor_product(g->algebra, g->algebra, sparse_unit(g->field(), 2), sparse_unit(g->field(), 1)) ==
        sparse_unit(g->field(), 3));
}

TEST_CASE("dual algebras") {
  const auto g = group_algebra_cn(2);
  const auto d = dual_algebra(g->coalgebra);
  CHECK(all_pass(check_algebra(d)));
  // dual basis of a group algebra consists of orthogonal idempotents
  const auto& f = g->field();
  CHECK(d.product(0, 0) == sparse_unit(f, 0));
  CHECK(d.product(1, 1) == sparse_unit(f, 1));
  CHECK(d.product(0, 1).empty());
  CHECK(d.unit == SparseVec{{0, Scalar::one(f)}, {1, Scalar::one(f)}});

  const auto s = make_taft_setting(2);
  const auto dt = dual_algebra(s.taft->coalgebra);
  CHECK(dt.dim == 4);
  CHECK(all_pass(check_algebra(dt)));

  // a non-coassociative coalgebra gives a non-associative dual
  FinDimCoalgebra bad = s.taft->coalgebra;
  bad.comult.set_column(2, sparse_axpy(bad.comult.column(2), Scalar::one(s.field), sparse_unit(s.field, 2 * 4 + 2)));
  CHECK(check_coalgebra(bad).failures() > 0);
  CHECK(check_algebra(dual_algebra(bad)).failures() > 0);
}

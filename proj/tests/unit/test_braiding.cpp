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

ModuleRep character(const FinDimHopf& g, const Scalar& value) {
  ModuleRep v(g.field(), g.dim(), 1);
  Scalar p = Scalar::one(g.field());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    v.action.set_column(i, {{0, p}});
    p *= value;
  }
  return v;
}

}  // namespace

TEST_CASE("R-matrices of cyclic groups") {
  for (int n = 1; n <= 6; ++n) {
    const auto g = group_algebra_cn(n);
    CHECK(all_pass(check_rmatrix(r_matrix_cn(g))));
    CHECK(all_pass(check_rmatrix(trivial_rmatrix(g))));
    CHECK(all_pass(check_rmatrix(rbar(r_matrix_cn(g)))));
  }
}

TEST_CASE("R at n = 2 expands to 1/2(1x1 + 1xg + gx1 - gxg)") {
  const auto g = group_algebra_cn(2);
  const auto r = r_matrix_cn(g);
  const auto& f = g->field();
  const Scalar h(f, Rational(1, 2));
  CHECK(r.element == SparseVec{{0, h}, {1, h}, {2, h}, {3, -h}});
}

TEST_CASE("a sign-flipped R fails the coproduct axioms") {
  const auto g = group_algebra_cn(3);
  auto r = r_matrix_cn(g);
  SparseVec bad = r.element;
  bad[4].second = -bad[4].second;
  const auto rep = check_rmatrix(make_rmatrix(g, bad));
  CHECK(rep.failures() > 0);
  CHECK(!rep.passed("coproduct-left"));
  // kC_3 is commutative and cocommutative, so conjugation cannot detect the flip.
  CHECK(rep.passed("quasi-cocommutative"));
}

TEST_CASE("braidings") {
  const auto g2 = group_algebra_cn(2);
  const auto reg2 = regular_module(g2->algebra);
  CHECK(braiding(trivial_rmatrix(g2), reg2, reg2) == LinearMap::flip(g2->field(), 2, 2));

  // On the character g -> q, sigma is multiplication by (1/n) sum_{ij} q^{-ij} q^i q^j.
  const auto& f2 = g2->field();
  const Scalar q2 = zeta_power(f2, 1);
  Scalar expect = Scalar::zero(f2);
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j) expect += Scalar(f2, Rational(1, 2)) * zeta_power(f2, -i * j) * pow(q2, i) * pow(q2, j);
  const auto chi = character(*g2, q2);
  CHECK(braiding(r_matrix_cn(g2), chi, chi) == LinearMap::identity(f2, 1).scaled(expect));
  CHECK(expect == Scalar(f2, Rational(-1)));

  const auto g3 = group_algebra_cn(3);
  const auto r3 = r_matrix_cn(g3);
  const auto reg3 = regular_module(g3->algebra);
  CHECK(braiding_inverse(r3, reg3, reg3) * braiding(r3, reg3, reg3) == LinearMap::identity(g3->field(), 9));
  CHECK(braiding(r3, reg3, reg3) * braiding_inverse(r3, reg3, reg3) == LinearMap::identity(g3->field(), 9));
  const auto triv = trivial_module(g3->coalgebra);
  CHECK(all_pass(check_hexagons(r3, reg3, triv, reg3)));
  CHECK(all_pass(check_hexagons(r3, reg3, reg3, reg3)));
}

TEST_CASE("modules and comodules over Taft") {
  const auto s = make_taft_setting(2);
  const auto& t = *s.taft;
  CHECK(all_pass(check_module(t.algebra, regular_module(t.algebra))));
  CHECK(all_pass(check_comodule(t.coalgebra, regular_comodule(t.coalgebra))));
  const auto k = comodule_algebra_K(t, 2, 2, Rational(1));
  CHECK(all_pass(check_comodule_algebra(t, k.algebra, k.coaction)));

  // drop the g (x) w term of lambda(w)
  LinearMap bad = k.coaction;
  SparseVec col;
  for (const auto& [i, v] : k.coaction.column(1))
    if (i / k.dim() != 1) col.emplace_back(i, v);
  bad.set_column(1, col);
  const auto rep = check_comodule_algebra(t, k.algebra, bad);
  CHECK(!rep.passed("coaction-multiplicative"));
}

TEST_CASE("Yetter-Drinfeld braiding") {
  const auto s = make_taft_setting(2);
  const auto& t = *s.taft;
  const auto& f = s.field;
  YDModule triv{regular_module(t.algebra), trivial_comodule(t.algebra, t.dim())};
  YDModule triv2{regular_module(t.algebra), trivial_comodule(t.algebra, t.dim())};
  CHECK(yd_braiding(triv, triv2) == LinearMap::flip(f, 4, 4));

  // adjoint action with the regular coaction is a Yetter-Drinfeld module
  ModuleRep ad(f, 4, 4);
  for (std::size_t h = 0; h < 4; ++h)
    for (std::size_t v = 0; v < 4; ++v) {
      SparseVec acc;
      for (const auto& [h12, c] : t.coalgebra.comult.column(h)) {
        const SparseVec term = t.algebra.product(t.algebra.product(sparse_unit(f, h12 / 4), sparse_unit(f, v)),
                                                 t.antipode.column(h12 % 4));
        acc = sparse_axpy(acc, c, term);
      }
      ad.action.set_column(h * 4 + v, acc);
    }
  YDModule adm{ad, regular_comodule(t.coalgebra)};
  CHECK(all_pass(check_yd(t, adm)));
  const LinearMap c = yd_braiding(adm, adm);
  CHECK(kernel_basis(c.to_matrix()).dim() == 0);

  // a transposed action breaks the YD condition
  YDModule broken = adm;
  for (std::size_t h = 0; h < 4; ++h) {
    const Matrix m = ad.of(h).to_matrix().transpose();
    for (std::size_t v = 0; v < 4; ++v) broken.module.action.set_column(h * 4 + v, to_sparse(m.column(v)));
  }
  CHECK(check_yd(t, broken).failures() > 0);
}

TEST_CASE("duals") {
  const auto s = make_taft_setting(2);
  const auto& t = *s.taft;
  const auto triv = trivial_module(t.coalgebra);
  const auto dt = dual_module(t, triv);
  CHECK(dt.module.action == triv.action);
  const auto reg = regular_module(t.algebra);
  const auto d = dual_module(t, reg);
  CHECK(all_pass(check_rigidity(t, reg, d)));
  // double dual acts through S^2
  const auto dd = dual_module(t, d.module);
  for (std::size_t i = 0; i < t.dim(); ++i) CHECK(dd.module.of(i) == reg.of(t.antipode.apply(t.antipode.column(i))));
}

#include "hopfad/adjoint.hpp"

#include <doctest.h>

#include <map>

using namespace hopfad;

namespace {

std::shared_ptr<const TaftSetting> setting(int n) {
  static std::map<int, std::shared_ptr<const TaftSetting>> cache;
  auto& s = cache[n];
  if (!s) s = std::make_shared<const TaftSetting>(make_taft_setting(n));
  return s;
}

AdjointProblem k_problem(int n, int d, int xi, ConditionSet c) {
  auto s = setting(n);
  return make_problem(s, comodule_algebra_K(*s->taft, n, d, Rational(xi)), c);
}

// Degree m*a + b mod n of h^a w^b under (pi (x) id) lambda, counted by hand.
std::size_t chi0_k_oracle(int n, int d) {
  const int m = n / d;
  std::size_t count = 0;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < n; ++b)
      if ((m * a + b) % n == 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("condition sets parse and print") {
  CHECK(ConditionSet::parse("ad1,ad3") == ConditionSet::shimizu());
  CHECK(ConditionSet::parse("ad1,ad2,ad3").str() == "ad1,ad2,ad3");
  CHECK(ConditionSet::parse("").str().empty());
  CHECK_THROWS_AS(ConditionSet::parse("ad4"), std::invalid_argument);
}

TEST_CASE("empty condition set leaves the full Hom space") {
  const AdjointProblem p = k_problem(2, 2, 0, ConditionSet{});
  const ConditionSystem sys = condition_system(p);
  CHECK(sys.rows.empty());
  CHECK(sys.cols == 4 * 4 * 4);
  CHECK(solve_conditions(p).dim() == 64);
}

TEST_CASE("row counts cover all basis tuples") {
  const AdjointProblem p = k_problem(2, 2, 0, ConditionSet::relative());
  const ConditionSystem sys = condition_system(p);
  std::map<std::string, std::size_t> blocks(sys.blocks.begin(), sys.blocks.end());
  // N = 4, dim K = dim P = 4, dim T = 2
  CHECK(blocks["ad1"] == 4 * 4 * 4 * 4);
  CHECK(blocks["ad3"] == 4 * 4 * 4);
  CHECK(blocks["ad2"] == 4 * 4 * 2 * 4);
  CHECK(sys.to_matrix(p.field()).rows() == sys.rows.size());
}

TEST_CASE("K = k1 with Ad1 and Ad3 gives the dual of H#T") {
  for (int n : {2, 3}) {
    auto s = setting(n);
    const AdjointProblem p = make_problem(s, trivial_comodule_algebra(*s->taft), ConditionSet::shimizu());
    CHECK(solve_conditions(p).dim() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("full, reduced and generator-only pipelines agree") {
  for (auto c : {ConditionSet::shimizu(), ConditionSet::relative()}) {
    AdjointProblem p = k_problem(2, 2, 0, c);
    const SubspaceBasis full = solve_conditions(p);
    p.reduced = true;
    const SubspaceBasis reduced = solve_conditions(p);
    CHECK(full == reduced);
    p.reduced = false;
    p.generators_only = true;
    CHECK(solve_conditions(p) == full);
  }
  AdjointProblem p = k_problem(3, 3, 1, ConditionSet::shimizu());
  const SubspaceBasis full = solve_conditions(p);
  p.generators_only = true;
  p.reduced = true;
  CHECK(solve_conditions(p) == full);
  AdjointProblem bad = k_problem(2, 2, 0, ConditionSet{true, false, false});
  bad.reduced = true;
  CHECK_THROWS_AS(condition_system(bad), std::invalid_argument);
}

TEST_CASE("condition residual catches non-solutions") {
  const AdjointProblem p = k_problem(2, 2, 0, ConditionSet::relative());
  const SubspaceBasis b = solve_conditions(p);
  for (const auto& v : b.vectors()) CHECK_FALSE(condition_residual(p, unflatten(p, v)).has_value());
  Vector v = b[0];
  v[1] += Scalar::one(p.field());
  const auto w = condition_residual(p, unflatten(p, v));
  REQUIRE(w.has_value());
  CHECK(w->contains("condition"));
  CHECK(flatten(p, unflatten(p, b[1])) == b[1]);
}

TEST_CASE("dimension table") {
  struct Case {
    int n, d, xi;
  };
  for (auto c : {Case{2, 1, 0}, Case{2, 2, 0}, Case{2, 2, 1}, Case{3, 1, 0}, Case{3, 3, 0}}) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    const std::size_t nn = static_cast<std::size_t>(c.n);
    CHECK(solve_adjoint(k_problem(c.n, c.d, c.xi, ConditionSet::shimizu())).dim() == nn * nn);
    CHECK(solve_adjoint(k_problem(c.n, c.d, c.xi, ConditionSet::relative())).dim() == nn);
  }
}

TEST_CASE("regular and trivial comodule algebras") {
  for (int n : {2, 3}) {
    auto s = setting(n);
    const AdjointAlgebra a = solve_adjoint(make_problem(s, regular_comodule_algebra(*s->taft), ConditionSet::relative()));
    CHECK(a.dim() == static_cast<std::size_t>(n));
    CHECK(verify_solution(a).all_passed());
    CHECK(connectedness(a) == 1);
  }
  auto s = setting(2);
  AdjointProblem p = make_problem(s, trivial_comodule_algebra(*s->taft), ConditionSet::relative());
  p.rmatrix = trivial_rmatrix(s->group);
  CHECK(solve_adjoint(p).dim() == 4);
}

TEST_CASE("literal Ad2 loses the unit") {
  auto s = setting(2);
  AdjointProblem p = make_problem(s, regular_comodule_algebra(*s->taft), ConditionSet::relative());
  p.ad2_literal = true;
  CHECK(solve_conditions(p).dim() == 0);
  CHECK_THROWS_AS(solve_adjoint(p), ClosureFailure);
  try {
    solve_adjoint(p);
  } catch (const ClosureFailure& e) {
    CHECK(e.witness()["structure"] == "unit");
  }
  // k1 has trivial grading, so both readings agree
  AdjointProblem q = make_problem(s, trivial_comodule_algebra(*s->taft), ConditionSet::relative());
  const SubspaceBasis graded = solve_conditions(q);
  q.ad2_literal = true;
  CHECK(solve_conditions(q) == graded);
}

TEST_CASE("Rbar equals R at n = 2") {
  AdjointProblem p = k_problem(2, 2, 0, ConditionSet::relative());
  const SubspaceBasis b = solve_conditions(p);
  p.rbar = true;
  CHECK(solve_conditions(p) == b);
}

TEST_CASE("structural checks on the grid") {
  struct Case {
    int n, d, xi;
  };
  for (auto c : {Case{2, 1, 0}, Case{2, 2, 0}, Case{2, 2, 1}, Case{3, 1, 0}, Case{3, 3, 0}}) {
    for (auto cs : {ConditionSet::shimizu(), ConditionSet::relative()}) {
      CAPTURE(c.n);
      CAPTURE(c.d);
      CAPTURE(cs.str());
      const AdjointAlgebra a = solve_adjoint(k_problem(c.n, c.d, c.xi, cs));
      CHECK(verify_solution(a).all_passed());
      CHECK(verify_yd(a).all_passed());
      CHECK(verify_center_algebra(a).all_passed());
      CHECK(verify_braided_commutative(a).all_passed());
      CHECK(connectedness(a) == 1);
      if (cs.ad2) {
        const auto& t = setting(c.n)->group;
        CHECK(verify_relative_center(a, regular_module(t->algebra)).all_passed());
        CHECK(verify_relative_center(a, trivial_module(t->coalgebra)).all_passed());
        CHECK(verify_solution(a).passed("coaction-ad2-roundtrip"));
      }
    }
  }
}

TEST_CASE("relative variants sit inside the Shimizu variant") {
  const SubspaceBasis rel = solve_conditions(k_problem(3, 3, 0, ConditionSet::relative()));
  const SubspaceBasis shim = solve_conditions(k_problem(3, 3, 0, ConditionSet::shimizu()));
  CHECK(monotonicity(rel, shim).all_passed());
  CHECK_FALSE(monotonicity(shim, rel).all_passed());
}

TEST_CASE("unit is H#T-invariant") {
  const AdjointAlgebra a = solve_adjoint(k_problem(2, 2, 0, ConditionSet::shimizu()));
  const auto& hopf = a.problem.hopf();
  for (std::size_t h = 0; h < hopf.dim(); ++h)
    CHECK(a.action.of(h).apply(a.algebra.unit) == sparse_scaled(hopf.coalgebra.counit_of(h), a.algebra.unit));
}

TEST_CASE("transposed action breaks the YD condition") {
  const AdjointAlgebra a = solve_adjoint(k_problem(2, 2, 0, ConditionSet::shimizu()));
  YDModule y = a.yd();
  const std::size_t dim = a.dim();
  for (std::size_t h = 0; h < a.problem.hopf_dim(); ++h) {
    const Matrix m = a.action.of(h).to_matrix().transpose();
    for (std::size_t j = 0; j < dim; ++j) y.module.action.set_column(h * dim + j, to_sparse(m.column(j)));
  }
  const VerificationReport rep = check_yd(a.problem.hopf(), y);
  CHECK_FALSE(rep.all_passed());
  for (const auto& e : rep.entries())
    if (e.status == Status::Fail) CHECK(e.witness.has_value());
}

TEST_CASE("commutativity without the braiding") {
  const AdjointAlgebra shim = solve_adjoint(k_problem(2, 2, 0, ConditionSet::shimizu()));
  CHECK_FALSE(verify_flip_commutative(shim).all_passed());
  // The relative algebras at n <= 3 happen to be commutative.
  const AdjointAlgebra rel = solve_adjoint(k_problem(2, 2, 0, ConditionSet::relative()));
  CHECK(verify_flip_commutative(rel).all_passed());
}

TEST_CASE("relative center refuses the Shimizu variant") {
  const AdjointAlgebra a = solve_adjoint(k_problem(2, 2, 0, ConditionSet::shimizu()));
  CHECK_THROWS_AS(verify_relative_center(a, regular_module(setting(2)->group->algebra)), std::invalid_argument);
}

TEST_CASE("connectedness of a direct sum") {
  const AdjointAlgebra a = solve_adjoint(k_problem(2, 2, 0, ConditionSet::shimizu()));
  const YDModule sum = yd_direct_sum(a.yd(), a.yd());
  CHECK(check_yd(a.problem.hopf(), sum).all_passed());
  CHECK(connectedness(a.problem.hopf(), sum) == 2);
  const AdjointAlgebra b = solve_adjoint(k_problem(3, 3, 0, ConditionSet::relative()));
  CHECK(connectedness(b) == 1);
}

TEST_CASE("structure transport through phi") {
  for (auto [n, d] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 3}}) {
    CAPTURE(n);
    CAPTURE(d);
    const AdjointAlgebra a = solve_adjoint(k_problem(n, d, 0, ConditionSet::shimizu()));
    const VerificationReport rep = phi_structure_transport(a);
    CHECK(rep.all_passed());
    CHECK(rep.find("x-action")->note.find("shifted reading t_{i+1}: holds") != std::string::npos);
  }
  // With m = 2 the unshifted reading is refuted.
  const AdjointAlgebra a = solve_adjoint(k_problem(2, 1, 0, ConditionSet::shimizu()));
  CHECK(phi_structure_transport(a).find("x-action")->note.find("unshifted reading t_i: fails") != std::string::npos);
  auto s = setting(2);
  const AdjointAlgebra reg = solve_adjoint(make_problem(s, regular_comodule_algebra(*s->taft), ConditionSet::shimizu()));
  CHECK_THROWS_AS(phi_structure_transport(reg), std::invalid_argument);
}

TEST_CASE("chi0 cross-check") {
  for (auto [n, d] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{3, 3}, std::pair{1, 1}}) {
    CAPTURE(n);
    CAPTURE(d);
    Chi0Dims dims;
    const VerificationReport rep = chi0_crosscheck(n, d, Rational(0), &dims);
    CHECK(dims.chi0_k == chi0_k_oracle(n, d));
    CHECK(dims.chi0_t == static_cast<std::size_t>(n / d) * chi0_k_oracle(n, d));
    CHECK(dims.relative == static_cast<std::size_t>(n));
    CHECK(rep.all_passed());
  }
  Chi0Dims one;
  chi0_crosscheck(1, 1, Rational(0), &one);
  CHECK(one.relative == 1);
  CHECK(one.chi0_k == 1);
  CHECK(one.chi0_t == 1);
}

TEST_CASE("dinaturality") {
  const AdjointProblem p = k_problem(2, 2, 0, ConditionSet::relative());
  const auto& t = setting(2)->group;
  const ModuleRep m = regular_module(p.comod_alg.algebra);
  CHECK(dinaturality_sample(p, m, regular_module(t->algebra)).all_passed());
  CHECK(dinaturality_sample(p, m, trivial_module(t->coalgebra)).all_passed());

  const SubspaceBasis shim = solve_conditions(k_problem(2, 2, 0, ConditionSet::shimizu()));
  const SubspaceBasis rel = solve_conditions(p);
  std::optional<Vector> outside;
  for (const auto& v : shim.vectors())
    if (!rel.contains(v)) outside = v;
  REQUIRE(outside.has_value());
  const auto w = dinaturality_residual(p, unflatten(p, *outside), m, regular_module(t->algebra));
  REQUIRE(w.has_value());
  CHECK(w->contains("indices"));
}

TEST_CASE("dinaturality twist at n = 3") {
  const AdjointProblem p = k_problem(3, 3, 0, ConditionSet::relative());
  const auto& t = setting(3)->group;
  const ModuleRep m = regular_module(p.comod_alg.algebra);
  const ModuleRep v = regular_module(t->algebra);
  CHECK(dinaturality_sample(p, m, v).all_passed());
  CHECK(dinaturality_sample(p, m, trivial_module(t->coalgebra)).all_passed());
  // R^{-1} differs from R_21 once R_21 R != 1
  CHECK_FALSE(dinaturality_sample(p, m, v, true).all_passed());
  CHECK(dinaturality_sample(k_problem(2, 2, 0, ConditionSet::relative()),
                            regular_module(k_problem(2, 2, 0, ConditionSet::relative()).comod_alg.algebra),
                            regular_module(setting(2)->group->algebra), true)
            .all_passed());
}

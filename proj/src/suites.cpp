#include "hopfad/suites.hpp"

#include <map>
#include <mutex>
#include <random>

namespace hopfad {

namespace {

std::string tag(int n) { return "n=" + std::to_string(n); }

std::string tag(int n, int d, const Rational& xi) {
  return "n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",xi=" + to_string(xi);
}

Scalar random_scalar(const FieldContext& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f->degree(); ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    c.push_back(r);
  }
  return Scalar(f, c);
}

}  // namespace

std::shared_ptr<const TaftSetting> shared_setting(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const TaftSetting>> cache;
  std::lock_guard lock(mu);
  auto& s = cache[n];
  if (!s) s = std::make_shared<const TaftSetting>(make_taft_setting(n));
  return s;
}

VerificationReport field_spot_check(const FieldContext& f, std::uint64_t seed, std::size_t triples) {
  VerificationReport rep;
  std::mt19937_64 rng(seed);
  std::optional<json> assoc, distrib, comm, inv;
  for (std::size_t t = 0; t < triples; ++t) {
    const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    auto witness = [&] {
      return json{{"triple", t}, {"a", scalar_to_json(a)}, {"b", scalar_to_json(b)}, {"c", scalar_to_json(c)}};
    };
    if (!assoc && ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c))) assoc = witness();
    if (!distrib && a * (b + c) != a * b + a * c) distrib = witness();
    if (!comm && (a * b != b * a || a + b != b + a)) comm = witness();
    if (!inv && !a.is_zero() && !(a * a.inv()).is_one()) inv = witness();
  }
  rep.record("associativity", assoc);
  rep.record("distributivity", distrib);
  rep.record("commutativity", comm);
  rep.record("inverse", inv);
  return rep;
}

VerificationReport adjoint_structure_checks(const AdjointAlgebra& a) {
  VerificationReport rep;
  rep.merge(verify_solution(a), "solution");
  rep.merge(verify_yd(a), "yd");
  rep.merge(verify_center_algebra(a), "center-algebra");
  rep.merge(verify_braided_commutative(a), "braided");
  const std::size_t c = connectedness(a);
  if (c == 1)
    rep.pass("connected");
  else
    rep.fail("connected", json{{"dim_hom_1_A", c}});
  if (a.problem.conditions.ad2)
    rep.merge(verify_relative_center(a, regular_module(a.problem.base().algebra)), "relative-center");
  return rep;
}

std::vector<std::pair<int, Rational>> k_grid(int n) {
  std::vector<std::pair<int, Rational>> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    out.emplace_back(d, Rational(0));
    if (d > 1) out.emplace_back(d, Rational(1));
  }
  return out;
}

VerificationReport braided_adjoint_checks(const HAdjoint& a, const std::vector<NamedModule>& modules,
                                          const std::string& at) {
  VerificationReport rep;
  const std::string sep = at.empty() ? "" : at + "/";
  rep.merge(verify_h_ad(a, modules), at.empty() ? "lemma-adj-braided" : "lemma-adj-braided/" + at);
  for (const auto& m : modules)
    rep.merge(pi_dinatural_check(a, m.module), "prop-pi-dinatural/" + sep + "X=" + m.name);

  HAdjoint literal = a;
  literal.literal_inverse = true;
  literal.half_braidings.clear();
  const VerificationReport lit = verify_h_ad(literal, modules);
  std::string note = "sigma^{-1}_{X,H} form of gamma: ";
  if (lit.all_passed()) {
    note += "passes as well";
  } else {
    note += "fails";
    for (const auto& e : lit.entries())
      if (e.status == Status::Fail) note += " " + e.claim_id;
  }
  rep.pass("lemma-adj-braided/" + sep + "gamma-convention", note);
  return rep;
}

VerificationReport suite_hopf(const std::vector<int>& ns, std::uint64_t seed) {
  VerificationReport rep;
  for (int n : ns) {
    ReportTimer timer(rep);
    const auto s = shared_setting(n);
    rep.merge(field_spot_check(s->field, seed), "scalar-field/" + tag(n));
    rep.merge(check_braided_hopf(s->line, s->r), "braided-line/" + tag(n));
    rep.merge(check_hopf(*s->taft), "bosonization/" + tag(n));
    rep.merge(taft_presentation_check(*s->taft, n), "taft-presentation/" + tag(n));
  }
  return rep;
}

VerificationReport suite_rmatrix(const std::vector<int>& ns) {
  VerificationReport rep;
  for (int n : ns) {
    ReportTimer timer(rep);
    const auto g = group_algebra_cn(n);
    const RMatrix r = r_matrix_cn(g);
    rep.merge(check_rmatrix(r), "rmatrix-cn/" + tag(n));
    const ModuleRep reg = regular_module(g->algebra);
    rep.merge(check_hexagons(r, reg, reg, reg), "braiding/" + tag(n));
  }
  return rep;
}

VerificationReport suite_adjoint(const std::vector<int>& ns) {
  VerificationReport rep;
  for (int n : ns) {
    const auto s = shared_setting(n);
    const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    for (const auto& [d, xi] : k_grid(n)) {
      ReportTimer timer(rep);
      const std::string t = tag(n, d, xi);
      const ComoduleAlgebra k = comodule_algebra_K(*s->taft, n, d, xi);
      const AdjointAlgebra shim = solve_adjoint(make_problem(s, k, ConditionSet::shimizu()));
      if (shim.dim() == nn)
        rep.pass("prop-simizus-adj-taft/" + t + "/dim");
      else
        rep.fail("prop-simizus-adj-taft/" + t + "/dim", json{{"dim", shim.dim()}, {"expected", nn}});
      rep.merge(phi_structure_transport(shim), "prop-simizus-adj-taft/" + t + "/transport");
      rep.merge(adjoint_structure_checks(shim), "cor-stt-iso/" + t + "/ad1,ad3");

      const AdjointProblem rp = make_problem(s, k, ConditionSet::relative());
      const AdjointAlgebra rel = solve_adjoint(rp);
      rep.pass("cor-stt-iso/" + t + "/ad1,ad2,ad3/dim", "dim = " + std::to_string(rel.dim()));
      rep.merge(adjoint_structure_checks(rel), "cor-stt-iso/" + t + "/ad1,ad2,ad3");
      rep.merge(monotonicity(rel.basis, shim.basis), "monotonicity/" + t);
      if (xi == 0) {
        rep.merge(chi0_crosscheck(n, d, xi), "prop-chi0/" + t);
        const ModuleRep m = regular_module(k.algebra);
        const ModuleRep vreg = regular_module(s->group->algebra);
        rep.merge(dinaturality_sample(rp, m, vreg), "thm-relative-coend-hopf/" + t + "/V=regular");
        const bool lit = dinaturality_sample(rp, m, vreg, true).all_passed();
        rep.pass("thm-relative-coend-hopf/" + t + "/twist-convention",
                 std::string("R^{-1} form of the prebalancing: ") + (lit ? "passes as well" : "fails at V=regular"));
        rep.merge(dinaturality_sample(rp, m, trivial_module(s->group->coalgebra)),
                  "thm-relative-coend-hopf/" + t + "/V=trivial");
      }
    }
  }
  return rep;
}

VerificationReport suite_braided(const std::vector<int>& ns) {
  VerificationReport rep;
  for (int n : ns) {
    ReportTimer timer(rep);
    const auto s = shared_setting(n);
    const HAdjoint a = build_h_ad(*s);
    const std::vector<NamedModule> modules{named_module(a, "trivial"), named_module(a, "regular")};
    rep.merge(braided_adjoint_checks(a, modules, tag(n)));
    const AdjointAlgebra reg =
        solve_adjoint(make_problem(s, regular_comodule_algebra(*s->taft), ConditionSet::relative()));
    rep.merge(adjoint_structure_checks(reg), "example-1/" + tag(n) + "/structure");
    rep.merge(example1_iso(reg, a), "example-1/" + tag(n));
  }
  return rep;
}

}  // namespace hopfad

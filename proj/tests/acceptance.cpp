// One line per criterion; exit status is the number of failed criteria.
#include "hopfad/suites.hpp"

#include <chrono>
#include <deque>
#include <iomanip>
#include <functional>
#include <iostream>
#include <tuple>

using namespace hopfad;

namespace {

using Clock = std::chrono::steady_clock;

struct Point {
  int n, d;
  Rational xi;
};

std::string tag(const Point& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," + to_string(p.xi) + ")";
}

const std::vector<Point> kShimizuGrid{{2, 1, Rational(0)}, {2, 2, Rational(0)}, {2, 2, Rational(1)},
                                      {3, 1, Rational(0)}, {3, 3, Rational(0)}, {4, 2, Rational(1)}};

int failed = 0;
std::vector<std::string> notes;

void criterion(int id, const std::string& title, const std::function<VerificationReport()>& body) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  try {
    rep = body();
  } catch (const std::exception& e) {
    rep.fail("exception", json{{"what", e.what()}});
  }
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  std::string first;
  for (const auto& e : rep.entries())
    if (e.status == Status::Fail) {
      first = e.claim_id;
      if (e.witness) first += " " + e.witness->dump();
      break;
    }
  const bool ok = rep.all_passed() && !rep.empty();
  if (!ok) ++failed;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << title << "  (" << rep.entries().size()
            << " claims, " << std::fixed << std::setprecision(1) << s << " s)";
  if (!ok) std::cout << "  first failure: " << (first.empty() ? "no claims" : first.substr(0, 400));
  std::cout << "\n" << std::flush;
}

void under(VerificationReport& rep, const std::string& id, double seconds, double limit) {
  if (seconds < limit) rep.pass(id, std::to_string(seconds) + " s");
  else rep.fail(id, json{{"seconds", seconds}, {"limit", limit}});
}

// Every algebra solved below, for criterion 6.
std::deque<std::pair<std::string, AdjointAlgebra>> computed;  // stable addresses

const AdjointAlgebra& remember(std::string label, AdjointAlgebra a) {
  computed.emplace_back(std::move(label), std::move(a));
  return computed.back().second;
}

AdjointProblem k_problem(const Point& p, ConditionSet c) {
  const auto s = shared_setting(p.n);
  return make_problem(s, comodule_algebra_K(*s->taft, p.n, p.d, p.xi), c);
}

}  // namespace

int main() {
  criterion(1, "Taft bosonization: Hopf axioms and presentation, n = 2,3,4, < 5 s per n", [] {
    VerificationReport rep;
    for (int n : {2, 3, 4}) {
      const auto t0 = Clock::now();
      const auto s = shared_setting(n);
      const std::string at = "n=" + std::to_string(n);
      rep.merge(check_bialgebra(s->taft->algebra, s->taft->coalgebra), at + "/bialgebra");
      rep.merge(check_antipode(*s->taft), at + "/antipode");
      rep.merge(taft_presentation_check(*s->taft, n), at + "/presentation");
      under(rep, at + "/runtime", std::chrono::duration<double>(Clock::now() - t0).count(), 5.0);
    }
    return rep;
  });

  criterion(2, "R-matrix of kC_n, n = 1..6, including (S (x) id)R = R^{-1}, < 5 s", [] {
    VerificationReport rep;
    const auto t0 = Clock::now();
    for (int n = 1; n <= 6; ++n) {
      const VerificationReport r = check_rmatrix(r_matrix_cn(group_algebra_cn(n)));
      if (!r.passed("antipode-left-inverse")) rep.fail("n=" + std::to_string(n) + "/S(x)id", json::object());
      rep.merge(r, "n=" + std::to_string(n));
    }
    under(rep, "runtime", std::chrono::duration<double>(Clock::now() - t0).count(), 5.0);
    return rep;
  });

  std::vector<const AdjointAlgebra*> shimizu;
  criterion(3, "Shimizu variant {Ad1,Ad3}: dim = n^2 on the six grid points", [&] {
    VerificationReport rep;
    for (const auto& p : kShimizuGrid) {
      const auto& a = remember("shimizu " + tag(p), solve_adjoint(k_problem(p, ConditionSet::shimizu())));
      shimizu.push_back(&a);
      const std::size_t want = static_cast<std::size_t>(p.n * p.n);
      if (a.dim() == want) rep.pass(tag(p));
      else rep.fail(tag(p), json{{"dim", a.dim()}, {"expected", want}});
    }
    return rep;
  });

  criterion(4, "structure transport onto T(d,xi) on the six grid points", [&] {
    VerificationReport rep;
    for (std::size_t i = 0; i < shimizu.size(); ++i) {
      const VerificationReport r = phi_structure_transport(*shimizu[i]);
      rep.merge(r, tag(kShimizuGrid[i]));
      if (i == 0)
        for (const auto& e : r.entries())
          if (!e.note.empty()) notes.push_back("x-action index convention " + e.claim_id + ": " + e.note);
    }
    return rep;
  });

  criterion(5, "relative adjoint of K = H#T: dim = n for n = 2,3, and Example 1 isomorphism", [] {
    VerificationReport rep;
    for (int n : {2, 3}) {
      const auto s = shared_setting(n);
      const auto& a = remember("regular K n=" + std::to_string(n),
                               solve_adjoint(make_problem(s, regular_comodule_algebra(*s->taft),
                                                          ConditionSet::relative())));
      const std::string at = "n=" + std::to_string(n);
      if (a.dim() == static_cast<std::size_t>(n)) rep.pass(at + "/dim");
      else rep.fail(at + "/dim", json{{"dim", a.dim()}});
      rep.merge(example1_iso(a, build_h_ad(*s)), at + "/example1");
    }
    return rep;
  });

  // Relative variants on the same grid and on every (d, xi) for n = 2, 3.
  std::vector<std::tuple<Point, const AdjointAlgebra*, const AdjointAlgebra*>> pairs;
  {
    std::vector<Point> grid = kShimizuGrid;
    for (int n : {2, 3})
      for (const auto& [d, xi] : k_grid(n)) {
        bool seen = false;
        for (const auto& p : grid) seen = seen || (p.n == n && p.d == d && p.xi == xi);
        if (!seen) grid.push_back({n, d, xi});
      }
    for (const auto& p : grid) {
      const AdjointAlgebra* shim = nullptr;
      for (std::size_t i = 0; i < kShimizuGrid.size(); ++i)
        if (kShimizuGrid[i].n == p.n && kShimizuGrid[i].d == p.d && kShimizuGrid[i].xi == p.xi) shim = shimizu.at(i);
      if (!shim) shim = &remember("shimizu " + tag(p), solve_adjoint(k_problem(p, ConditionSet::shimizu())));
      const auto& rel = remember("relative " + tag(p), solve_adjoint(k_problem(p, ConditionSet::relative())));
      pairs.emplace_back(p, &rel, shim);
    }
  }

  criterion(6, "every computed algebra: YD, center algebra, braided commutative, connected, relative center", [] {
    VerificationReport rep;
    std::size_t flip_fail = 0;
    for (const auto& [label, a] : computed) {
      rep.merge(adjoint_structure_checks(a), label);
      if (!verify_flip_commutative(a).all_passed()) ++flip_fail;
    }
    notes.push_back("negative control m o flip = m fails on " + std::to_string(flip_fail) + " of " +
                    std::to_string(computed.size()) + " algebras (braided commutativity holds on all)");
    return rep;
  });

  criterion(7, "chi0 cross-check at (2,1,0), (2,2,0), (3,3,0)", [] {
    VerificationReport rep;
    for (const auto& p : std::vector<Point>{{2, 1, Rational(0)}, {2, 2, Rational(0)}, {3, 3, Rational(0)}}) {
      const VerificationReport r = chi0_crosscheck(p.n, p.d, p.xi);
      for (const auto& e : r.entries()) notes.push_back("chi0 " + tag(p) + ": " + e.note);
      rep.merge(r, tag(p));
    }
    return rep;
  });

  criterion(8, "H_ad half-braidings and pi_X dinaturality, n = 2,3, X in {trivial, regular}", [] {
    VerificationReport rep;
    for (int n : {2, 3}) {
      const HAdjoint a = build_h_ad(*shared_setting(n));
      const std::vector<NamedModule> modules{named_module(a, "trivial"), named_module(a, "regular")};
      const VerificationReport r = braided_adjoint_checks(a, modules, "n=" + std::to_string(n));
      for (const auto& e : r.entries())
        if (e.claim_id.find("gamma-convention") != std::string::npos) notes.push_back(e.claim_id + ": " + e.note);
      rep.merge(r);
    }
    return rep;
  });

  criterion(9, "full vs reduced pipeline at (2,2,0); relative within Shimizu on every grid point", [&] {
    VerificationReport rep;
    AdjointProblem p = k_problem({2, 2, Rational(0)}, ConditionSet::relative());
    const SubspaceBasis full = solve_conditions(p);
    p.reduced = true;
    const SubspaceBasis reduced = solve_conditions(p);
    if (full == reduced) rep.pass("full=reduced", "dim " + std::to_string(full.dim()));
    else rep.fail("full=reduced", json{{"full", full.dim()}, {"reduced", reduced.dim()}});
    for (const auto& [pt, rel, shim] : pairs) rep.merge(monotonicity(rel->basis, shim->basis), tag(pt));
    return rep;
  });

  criterion(10, "dinaturality for K(2,0) regular with V = regular kC_2 and V = trivial", [] {
    VerificationReport rep;
    const AdjointProblem p = k_problem({2, 2, Rational(0)}, ConditionSet::relative());
    const auto& t = p.setting->group;
    const ModuleRep m = regular_module(p.comod_alg.algebra);
    rep.merge(dinaturality_sample(p, m, regular_module(t->algebra)), "V=regular");
    rep.merge(dinaturality_sample(p, m, trivial_module(t->coalgebra)), "V=trivial");
    const AdjointProblem p3 = k_problem({3, 3, Rational(0)}, ConditionSet::relative());
    const bool lit3 = dinaturality_sample(p3, regular_module(p3.comod_alg.algebra),
                                          regular_module(p3.setting->group->algebra), true)
                          .all_passed();
    notes.push_back(std::string("prebalancing with R^{-1} instead of (S^{-1} (x) S)R_21 at (3,3,0), V = regular: ") +
                    (lit3 ? "passes" : "fails"));
    return rep;
  });

  for (const auto& n : notes) std::cout << "NOTE " << n << "\n";
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed;
}

#include "hopfad/serialize.hpp"
#include "hopfad/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hopfad;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;
  bool timing = false;
};

int finish(const json& doc, const VerificationReport& rep, const Output& out) {
  const std::string text = emit_json(doc);
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out.path << "\n";
      return kExitUsage;
    }
    f << text;
  }
  for (const auto& e : rep.entries())
    if (e.status == Status::Fail) std::cerr << "FAIL " << e.claim_id << "\n";
  return rep.all_passed() ? 0 : kExitFail;
}

json with_header(const FieldContext& f, const std::string& convention, json body) {
  json doc = document_header(f, convention);
  for (auto& [k, v] : body.items()) doc[k] = std::move(v);
  return doc;
}

ComoduleAlgebra pick_k(const TaftSetting& s, const std::string& which, int d, const Rational& xi) {
  if (which == "K") return comodule_algebra_K(*s.taft, s.n, d, xi);
  if (which == "regular") return regular_comodule_algebra(*s.taft);
  if (which == "k1") return trivial_comodule_algebra(*s.taft);
  if (which == "coideal") return coideal_cd(*s.taft, s.n, d);
  throw CLI::ValidationError("--k", "expected K, regular, k1 or coideal");
}

int run_taft(int n, const Output& out) {
  const auto s = shared_setting(n);
  VerificationReport rep;
  {
    ReportTimer timer(rep);
    rep.merge(check_hopf(*s->taft), "bosonization");
    rep.merge(taft_presentation_check(*s->taft, n), "taft-presentation");
  }
  json body = {{"n", n}, {"hopf", hopf_to_json(*s->taft)}, {"checks", rep.to_json(out.timing)}};
  return finish(with_header(s->field, kTaftBasis, std::move(body)), rep, out);
}

struct AdjointArgs {
  int n = 2, d = 1;
  std::string xi = "0", conditions = "ad1,ad3", k = "K";
  bool reduced = false, rbar = false, ad2_literal = false;
};

int run_adjoint(const AdjointArgs& args, const Output& out) {
  const auto s = shared_setting(args.n);
  const Rational xi = parse_rational(args.xi);
  const ConditionSet cs = ConditionSet::parse(args.conditions);
  AdjointProblem p = make_problem(s, pick_k(*s, args.k, args.d, xi), cs);
  p.reduced = args.reduced;
  p.rbar = args.rbar;
  p.ad2_literal = args.ad2_literal;

  const std::string convention = std::string(kTaftBasis) + "; " + kKBasis;
  VerificationReport rep;
  json body;
  try {
    ReportTimer timer(rep);
    const AdjointAlgebra a = solve_adjoint(p);
    rep.merge(adjoint_structure_checks(a));
    body = adjoint_to_json(a);
  } catch (const ClosureFailure& e) {
    rep.fail("closure", e.witness(), e.what());
    body = {{"problem", problem_to_json(p)}, {"dim", solve_conditions(p).dim()}};
  }
  body["checks"] = rep.to_json(out.timing);
  return finish(with_header(s->field, convention, std::move(body)), rep, out);
}

int run_braided(int n, const std::vector<std::string>& names, const Output& out) {
  const auto s = shared_setting(n);
  const HAdjoint a = build_h_ad(*s);
  std::vector<NamedModule> modules;
  for (const auto& name : names) modules.push_back(named_module(a, name));
  VerificationReport rep;
  {
    ReportTimer timer(rep);
    rep.merge(braided_adjoint_checks(a, modules));
    const AdjointAlgebra reg =
        solve_adjoint(make_problem(s, regular_comodule_algebra(*s->taft), ConditionSet::relative()));
    rep.merge(example1_iso(reg, a), "example-1");
  }
  json body = {{"n", n}, {"modules", names}, {"h_ad", h_adjoint_to_json(a)},
               {"checks", rep.to_json(out.timing)}};
  return finish(with_header(s->field, kTaftBasis, std::move(body)), rep, out);
}

int run_verify(const std::string& suite, const std::vector<int>& ns, std::uint64_t seed, const Output& out) {
  VerificationReport rep;
  const bool all = suite == "all";
  if (all || suite == "hopf") rep.merge(suite_hopf(ns, seed), "hopf");
  if (all || suite == "rmatrix") rep.merge(suite_rmatrix(ns), "rmatrix");
  if (all || suite == "adjoint") rep.merge(suite_adjoint(ns), "adjoint");
  if (all || suite == "braided") rep.merge(suite_braided(ns), "braided");
  json body = {{"suite", suite},
               {"n", ns},
               {"seed", seed},
               {"report", rep.to_json(out.timing)},
               {"summary", {{"claims", rep.entries().size()}, {"failures", rep.failures()}}}};
  return finish(with_header(make_field(1), kTaftBasis, std::move(body)), rep, out);
}

int run_report(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot read " << path << "\n";
    return kExitUsage;
  }
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kExitUsage;
  }
  const json* entries = nullptr;
  if (doc.is_array()) entries = &doc;
  else if (doc.contains("report")) entries = &doc["report"];
  else if (doc.contains("checks")) entries = &doc["checks"];
  if (!entries) {
    std::cerr << path << ": no report or checks array\n";
    return kExitUsage;
  }
  const VerificationReport rep = VerificationReport::from_json(*entries);
  for (const auto& e : rep.entries()) {
    std::cout << to_string(e.status) << " " << e.claim_id;
    if (!e.note.empty()) std::cout << "  (" << e.note << ")";
    std::cout << "\n";
  }
  std::cout << rep.entries().size() << " claims, " << rep.failures() << " failed\n";
  return rep.all_passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact adjoint algebras of Taft-type Hopf algebras"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out.path, "write JSON here instead of stdout");
    sub->add_flag("--timing", out.timing, "include per-claim timings");
  };

  int taft_n = 2;
  auto* taft = app.add_subcommand("taft", "bosonized Taft algebra and its axiom checks");
  taft->add_option("--n", taft_n, "order of q")->required()->check(CLI::Range(1, 12));
  add_output(taft);

  AdjointArgs aa;
  auto* adjoint = app.add_subcommand("adjoint", "solve the adjoint conditions");
  adjoint->add_option("--n", aa.n)->required()->check(CLI::Range(1, 8));
  adjoint->add_option("--d", aa.d, "h^d = 1 in K(d, xi)");
  adjoint->add_option("--xi", aa.xi, "w^n = xi, a rational");
  adjoint->add_option("--conditions", aa.conditions, "comma list of ad1, ad2, ad3");
  adjoint->add_option("--k", aa.k, "K, regular, k1 or coideal")
      ->check(CLI::IsMember({"K", "regular", "k1", "coideal"}));
  adjoint->add_flag("--reduced", aa.reduced, "parametrize by alpha(x (x) 1)");
  adjoint->add_flag("--rbar", aa.rbar, "Ad2 with R_21^{-1}");
  adjoint->add_flag("--ad2-literal", aa.ad2_literal, "Ad2 without the coaction on k");
  add_output(adjoint);

  int br_n = 2;
  std::vector<std::string> br_modules{"regular", "trivial"};
  auto* braided = app.add_subcommand("braided-adjoint", "H_ad, its half-braidings and pi_X");
  braided->add_option("--n", br_n)->required()->check(CLI::Range(1, 6));
  braided->add_option("--modules", br_modules)->delimiter(',')->check(CLI::IsMember({"regular", "trivial"}));
  add_output(braided);

  std::string suite = "all";
  std::vector<int> ns;
  std::uint64_t seed = 20240601;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"hopf", "rmatrix", "adjoint", "braided", "all"}));
  verify->add_option("--n", ns, "comma list")->delimiter(',')->required()->check(CLI::Range(1, 8));
  verify->add_option("--seed", seed, "seed for scalar spot checks");
  add_output(verify);

  std::string report_path;
  auto* report = app.add_subcommand("report", "summarize a JSON report");
  report->add_option("--json", report_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*taft) return run_taft(taft_n, out);
    if (*adjoint) return run_adjoint(aa, out);
    if (*braided) return run_braided(br_n, br_modules, out);
    if (*verify) return run_verify(suite, ns, seed, out);
    if (*report) return run_report(report_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

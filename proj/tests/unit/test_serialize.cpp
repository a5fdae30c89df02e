#include "hopfad/serialize.hpp"
#include "hopfad/suites.hpp"

#include <doctest.h>

using namespace hopfad;

TEST_CASE("taft survives a json round trip") {
  for (int n : {2, 3}) {
    const auto s = shared_setting(n);
    const json j = json::parse(emit_json(hopf_to_json(*s->taft)));
    const FinDimHopf back = hopf_from_json(s->field, j);
    CHECK(back.algebra.mult == s->taft->algebra.mult);
    CHECK(back.algebra.unit == s->taft->algebra.unit);
    CHECK(back.coalgebra.comult == s->taft->coalgebra.comult);
    CHECK(back.coalgebra.counit == s->taft->coalgebra.counit);
    CHECK(back.antipode == s->taft->antipode);
    CHECK(check_hopf(back).all_passed());
  }
}

TEST_CASE("report round trip and determinism") {
  const VerificationReport rep = suite_rmatrix({2, 3});
  const json j = rep.to_json();
  CHECK(VerificationReport::from_json(j).to_json() == j);
  CHECK(emit_json(suite_rmatrix({2, 3}).to_json()) == emit_json(j));
  CHECK(j.dump().find("timing") == std::string::npos);

  VerificationReport bad;
  bad.fail("x", json{{"at", 1}});
  const VerificationReport again = VerificationReport::from_json(bad.to_json());
  CHECK_FALSE(again.all_passed());
  REQUIRE(again.entries().front().witness.has_value());
}

TEST_CASE("header and adjoint document") {
  const auto s = shared_setting(2);
  const json h = document_header(s->field, kTaftBasis);
  CHECK(h.at("schema_version") == 1);
  CHECK(h.at("field").dump() == R"({"conductor":2,"cyclotomic_poly":["1","1"]})");

  const AdjointAlgebra a =
      solve_adjoint(make_problem(s, comodule_algebra_K(*s->taft, 2, 2, Rational(0)), ConditionSet::shimizu()));
  const json doc = adjoint_to_json(a);
  CHECK(doc.at("dim") == 4);
  CHECK(doc.at("basis").size() == 4);
  CHECK(linear_map_from_json(s->field, doc.at("basis").at(0)) == a.elements.at(0));
}

TEST_CASE("field spot check is seeded") {
  const auto f = shared_setting(3)->field;
  const VerificationReport a = field_spot_check(f, 7, 20), b = field_spot_check(f, 7, 20);
  CHECK(a.all_passed());
  CHECK(a.to_json() == b.to_json());
}

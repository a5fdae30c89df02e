#include "hopfad/braided_adjoint.hpp"

#include <doctest.h>

#include <map>

using namespace hopfad;

namespace {

std::shared_ptr<const TaftSetting> setting_of(int n) {
  static std::map<int, std::shared_ptr<const TaftSetting>> cache;
  auto& s = cache[n];
  if (!s) s = std::make_shared<const TaftSetting>(make_taft_setting(n));
  return s;
}

const HAdjoint& h_ad(int n) {
  static std::map<int, HAdjoint> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_h_ad(*setting_of(n))).first;
  return it->second;
}

std::vector<NamedModule> both(const HAdjoint& a) {
  return {named_module(a, "trivial"), named_module(a, "regular")};
}

}  // namespace

TEST_CASE("rho_ad: unit acts trivially and h.1 = eps(h) 1") {
  for (int n : {2, 3, 4}) {
    const HAdjoint& a = h_ad(n);
    const auto& f = a.carrier.field;
    for (std::size_t h = 0; h < a.dim(); ++h) {
      CHECK(a.rho_ad.column(0 * a.dim() + h) == sparse_unit(f, h));
      SparseVec expect;
      if (h == 0) expect = sparse_unit(f, 0);
      CHECK(a.rho_ad.column(h * a.dim() + 0) == expect);
    }
  }
}

TEST_CASE("rho_ad(x (x) x) = (1 - q) x^2 at n = 3") {
  // x.x = x x S(1) + (R^2.x) S(R^1.x), and R^2.x (x) R^1.x = q x (x) x.
  const HAdjoint& a = h_ad(3);
  const auto& f = a.carrier.field;
  const Scalar q = zeta_power(f, 1);
  CHECK(a.rho_ad.column(1 * 3 + 1) == sparse_scaled(Scalar::one(f) - q, sparse_unit(f, 2)));
}

TEST_CASE("gamma at the trivial module is the flip") {
  for (int n : {2, 3}) {
    const HAdjoint& a = h_ad(n);
    const auto g = a.half_braiding(trivial_module(a.boson->coalgebra));
    CHECK(g == LinearMap::identity(a.carrier.field, a.dim()));
  }
}

TEST_CASE("verify_h_ad passes for trivial and regular modules") {
  for (int n : {2, 3}) {
    const HAdjoint& a = h_ad(n);
    const auto rep = verify_h_ad(a, both(a));
    CHECK(rep.all_passed());
    CHECK(rep.passed("braided-commutative"));
    CHECK(rep.passed("gamma/multiplicative/regular,regular"));
    CHECK(rep.passed("relative-center/V=regular"));
    CHECK(rep.passed("h-act/regular,regular"));
  }
}

TEST_CASE("the sigma^{-1}_{X,H} form of gamma agrees at n = 2 and fails at n = 3") {
  HAdjoint a2 = build_h_ad(*setting_of(2));
  a2.literal_inverse = true;
  CHECK(verify_h_ad(a2, both(a2)).all_passed());

  HAdjoint a3 = build_h_ad(*setting_of(3));
  a3.literal_inverse = true;
  const auto rep = verify_h_ad(a3, both(a3));
  CHECK_FALSE(rep.passed("braided-commutative"));
  CHECK_FALSE(rep.passed("gamma/regular/module-map"));
  CHECK_FALSE(rep.passed("gamma/multiplicative/regular,regular"));
  CHECK_FALSE(rep.passed("relative-center/V=regular"));
  for (const auto& e : rep.entries())
    if (e.status == Status::Fail) CHECK(e.witness.has_value());
}

TEST_CASE("pi_X is dinatural for trivial and regular X") {
  for (int n : {2, 3}) {
    const HAdjoint& a = h_ad(n);
    for (const auto& m : both(a)) {
      const auto rep = pi_dinatural_check(a, m.module);
      CHECK_MESSAGE(rep.all_passed(), n << " " << m.name);
      CHECK(rep.passed("dinaturality/V=regular"));
      CHECK(rep.passed("dinaturality/V=trivial"));
    }
  }
}

TEST_CASE("a dual action without the antipode breaks pi_X") {
  const HAdjoint& a = h_ad(2);
  const ModuleRep x = regular_module(a.boson->algebra);
  ModuleRep wrong(x.field, x.host_dim, x.dim);
  for (std::size_t t = 0; t < x.host_dim; ++t) {
    const LinearMap tt = x.of(t);
    for (std::size_t c = 0; c < x.dim; ++c)
      for (std::size_t r = 0; r < x.dim; ++r) {
        const Scalar s = tt.entry(c, r);
        if (!s.is_zero()) wrong.action.add(r, t * x.dim + c, s);
      }
  }
  const auto rep = pi_dinatural_check(a, x, &wrong);
  CHECK_FALSE(rep.passed("pi/morphism"));
  CHECK(rep.failures() > 0);
}

TEST_CASE("example 1: phi is an isomorphism onto H_ad") {
  for (int n : {2, 3}) {
    auto s = setting_of(n);
    const auto adj =
        solve_adjoint(make_problem(s, regular_comodule_algebra(*s->taft), ConditionSet::relative()));
    const auto rep = example1_iso(adj, h_ad(n));
    CHECK(rep.all_passed());
    CHECK(rep.passed("phi/unit"));
    CHECK(rep.passed("phi/bijective"));
    CHECK(rep.passed("phi/coaction"));
  }
}

TEST_CASE("example1_iso refuses K other than H#T") {
  auto s = setting_of(2);
  const auto adj = solve_adjoint(
      make_problem(s, comodule_algebra_K(*s->taft, 2, 2, Rational(0)), ConditionSet::relative()));
  CHECK_THROWS_AS(example1_iso(adj, h_ad(2)), std::invalid_argument);
}

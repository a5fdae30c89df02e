#include "hopfad/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace hopfad {

std::shared_ptr<const FinDimHopf> group_algebra_cn(int n) {
  if (n < 1) throw std::invalid_argument("group_algebra_cn: n must be positive");
  const FieldContext f = make_field(n);
  const std::size_t dn = static_cast<std::size_t>(n);
  FinDimAlgebra a(f, dn);
  FinDimCoalgebra c(f, dn);
  for (std::size_t i = 0; i < dn; ++i) {
    for (std::size_t j = 0; j < dn; ++j) a.mult.set_column(i * dn + j, sparse_unit(f, (i + j) % dn));
    c.comult.set_column(i, sparse_unit(f, i * dn + i));
    c.counit.set_column(i, sparse_unit(f, 0));
  }
  a.unit = sparse_unit(f, 0);
  return std::make_shared<const FinDimHopf>(make_hopf(std::move(a), std::move(c)));
}

RMatrix r_matrix_cn(std::shared_ptr<const FinDimHopf> cn) {
  const FieldContext f = cn->field();
  const long n = static_cast<long>(cn->dim());
  const Scalar inv_n = Scalar(f, Rational(1, n));
  SparseVec r;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      r.emplace_back(static_cast<std::size_t>(i * n + j), inv_n * zeta_power(f, -i * j));
  return make_rmatrix(std::move(cn), std::move(r));
}

RMatrix trivial_rmatrix(std::shared_ptr<const FinDimHopf> t) {
  SparseVec one;
  for (const auto& [i, x] : t->algebra.unit)
    for (const auto& [j, y] : t->algebra.unit) one.emplace_back(i * t->dim() + j, x * y);
  return make_rmatrix(std::move(t), std::move(one));
}

LinearMap braided_tensor_mult(const FinDimAlgebra& h, const LinearMap& sigma) {
  const auto& f = h.field;
  const LinearMap id = LinearMap::identity(f, h.dim);
  return kron(h.mult, h.mult) * kron({&id, &sigma, &id});
}

BraidedHopf braided_line(const RMatrix& r) {
  const auto& f = r.field();
  const int n = static_cast<int>(r.host_dim());
  const std::size_t dn = r.host_dim();
  FinDimAlgebra a(f, dn);
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j)
      if (i + j < dn) a.mult.set_column(i * dn + j, sparse_unit(f, i + j));
  a.unit = sparse_unit(f, 0);

  ModuleRep tm(f, dn, dn);
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t e = 0; e < dn; ++e)
      tm.action.set_column(i * dn + e, {{e, zeta_power(f, static_cast<long>(i * e) % n)}});

  const LinearMap sigma = braiding(r, tm, tm);
  const LinearMap mbr = braided_tensor_mult(a, sigma);
  const auto braided_product = [&](const SparseVec& u, const SparseVec& v) {
    SparseVec acc;
    for (const auto& [i, x] : u)
      for (const auto& [j, y] : v)
        for (const auto& [k, z] : mbr.column(i * dn * dn + j)) acc.emplace_back(k, x * y * z);
    sparse_normalize(acc);
    return acc;
  };

  FinDimCoalgebra c(f, dn);
  SparseVec delta_x;
  if (dn > 1) {
    delta_x.emplace_back(0 * dn + 1, Scalar::one(f));
    delta_x.emplace_back(1 * dn + 0, Scalar::one(f));
    sparse_normalize(delta_x);
  }
  SparseVec power = sparse_unit(f, 0);
  for (std::size_t e = 0; e < dn; ++e) {
    c.comult.set_column(e, power);
    power = braided_product(power, delta_x);
  }
  c.counit.set_column(0, sparse_unit(f, 0));
  LinearMap s = solve_antipode(a, c);
  return BraidedHopf{std::move(a), std::move(c), std::move(tm), std::move(s)};
}

Scalar q_binomial(const FieldContext& f, const Scalar& q, int a, int b) {
  if (b < 0 || b > a) return Scalar::zero(f);
  // prod_{i=1}^{b} (1 - q^{a-b+i}) / (1 - q^i)
  Scalar num = Scalar::one(f), den = Scalar::one(f);
  for (int i = 1; i <= b; ++i) {
    num *= Scalar::one(f) - pow(q, static_cast<unsigned>(a - b + i));
    den *= Scalar::one(f) - pow(q, static_cast<unsigned>(i));
  }
  return num / den;
}

VerificationReport check_braided_hopf(const BraidedHopf& h, const RMatrix& r) {
  const auto& f = h.algebra.field;
  const auto& t = *r.host;
  const std::size_t d = h.dim();
  VerificationReport rep;
  rep.merge(check_algebra(h.algebra));
  rep.merge(check_coalgebra(h.coalgebra));
  rep.merge(check_module(t.algebra, h.tmodule));

  const ModuleRep hh = tensor_module(t.coalgebra, h.tmodule, h.tmodule);
  const ModuleRep triv = trivial_module(t.coalgebra);
  const auto linear = [&](const std::string& id, const ModuleRep& from, const ModuleRep& to,
                          const LinearMap& map) {
    if (is_module_map(from, to, map)) rep.pass(id);
    else rep.fail(id, json::object());
  };
  linear("mult-t-linear", hh, h.tmodule, h.algebra.mult);
  linear("unit-t-linear", triv, h.tmodule, h.algebra.unit_map());
  linear("comult-t-linear", h.tmodule, hh, h.coalgebra.comult);
  linear("counit-t-linear", h.tmodule, triv, h.coalgebra.counit);

  const LinearMap mbr = braided_tensor_mult(h.algebra, braiding(r, h.tmodule, h.tmodule));
  record_equal(rep, "comult-braided-multiplicative", h.coalgebra.comult * h.algebra.mult,
               mbr * kron(h.coalgebra.comult, h.coalgebra.comult), {d, d});

  FinDimHopf as_hopf(h.algebra, h.coalgebra, h.antipode);
  rep.merge(check_antipode(as_hopf));

  // Delta(x^a) = sum_i (a choose i)_q x^i (x) x^{a-i}
  const Scalar q = zeta_power(f, 1);
  bool ok = true;
  json witness;
  for (std::size_t a = 0; a < d && ok; ++a) {
    SparseVec expect;
    for (std::size_t i = 0; i <= a; ++i)
      expect.emplace_back(i * d + (a - i), q_binomial(f, q, static_cast<int>(a), static_cast<int>(i)));
    sparse_normalize(expect);
    if (expect != h.coalgebra.comult.column(a)) {
      ok = false;
      witness = {{"power", a}, {"comult", sparse_to_json(h.coalgebra.comult.column(a))}};
    }
  }
  rep.record("comult-q-binomial", ok ? std::nullopt : std::optional<json>(witness));
  return rep;
}

std::pair<FinDimAlgebra, FinDimCoalgebra> bosonization_data(const BraidedHopf& h,
                                                            const FinDimHopf& t,
                                                            const RMatrix& r) {
  const auto& f = t.field();
  const std::size_t dh = h.dim(), dt = t.dim(), dim = dh * dt;
  FinDimAlgebra a(f, dim);
  FinDimCoalgebra c(f, dim);

  // (h#t)(y#r) = h(t_1.y) # t_2 r
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t ti = 0; ti < dt; ++ti)
      for (std::size_t yi = 0; yi < dh; ++yi)
        for (std::size_t ri = 0; ri < dt; ++ri) {
          SparseVec acc;
          for (const auto& [t12, ct] : t.coalgebra.comult.column(ti)) {
            const std::size_t t1 = t12 / dt, t2 = t12 % dt;
            const SparseVec& ty = h.tmodule.action.column(t1 * dh + yi);
            const SparseVec& tr = t.algebra.product(t2, ri);
            for (const auto& [z, cz] : ty)
              for (const auto& [p, cp] : h.algebra.product(hi, z))
                for (const auto& [s, cs] : tr) acc.emplace_back(p * dt + s, ct * cz * cp * cs);
          }
          a.mult.set_column((hi * dt + ti) * dim + yi * dt + ri, std::move(acc));
        }
  for (const auto& [i, x] : h.algebra.unit)
    for (const auto& [j, y] : t.algebra.unit) a.unit.emplace_back(i * dt + j, x * y);
  sparse_normalize(a.unit);

  // Delta(h#t) = h_1 # R^2 t_1 (x) R^1.h_2 # t_2
  for (std::size_t hi = 0; hi < dh; ++hi)
    for (std::size_t ti = 0; ti < dt; ++ti) {
      SparseVec acc;
      for (const auto& [h12, ch] : h.coalgebra.comult.column(hi)) {
        const std::size_t h1 = h12 / dh, h2 = h12 % dh;
        for (const auto& [t12, ct] : t.coalgebra.comult.column(ti)) {
          const std::size_t t1 = t12 / dt, t2 = t12 % dt;
          for (const auto& [ab, cr] : r.element) {
            const std::size_t ra = ab / dt, rb = ab % dt;
            for (const auto& [s, cs] : t.algebra.product(rb, t1))
              for (const auto& [z, cz] : h.tmodule.action.column(ra * dh + h2)) {
                const std::size_t left = h1 * dt + s, right = z * dt + t2;
                acc.emplace_back(left * dim + right, ch * ct * cr * cs * cz);
              }
          }
        }
      }
      c.comult.set_column(hi * dt + ti, std::move(acc));
      const Scalar e = h.coalgebra.counit_of(hi) * t.coalgebra.counit_of(ti);
      if (!e.is_zero()) c.counit.add(0, hi * dt + ti, e);
    }
  return {std::move(a), std::move(c)};
}

FinDimHopf bosonization(const BraidedHopf& h, const FinDimHopf& t, const RMatrix& r) {
  auto [a, c] = bosonization_data(h, t, r);
  return make_hopf(std::move(a), std::move(c));
}

VerificationReport taft_presentation_check(const FinDimAlgebra& a, const FinDimCoalgebra& c, int n) {
  VerificationReport rep;
  const auto& f = a.field;
  const std::size_t dn = static_cast<std::size_t>(n);
  if (a.dim != dn * dn) {
    rep.fail("dimension", {{"dim", a.dim}, {"expected", dn * dn}});
    return rep;
  }
  const SparseVec one = a.unit;
  const SparseVec g = dn > 1 ? sparse_unit(f, 1) : one;
  const SparseVec x = dn > 1 ? sparse_unit(f, dn) : SparseVec{};
  const Scalar q = zeta_power(f, 1);
  const auto power = [&](const SparseVec& v, std::size_t e) {
    SparseVec p = one;
    for (std::size_t i = 0; i < e; ++i) p = a.product(p, v);
    return p;
  };
  const auto check = [&](const std::string& id, const SparseVec& lhs, const SparseVec& rhs) {
    if (lhs == rhs) rep.pass(id);
    else rep.fail(id, {{"lhs", sparse_to_json(lhs)}, {"rhs", sparse_to_json(rhs)}});
  };
  check("relation-gx", a.product(g, x), sparse_scaled(q, a.product(x, g)));
  check("relation-gn", power(g, dn), one);
  check("relation-xn", power(x, dn), {});

  const auto tensor = [&](const SparseVec& u, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, s] : u)
      for (const auto& [j, t] : v) out.emplace_back(i * a.dim + j, s * t);
    sparse_normalize(out);
    return out;
  };
  check("coproduct-x", c.comult.apply(x),
        sparse_axpy(tensor(x, one), Scalar::one(f), tensor(g, x)));
  check("coproduct-g", c.comult.apply(g), tensor(g, g));
  check("counit-x", {{0, c.counit_of(x)}}, {{0, Scalar::zero(f)}});
  check("counit-g", {{0, c.counit_of(g)}}, {{0, Scalar::one(f)}});

  // x^a g^b are independent and sit at index a*n+b
  std::vector<Vector> monomials;
  bool placed = true;
  for (std::size_t i = 0; i < dn && placed; ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      const SparseVec mono = a.product(power(x, i), power(g, j));
      monomials.push_back(to_dense(f, a.dim, mono));
      if (mono != sparse_unit(f, i * dn + j)) placed = false;
    }
  if (placed && SubspaceBasis::span(f, a.dim, monomials).dim() == a.dim) rep.pass("monomial-basis");
  else rep.fail("monomial-basis", {{"rank", SubspaceBasis::span(f, a.dim, monomials).dim()}});
  return rep;
}

VerificationReport taft_presentation_check(const FinDimHopf& b, int n) {
  VerificationReport rep = taft_presentation_check(b.algebra, b.coalgebra, n);
  // S(g) = g^{-1}, S(x) = -g^{-1}x
  const auto& f = b.field();
  const std::size_t dn = static_cast<std::size_t>(n);
  if (dn > 1) {
    const SparseVec ginv = sparse_unit(f, dn - 1);
    const SparseVec sx = b.antipode.apply(sparse_unit(f, dn));
    const SparseVec expect = sparse_scaled(-Scalar::one(f), b.algebra.product(ginv, sparse_unit(f, dn)));
    const SparseVec sg = b.antipode.apply(sparse_unit(f, 1));
    if (sx == expect && sg == ginv) rep.pass("antipode-generators");
    else rep.fail("antipode-generators", {{"S(x)", sparse_to_json(sx)}, {"S(g)", sparse_to_json(sg)}});
  } else {
    rep.pass("antipode-generators");
  }
  return rep;
}

namespace {

SparseVec pure_tensor(const SparseVec& u, const SparseVec& v, std::size_t dim_v) {
  SparseVec out;
  for (const auto& [i, s] : u)
    for (const auto& [j, t] : v) out.emplace_back(i * dim_v + j, s * t);
  sparse_normalize(out);
  return out;
}

ComoduleAlgebra extend_coaction(std::string name, const FinDimHopf& h, FinDimAlgebra k,
                                const std::vector<std::pair<SparseVec, SparseVec>>& generators,
                                const std::vector<std::vector<std::size_t>>& words) {
  // words[i] lists generator indices whose product is basis element i
  LinearMap coaction(k.field, h.dim() * k.dim, k.dim);
  const SparseVec one_one = pure_tensor(h.algebra.unit, k.unit, k.dim);
  for (std::size_t i = 0; i < k.dim; ++i) {
    SparseVec img = one_one;
    SparseVec elem = k.unit;
    for (std::size_t gi : words[i]) {
      img = tensor_product(h.algebra, k, img, generators[gi].second);
      elem = k.product(elem, generators[gi].first);
    }
    if (elem != sparse_unit(k.field, i))
      throw std::logic_error("extend_coaction: word does not produce its basis element");
    coaction.set_column(i, std::move(img));
  }
  return ComoduleAlgebra{std::move(name), std::move(k), std::move(coaction), std::nullopt, {}};
}

}  // namespace

ComoduleAlgebra comodule_algebra_K(const FinDimHopf& taft, int n, int d, const Rational& xi) {
  if (n < 1 || d < 1 || n % d != 0) throw std::invalid_argument("comodule_algebra_K: need d | n");
  const auto& f = taft.field();
  const int m = n / d;
  const std::size_t dn = static_cast<std::size_t>(n), dd = static_cast<std::size_t>(d);
  const std::size_t dim = dd * dn;
  FinDimAlgebra k(f, dim);
  const Scalar xis(f, xi);
  // (h^a w^b)(h^c w^e) = q^{-mbc} h^{a+c} w^{b+e}, w^n = xi
  for (std::size_t a = 0; a < dd; ++a)
    for (std::size_t b = 0; b < dn; ++b)
      for (std::size_t c = 0; c < dd; ++c)
        for (std::size_t e = 0; e < dn; ++e) {
          Scalar coef = zeta_power(f, -static_cast<long>(m) * static_cast<long>(b * c));
          std::size_t w = b + e;
          if (w >= dn) {
            w -= dn;
            coef *= xis;
          }
          SparseVec col;
          if (!coef.is_zero()) col.emplace_back(((a + c) % dd) * dn + w, coef);
          k.mult.set_column((a * dn + b) * dim + c * dn + e, std::move(col));
        }
  k.unit = sparse_unit(f, 0);

  const std::size_t dt = static_cast<std::size_t>(n);
  const SparseVec g = sparse_unit(f, dn > 1 ? 1 : 0);
  const SparseVec gm = sparse_unit(f, static_cast<std::size_t>(m) % dt);
  const SparseVec x = dn > 1 ? sparse_unit(f, dt) : SparseVec{};
  const SparseVec one_t = taft.algebra.unit;
  const SparseVec h_el = sparse_unit(f, dd > 1 ? dn : 0);
  const SparseVec w_el = dn > 1 ? sparse_unit(f, 1) : sparse_scaled(xis, k.unit);
  const SparseVec lambda_h = pure_tensor(gm, h_el, dim);
  const SparseVec lambda_w =
      sparse_axpy(pure_tensor(x, k.unit, dim), Scalar::one(f), pure_tensor(g, w_el, dim));

  std::vector<std::vector<std::size_t>> words(dim);
  for (std::size_t a = 0; a < dd; ++a)
    for (std::size_t b = 0; b < dn; ++b) {
      auto& wd = words[a * dn + b];
      wd.assign(a, 0);
      wd.insert(wd.end(), b, 1);
    }
  // n = 1 has no w^1 in the basis; the empty word already covers w^0.
  ComoduleAlgebra out = extend_coaction("K(" + std::to_string(d) + "," + to_string(xi) + ")", taft,
                                        std::move(k), {{h_el, lambda_h}, {w_el, lambda_w}}, words);
  out.k_params = KParams{d, m, xi};
  if (dd > 1) out.generators.push_back(h_el);
  if (dn > 1) out.generators.push_back(w_el);
  return out;
}

ComoduleAlgebra trivial_comodule_algebra(const FinDimHopf& taft) {
  const auto& f = taft.field();
  FinDimAlgebra k(f, 1);
  k.mult.set_column(0, sparse_unit(f, 0));
  k.unit = sparse_unit(f, 0);
  LinearMap coaction(f, taft.dim(), 1);
  coaction.set_column(0, taft.algebra.unit);
  return ComoduleAlgebra{"k1", std::move(k), std::move(coaction), std::nullopt, {}};
}

ComoduleAlgebra regular_comodule_algebra(const FinDimHopf& taft) {
  const auto& f = taft.field();
  const std::size_t n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(taft.dim()))));
  std::vector<SparseVec> gens;
  if (n > 1) gens = {sparse_unit(f, 1), sparse_unit(f, n)};
  return ComoduleAlgebra{"regular", taft.algebra, taft.coalgebra.comult, std::nullopt, std::move(gens)};
}

ComoduleAlgebra coideal_cd(const FinDimHopf& taft, int n, int d) {
  if (n < 1 || d < 1 || n % d != 0) throw std::invalid_argument("coideal_cd: need d | n");
  const auto& f = taft.field();
  const std::size_t dn = static_cast<std::size_t>(n), dd = static_cast<std::size_t>(d);
  const std::size_t m = dn / dd;
  FinDimAlgebra k(f, dd);
  for (std::size_t a = 0; a < dd; ++a)
    for (std::size_t b = 0; b < dd; ++b) k.mult.set_column(a * dd + b, sparse_unit(f, (a + b) % dd));
  k.unit = sparse_unit(f, 0);
  LinearMap coaction(f, taft.dim() * dd, dd);
  for (std::size_t a = 0; a < dd; ++a)
    coaction.set_column(a, sparse_unit(f, ((m * a) % dn) * dd + a));
  std::vector<SparseVec> gens;
  if (dd > 1) gens.push_back(sparse_unit(f, 1));
  return ComoduleAlgebra{"kC" + std::to_string(d), std::move(k), std::move(coaction), std::nullopt,
                         std::move(gens)};
}

LinearMap projection_pi(int n) {
  const FieldContext f = make_field(n);
  const std::size_t dn = static_cast<std::size_t>(n);
  LinearMap p(f, dn, dn * dn);
  for (std::size_t b = 0; b < dn; ++b) p.set_column(b, sparse_unit(f, b));
  return p;
}

LinearMap inclusion_t(int n) {
  const FieldContext f = make_field(n);
  const std::size_t dn = static_cast<std::size_t>(n);
  LinearMap p(f, dn * dn, dn);
  for (std::size_t b = 0; b < dn; ++b) p.set_column(b, sparse_unit(f, b));
  return p;
}

LinearMap inclusion_h(int n) {
  const FieldContext f = make_field(n);
  const std::size_t dn = static_cast<std::size_t>(n);
  LinearMap p(f, dn * dn, dn);
  for (std::size_t a = 0; a < dn; ++a) p.set_column(a, sparse_unit(f, a * dn));
  return p;
}

VerificationReport check_hopf_morphism(const FinDimHopf& a, const FinDimHopf& b, const LinearMap& f) {
  VerificationReport rep;
  const std::size_t da = a.dim();
  record_equal(rep, "morphism-mult", f * a.algebra.mult, b.algebra.mult * kron(f, f), {da, da});
  record_equal(rep, "morphism-unit", f * a.algebra.unit_map(), b.algebra.unit_map(), {1});
  record_equal(rep, "morphism-comult", b.coalgebra.comult * f, kron(f, f) * a.coalgebra.comult, {da});
  record_equal(rep, "morphism-counit", b.coalgebra.counit * f, a.coalgebra.counit, {da});
  record_equal(rep, "morphism-antipode", f * a.antipode, b.antipode * f, {da});
  return rep;
}

TaftSetting make_taft_setting(int n) {
  auto group = group_algebra_cn(n);
  RMatrix r = r_matrix_cn(group);
  BraidedHopf line = braided_line(r);
  auto taft = std::make_shared<const FinDimHopf>(bosonization(line, *group, r));
  return TaftSetting{n, group->field(), group, std::move(r), std::move(line), std::move(taft),
                     projection_pi(n), inclusion_t(n), inclusion_h(n)};
}

}  // namespace hopfad

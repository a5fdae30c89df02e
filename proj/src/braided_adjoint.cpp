#include "hopfad/braided_adjoint.hpp"

namespace hopfad {

namespace {

LinearMap id_map(const FieldContext& f, std::size_t n) { return LinearMap::identity(f, n); }

LinearMap transpose(const LinearMap& m) {
  LinearMap t(m.field(), m.cols(), m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, s] : m.column(c)) t.add(c, r, s);
  return t;
}

/// h#t -> eps(h) t
LinearMap projection_to_t(const HAdjoint& a) {
  const auto& f = a.carrier.field;
  const std::size_t dt = a.t_dim();
  LinearMap p(f, dt, a.dim() * dt);
  for (std::size_t h = 0; h < a.dim(); ++h) {
    const Scalar e = a.line.coalgebra.counit_of(h);
    if (e.is_zero()) continue;
    for (std::size_t t = 0; t < dt; ++t) p.add(t, h * dt + t, e);
  }
  return p;
}

/// h#t -> eps(t) h
LinearMap projection_to_h(const HAdjoint& a) {
  const auto& f = a.carrier.field;
  const std::size_t dt = a.t_dim();
  LinearMap p(f, a.dim(), a.dim() * dt);
  for (std::size_t t = 0; t < dt; ++t) {
    const Scalar e = a.base->coalgebra.counit_of(t);
    if (e.is_zero()) continue;
    for (std::size_t h = 0; h < a.dim(); ++h) p.add(h, h * dt + t, e);
  }
  return p;
}

/// h.(v (x) w) = h_1.(R^2.v) (x) (R^1.h_2).w as H (x) V (x) W -> V (x) W.
LinearMap h_act_tensor(const HAdjoint& a, const ModuleRep& v, const ModuleRep& w) {
  const auto& f = a.carrier.field;
  const std::size_t n = a.dim(), dt = a.t_dim();
  const ModuleRep vt = a.t_module(v), vh = a.h_module(v), wh = a.h_module(w);
  const LinearMap ih = id_map(f, n), iw = id_map(f, w.dim);
  LinearMap twist(f, n * n * v.dim * w.dim, n * n * v.dim * w.dim);
  for (const auto& [ij, s] : a.rmatrix.element) {
    const LinearMap r1 = a.line.tmodule.of(ij / dt), r2 = vt.of(ij % dt);
    twist = twist + kron({&ih, &r1, &r2, &iw}).scaled(s);
  }
  const LinearMap iv = id_map(f, v.dim);
  return kron(vh.action, wh.action) * permute_factors(f, {n, n, v.dim, w.dim}, {0, 2, 1, 3}) *
         twist * kron({&a.line.coalgebra.comult, &iv, &iw});
}

ModuleRep tensor_over(const HAdjoint& a, const ModuleRep& v, const ModuleRep& w) {
  return tensor_module(a.boson->coalgebra, v, w);
}

void record_true(VerificationReport& r, const std::string& id, bool ok, json witness) {
  if (ok)
    r.pass(id);
  else
    r.fail(id, std::move(witness));
}

}  // namespace

LinearMap HAdjoint::h_inclusion() const {
  const auto& f = carrier.field;
  const std::size_t dt = t_dim();
  LinearMap m(f, dim() * dt, dim());
  for (std::size_t h = 0; h < dim(); ++h)
    for (const auto& [t, s] : base->algebra.unit) m.add(h * dt + t, h, s);
  return m;
}

LinearMap HAdjoint::t_inclusion() const {
  const auto& f = carrier.field;
  const std::size_t dt = t_dim();
  LinearMap m(f, dim() * dt, dt);
  for (std::size_t t = 0; t < dt; ++t)
    for (const auto& [h, s] : line.algebra.unit) m.add(h * dt + t, t, s);
  return m;
}

ModuleRep HAdjoint::t_module(const ModuleRep& x) const { return pullback_module(t_inclusion(), x); }
ModuleRep HAdjoint::h_module(const ModuleRep& x) const { return pullback_module(h_inclusion(), x); }

LinearMap HAdjoint::half_braiding(const ModuleRep& x) const {
  const auto& f = carrier.field;
  const std::size_t n = dim();
  const ModuleRep xt = t_module(x);
  const LinearMap swap = literal_inverse ? braiding_inverse(rmatrix, xt, line.tmodule)
                                         : braiding(rmatrix, line.tmodule, xt);
  return kron(h_module(x).action, id_map(f, n)) * kron(id_map(f, n), swap) *
         kron(line.coalgebra.comult, id_map(f, x.dim));
}

const LinearMap& HAdjoint::half_braiding(const std::string& name, const ModuleRep& x) const {
  auto it = half_braidings.find(name);
  if (it == half_braidings.end()) it = half_braidings.emplace(name, half_braiding(x)).first;
  return it->second;
}

HAdjoint build_h_ad(const BraidedHopf& h, const RMatrix& r) {
  const auto& f = h.algebra.field;
  const std::size_t n = h.dim(), dt = r.host_dim();
  auto boson = std::make_shared<const FinDimHopf>(bosonization(h, *r.host, r));

  const LinearMap ih = id_map(f, n);
  const LinearMap sigma = braiding(r, h.tmodule, h.tmodule);
  const LinearMap rho = h.algebra.mult * kron(h.algebra.mult, ih) *
                        kron(id_map(f, n * n), h.antipode) * kron(ih, sigma) *
                        kron(h.coalgebra.comult, ih);

  ModuleRep action(f, n * dt, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < dt; ++b) {
      const LinearMap tb = h.tmodule.of(b);
      for (std::size_t v = 0; v < n; ++v) {
        SparseVec col;
        for (const auto& [u, s] : tb.column(v))
          col = sparse_axpy(col, s, rho.column(a * n + u));
        action.action.set_column((a * dt + b) * n + v, std::move(col));
      }
    }

  ComoduleRep coaction(f, n * dt, n);
  for (std::size_t v = 0; v < n; ++v) {
    SparseVec col;
    for (const auto& [ab, c] : h.coalgebra.comult.column(v)) {
      const std::size_t h1 = ab / n, h2 = ab % n;
      for (const auto& [ij, s] : r.element) {
        const SparseVec moved = h.tmodule.of(ij / dt).column(h2);
        for (const auto& [u, t] : moved)
          col.emplace_back((h1 * dt + ij % dt) * n + u, c * s * t);
      }
    }
    coaction.coaction.set_column(v, std::move(col));
  }

  return HAdjoint{r.host, r, h, boson, h.algebra, rho, std::move(action), std::move(coaction), false, {}};
}

HAdjoint build_h_ad(const TaftSetting& s) { return build_h_ad(s.line, s.r); }

NamedModule named_module(const HAdjoint& a, const std::string& name) {
  if (name == "regular") return {name, regular_module(a.boson->algebra)};
  if (name == "trivial") return {name, trivial_module(a.boson->coalgebra)};
  throw std::invalid_argument("unknown module '" + name + "'");
}

VerificationReport verify_h_ad(const HAdjoint& a, const std::vector<NamedModule>& modules) {
  VerificationReport rep;
  const auto& f = a.carrier.field;
  const std::size_t n = a.dim(), dt = a.t_dim();
  const LinearMap ih = id_map(f, n);
  const FinDimAlgebra& m = a.carrier;

  record_equal(rep, "rho-ad/associativity", a.rho_ad * kron(ih, a.rho_ad), a.rho_ad * kron(m.mult, ih),
               {n, n, n});
  record_equal(rep, "rho-ad/unit", a.rho_ad * kron(m.unit_map(), ih), ih, {n});
  const ModuleRep hh = tensor_module(a.base->coalgebra, a.line.tmodule, a.line.tmodule);
  record_equal(rep, "rho-ad/t-linear", a.line.tmodule.action * kron(id_map(f, dt), a.rho_ad),
               a.rho_ad * hh.action, {dt, n, n});
  rep.merge(check_module(a.boson->algebra, a.action), "rho-ad/h#t-module");

  const ModuleRep had = a.action;
  record_true(rep, "product/module-map", is_module_map(tensor_over(a, had, had), had, m.mult),
              json{{"map", "m"}});
  record_true(rep, "unit/module-map",
              is_module_map(trivial_module(a.boson->coalgebra), had, m.unit_map()),
              json{{"map", "u"}});
  rep.merge(check_yd(*a.boson, YDModule{a.action, a.coaction}), "displayed-yd");

  const LinearMap gamma_had = a.half_braiding(had);
  record_equal(rep, "braided-commutative", m.mult * gamma_had, m.mult, {n, n});

  {
    const ModuleRep triv = trivial_module(a.boson->coalgebra);
    record_equal(rep, "gamma/unit-object", a.half_braiding(triv), LinearMap::flip(f, n, 1), {n});
  }

  for (const auto& [name, x] : modules) {
    const std::string p = "gamma/" + name;
    const LinearMap& g = a.half_braiding(name, x);
    const LinearMap ix = id_map(f, x.dim);
    const Matrix gm = g.to_matrix();
    if (rank(gm) == gm.rows()) {
      const LinearMap inv = LinearMap::from_matrix(inverse(gm));
      record_equal(rep, p + "/invertible", g * inv, id_map(f, n * x.dim), {x.dim, n});
    } else {
      rep.fail(p + "/invertible", json{{"rank", rank(gm)}, {"size", gm.rows()}});
    }
    record_true(rep, p + "/module-map", is_module_map(tensor_over(a, had, x), tensor_over(a, x, had), g),
                json{{"module", name}});
    const YDModule xd{x, trivial_comodule(a.boson->algebra, x.dim)};
    record_equal(rep, p + "/from-coaction", g, yd_braiding(YDModule{a.action, a.coaction}, xd),
                 {n, x.dim});
    record_equal(rep, p + "/product", g * kron(m.mult, ix),
                 kron(ix, m.mult) * kron(g, ih) * kron(ih, g), {n, n, x.dim});
    record_equal(rep, p + "/unit", g * kron(m.unit_map(), ix), kron(ix, m.unit_map()), {x.dim});
  }

  for (const auto& [xname, x] : modules)
    for (const auto& [yname, y] : modules) {
      const std::string p = xname + "," + yname;
      record_equal(rep, "h-act/" + p, h_act_tensor(a, x, y),
                   pullback_module(a.h_inclusion(), tensor_over(a, x, y)).action, {n, x.dim, y.dim});
      const LinearMap& gx = a.half_braiding(xname, x);
      const LinearMap& gy = a.half_braiding(yname, y);
      const LinearMap ix = id_map(f, x.dim), iy = id_map(f, y.dim);
      record_equal(rep, "gamma/multiplicative/" + p, a.half_braiding(tensor_over(a, x, y)),
                   kron(ix, gy) * kron(gx, iy), {n, x.dim, y.dim});
      std::optional<json> bad;
      const auto homs = module_hom_basis(x, y);
      for (std::size_t i = 0; i < homs.size() && !bad; ++i) {
        const LinearMap lhs = kron(homs[i], ih) * gx, rhs = gy * kron(ih, homs[i]);
        if (lhs != rhs) bad = json{{"hom_index", i}, {"mismatch", map_witness(lhs, rhs, lhs.first_difference(rhs), {n, x.dim})}};
      }
      rep.record("gamma/natural/" + p, bad);
    }

  const LinearMap proj = projection_to_t(a);
  for (const std::string vname : {"regular", "trivial"}) {
    const ModuleRep v = vname == std::string("regular") ? regular_module(a.base->algebra)
                                                         : trivial_module(a.base->coalgebra);
    const ModuleRep gv = pullback_module(proj, v);
    const LinearMap gamma_gv = a.half_braiding(gv);
    record_equal(rep, "relative-center/V=" + vname,
                 braiding_inverse(a.rmatrix, a.line.tmodule, v) * gamma_gv, id_map(f, n * v.dim),
                 {n, v.dim});
  }
  return rep;
}

VerificationReport pi_dinatural_check(const HAdjoint& a, const ModuleRep& x,
                                      const ModuleRep* dual_override) {
  VerificationReport rep;
  const auto& f = a.carrier.field;
  const std::size_t n = a.dim();
  const FinDimHopf& b = *a.boson;
  const LinearMap ih = id_map(f, n);

  DualModule xd = dual_module(b, x);
  if (dual_override) xd.module = *dual_override;
  auto pi_of = [&](const ModuleRep& m, const DualModule& md) {
    return kron(a.h_module(m).action, id_map(f, m.dim)) * kron(ih, md.coev);
  };
  const LinearMap pi_x = pi_of(x, xd);
  record_true(rep, "pi/morphism", is_module_map(a.action, tensor_over(a, x, xd.module), pi_x),
              json{{"map", "pi_X"}});

  {
    std::optional<json> bad;
    const auto ends = module_hom_basis(x, x);
    const LinearMap ix = id_map(f, x.dim);
    for (std::size_t i = 0; i < ends.size() && !bad; ++i) {
      const LinearMap lhs = kron(ends[i], ix) * pi_x, rhs = kron(ix, transpose(ends[i])) * pi_x;
      if (lhs != rhs) bad = json{{"hom_index", i}, {"mismatch", map_witness(lhs, rhs, lhs.first_difference(rhs), {n})}};
    }
    rep.record("pi/dinatural", bad);
  }

  const LinearMap proj = projection_to_t(a);
  for (const std::string vname : {"regular", "trivial"}) {
    const ModuleRep v = vname == std::string("regular") ? regular_module(a.base->algebra)
                                                         : trivial_module(a.base->coalgebra);
    const DualModule vd = dual_module(*a.base, v);
    const ModuleRep gv = pullback_module(proj, v), gvd = pullback_module(proj, vd.module);

    const ModuleRep mp = tensor_over(a, gv, x);  // V |> M
    const DualModule mpd = dual_module(b, mp);
    const ModuleRep q = tensor_over(a, gvd, mp);  // V* (x) V (x) M
    const DualModule qd = dual_module(b, q);

    const LinearMap im = id_map(f, x.dim);
    const LinearMap lhs = kron(im, transpose(kron(vd.ev, im))) * pi_x;

    // beta(y) = sum_{i,j} (ev_V (x) id_M (x) ev_{V|>M})(sigma(y (x) v*_i) (x) e_j) (x) e^{(i,j)}
    const ModuleRep src = tensor_over(a, mp, mpd.module);  // V (x) M (x) (V (x) M)*
    const LinearMap sigma = braiding(a.rmatrix, a.t_module(src), vd.module);
    const std::size_t dv = v.dim, dm = x.dim, dmp = mp.dim, da = src.dim;
    LinearMap beta(f, dm * q.dim, da);
    for (std::size_t y = 0; y < da; ++y)
      for (std::size_t i = 0; i < dv; ++i)
        for (const auto& [idx, s] : sigma.column(y * dv + i)) {
          const std::size_t va = idx / da, rest = idx % da;
          const std::size_t vb = rest / (dm * dmp), mm = (rest / dmp) % dm, j = rest % dmp;
          if (va == vb) beta.add(mm * q.dim + i * dmp + j, y, s);
        }
    record_true(rep, "beta/morphism/V=" + vname,
                is_module_map(src, tensor_over(a, x, qd.module), beta), json{{"V", vname}});
    record_equal(rep, "dinaturality/V=" + vname, lhs, beta * pi_of(mp, mpd), {n});
  }
  return rep;
}

VerificationReport example1_iso(const AdjointAlgebra& adj, const HAdjoint& a) {
  VerificationReport rep;
  const auto& p = adj.problem;
  const auto& f = a.carrier.field;
  const std::size_t n = a.dim(), dim = adj.dim(), hd = p.hopf_dim();
  if (hd != a.boson->dim() || p.k_dim() != hd || p.comod_alg.algebra.mult != p.hopf().algebra.mult ||
      p.comod_alg.coaction != p.hopf().coalgebra.comult)
    throw std::invalid_argument("example1_iso: K must be the regular comodule algebra of H#T");
  if (!(p.conditions == ConditionSet::relative()))
    throw std::invalid_argument("example1_iso: expects the relative conditions ad1,ad2,ad3");

  const LinearMap eps_t = projection_to_h(a);
  LinearMap phi(f, n, dim);
  const SparseVec& one = p.hopf().algebra.unit;
  const std::size_t ku = p.k_unit();
  for (std::size_t i = 0; i < dim; ++i) {
    SparseVec at_one;
    for (const auto& [x, s] : one)
      at_one = sparse_axpy(at_one, s, adj.elements[i].column(x * p.k_dim() + ku));
    phi.set_column(i, eps_t.apply(at_one));
  }

  const Matrix pm = phi.to_matrix();
  const std::size_t rk = rank(pm);
  if (dim == n && rk == n)
    rep.pass("phi/bijective");
  else
    rep.fail("phi/bijective", json{{"dim_adjoint", dim}, {"dim_h", n}, {"rank", rk}});

  record_equal(rep, "phi/multiplicative", phi * adj.algebra.mult, a.carrier.mult * kron(phi, phi),
               {dim, dim});
  record_equal(rep, "phi/unit", phi * adj.algebra.unit_map(), a.carrier.unit_map(), {1});

  // x.h = (id (x) eps_T)(x_1 (h#1) S(x_2))
  const FinDimHopf& b = *a.boson;
  const LinearMap incl = a.h_inclusion();
  ModuleRep displayed(f, hd, n);
  for (std::size_t x = 0; x < hd; ++x)
    for (std::size_t h = 0; h < n; ++h) {
      SparseVec acc;
      for (const auto& [uv, c] : b.coalgebra.comult.column(x)) {
        const SparseVec left = b.algebra.product(sparse_unit(f, uv / hd), incl.column(h));
        acc = sparse_axpy(acc, c, b.algebra.product(left, b.antipode.column(uv % hd)));
      }
      displayed.action.set_column(x * n + h, eps_t.apply(acc));
    }
  record_equal(rep, "displayed-action/matches-rho-ad", displayed.action, a.action.action, {hd, n});
  record_equal(rep, "phi/action", phi * adj.action.action, displayed.action * kron(id_map(f, hd), phi),
               {hd, dim});
  record_equal(rep, "phi/coaction", kron(id_map(f, hd), phi) * adj.coaction.coaction,
               a.coaction.coaction * phi, {dim});
  return rep;
}

}  // namespace hopfad

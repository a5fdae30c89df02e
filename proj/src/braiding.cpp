#include "hopfad/braiding.hpp"

#include <stdexcept>

namespace hopfad {

LinearMap ModuleRep::of(std::size_t i) const {
  LinearMap out(field, dim, dim);
  for (std::size_t c = 0; c < dim; ++c) out.set_column(c, action.column(i * dim + c));
  return out;
}

LinearMap ModuleRep::of(const SparseVec& h) const {
  LinearMap out(field, dim, dim);
  for (const auto& [i, s] : h) out = out + of(i).scaled(s);
  return out;
}

namespace {

std::size_t join_index(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

std::size_t product_of(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

}  // namespace

LinearMap permute_factors(const FieldContext& f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> odims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) odims[k] = dims[perm[k]];
  const std::size_t total = product_of(dims);
  std::vector<std::size_t> target(total);
  std::vector<std::size_t> od(perm.size());
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto d = split_index(idx, dims);
    for (std::size_t k = 0; k < perm.size(); ++k) od[k] = d[perm[k]];
    target[idx] = join_index(od, odims);
  }
  return LinearMap::permutation(f, target);
}

RMatrix make_rmatrix(std::shared_ptr<const FinDimHopf> host, SparseVec r) {
  const auto& f = host->field();
  const std::size_t n = host->dim();
  const FinDimAlgebra tt = tensor_algebra(host->algebra, host->algebra);
  const Matrix left = tt.left_mult(r).to_matrix();
  auto x = solve(left, to_dense(f, n * n, tt.unit));
  if (!x) throw std::domain_error("R is not invertible in T (x) T");
  sparse_normalize(r);
  return RMatrix{std::move(host), std::move(r), to_sparse(*x)};
}

SparseVec flip_element(const SparseVec& r, std::size_t dim) {
  SparseVec out;
  for (const auto& [ab, s] : r) out.emplace_back((ab % dim) * dim + ab / dim, s);
  sparse_normalize(out);
  return out;
}

RMatrix rbar(const RMatrix& r) {
  const std::size_t n = r.host_dim();
  return RMatrix{r.host, flip_element(r.inverse, n), flip_element(r.element, n)};
}

namespace {

// Places a two-tensor into slots (i, j) of a triple tensor, with 1 elsewhere.
SparseVec embed3(const SparseVec& r, std::size_t n, const SparseVec& unit, int i, int j) {
  SparseVec out;
  const int k = 3 - i - j;
  for (const auto& [ab, s] : r)
    for (const auto& [u, su] : unit) {
      std::size_t d[3];
      d[i] = ab / n;
      d[j] = ab % n;
      d[k] = u;
      out.emplace_back((d[0] * n + d[1]) * n + d[2], s * su);
    }
  sparse_normalize(out);
  return out;
}

void record_vec(VerificationReport& rep, const std::string& id, const SparseVec& lhs,
                const SparseVec& rhs, json where = json::object()) {
  if (lhs == rhs) {
    rep.pass(id);
    return;
  }
  where["lhs"] = sparse_to_json(lhs);
  where["rhs"] = sparse_to_json(rhs);
  rep.fail(id, where);
}

}  // namespace

VerificationReport check_rmatrix(const RMatrix& rm) {
  VerificationReport rep;
  const auto& h = *rm.host;
  const auto& f = h.field();
  const std::size_t n = h.dim();
  const FinDimAlgebra tt = tensor_algebra(h.algebra, h.algebra);
  const SparseVec& one = h.algebra.unit;
  const SparseVec& r = rm.element;
  const SparseVec& ri = rm.inverse;
  const LinearMap id = LinearMap::identity(f, n);

  {
    const SparseVec a = tt.product(r, ri), b = tt.product(ri, r);
    if (a == tt.unit && b == tt.unit) rep.pass("inverse");
    else rep.fail("inverse", {{"r_rinv", sparse_to_json(a)}, {"rinv_r", sparse_to_json(b)}});
  }
  const SparseVec r13 = embed3(r, n, one, 0, 2), r23 = embed3(r, n, one, 1, 2),
                  r12 = embed3(r, n, one, 0, 1);
  record_vec(rep, "coproduct-left", kron(h.coalgebra.comult, id).apply(r),
             tensor_product(h.algebra, tt, r13, r23));
  record_vec(rep, "coproduct-right", kron(id, h.coalgebra.comult).apply(r),
             tensor_product(h.algebra, tt, r13, r12));
  record_vec(rep, "counit-left", kron(h.coalgebra.counit, id).apply(r), one);
  record_vec(rep, "counit-right", kron(id, h.coalgebra.counit).apply(r), one);

  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    const SparseVec& d = h.coalgebra.comult.column(i);
    const SparseVec lhs = flip_element(d, n);
    const SparseVec rhs = tt.product(tt.product(r, d), ri);
    if (lhs != rhs) {
      ok = false;
      record_vec(rep, "quasi-cocommutative", lhs, rhs, {{"basis", i}});
    }
  }
  if (ok) rep.pass("quasi-cocommutative");

  const LinearMap& s = h.antipode;
  record_vec(rep, "antipode-left-inverse", kron(s, id).apply(r), ri);
  record_vec(rep, "antipode-right-inverse", kron(id, s).apply(ri), r);
  record_vec(rep, "antipode-both", kron(s, s).apply(r), r);
  return rep;
}

ModuleRep regular_module(const FinDimAlgebra& a) {
  ModuleRep v(a.field, a.dim, a.dim);
  v.action = a.mult;
  return v;
}

ModuleRep trivial_module(const FinDimCoalgebra& c) {
  ModuleRep v(c.field, c.dim, 1);
  v.action = c.counit;
  return v;
}

ModuleRep pullback_module(const LinearMap& phi, const ModuleRep& v) {
  ModuleRep out(v.field, phi.cols(), v.dim);
  out.action = v.action * kron(phi, LinearMap::identity(v.field, v.dim));
  return out;
}

ModuleRep tensor_module(const FinDimCoalgebra& c, const ModuleRep& v, const ModuleRep& w) {
  const auto& f = c.field;
  ModuleRep out(f, c.dim, v.dim * w.dim);
  const LinearMap iv = LinearMap::identity(f, v.dim), iw = LinearMap::identity(f, w.dim);
  out.action = kron(v.action, w.action) *
               permute_factors(f, {c.dim, c.dim, v.dim, w.dim}, {0, 2, 1, 3}) *
               kron({&c.comult, &iv, &iw});
  return out;
}

ComoduleRep tensor_comodule(const FinDimAlgebra& a, const ComoduleRep& v, const ComoduleRep& w) {
  const auto& f = a.field;
  ComoduleRep out(f, a.dim, v.dim * w.dim);
  const LinearMap iv = LinearMap::identity(f, v.dim), iw = LinearMap::identity(f, w.dim);
  out.coaction = kron({&a.mult, &iv, &iw}) *
                 permute_factors(f, {a.dim, v.dim, a.dim, w.dim}, {0, 2, 1, 3}) *
                 kron(v.coaction, w.coaction);
  return out;
}

ComoduleRep regular_comodule(const FinDimCoalgebra& c) {
  ComoduleRep out(c.field, c.dim, c.dim);
  out.coaction = c.comult;
  return out;
}

ComoduleRep trivial_comodule(const FinDimAlgebra& a, std::size_t dim) {
  ComoduleRep out(a.field, a.dim, dim);
  out.coaction = kron(a.unit_map(), LinearMap::identity(a.field, dim));
  return out;
}

YDModule tensor_yd(const FinDimHopf& h, const YDModule& a, const YDModule& b) {
  return YDModule{tensor_module(h.coalgebra, a.module, b.module),
                  tensor_comodule(h.algebra, a.comodule, b.comodule)};
}

VerificationReport check_module(const FinDimAlgebra& a, const ModuleRep& v) {
  VerificationReport rep;
  const auto& f = a.field;
  const LinearMap iv = LinearMap::identity(f, v.dim), ia = LinearMap::identity(f, a.dim);
  record_equal(rep, "module-associativity", v.action * kron(a.mult, iv),
               v.action * kron(ia, v.action), {a.dim, a.dim, v.dim});
  record_equal(rep, "module-unit", v.action * kron(a.unit_map(), iv), iv, {v.dim});
  return rep;
}

VerificationReport check_comodule(const FinDimCoalgebra& c, const ComoduleRep& v) {
  VerificationReport rep;
  const auto& f = c.field;
  const LinearMap iv = LinearMap::identity(f, v.dim), ic = LinearMap::identity(f, c.dim);
  record_equal(rep, "comodule-coassociativity", kron(c.comult, iv) * v.coaction,
               kron(ic, v.coaction) * v.coaction, {v.dim});
  record_equal(rep, "comodule-counit", kron(c.counit, iv) * v.coaction, iv, {v.dim});
  return rep;
}

VerificationReport check_comodule_algebra(const FinDimHopf& h, const FinDimAlgebra& k,
                                          const LinearMap& coaction) {
  ComoduleRep c(k.field, h.dim(), k.dim);
  c.coaction = coaction;
  VerificationReport rep = check_comodule(h.coalgebra, c);
  LinearMap lhs(k.field, h.dim() * k.dim, k.dim * k.dim), rhs = lhs;
  for (std::size_t i = 0; i < k.dim; ++i)
    for (std::size_t j = 0; j < k.dim; ++j) {
      lhs.set_column(i * k.dim + j, coaction.apply(k.product(i, j)));
      rhs.set_column(i * k.dim + j,
                     tensor_product(h.algebra, k, coaction.column(i), coaction.column(j)));
    }
  record_equal(rep, "coaction-multiplicative", lhs, rhs, {k.dim, k.dim});
  SparseVec one_one;
  for (const auto& [a, x] : h.algebra.unit)
    for (const auto& [b, y] : k.unit) one_one.emplace_back(a * k.dim + b, x * y);
  sparse_normalize(one_one);
  record_vec(rep, "coaction-unit", coaction.apply(k.unit), one_one);
  return rep;
}

VerificationReport check_yd(const FinDimHopf& h, const YDModule& v) {
  VerificationReport rep = check_module(h.algebra, v.module);
  rep.merge(check_comodule(h.coalgebra, v.comodule));
  const auto& f = h.field();
  const std::size_t n = h.dim(), d = v.dim();
  const LinearMap in = LinearMap::identity(f, n), iv = LinearMap::identity(f, d);
  const LinearMap lhs = v.comodule.coaction * v.module.action;
  const LinearMap m3 = h.algebra.mult * kron(h.algebra.mult, in);
  const LinearMap rhs = kron(m3, v.module.action) * kron({&in, &in, &h.antipode, &in, &iv}) *
                        permute_factors(f, {n, n, n, n, d}, {0, 3, 2, 1, 4}) *
                        kron(h.coalgebra.comult2(), v.comodule.coaction);
  record_equal(rep, "yd-compatibility", lhs, rhs, {n, d});
  return rep;
}

bool is_module_map(const ModuleRep& v, const ModuleRep& w, const LinearMap& f) {
  return f * v.action == w.action * kron(LinearMap::identity(f.field(), v.host_dim), f);
}

bool is_comodule_map(const ComoduleRep& v, const ComoduleRep& w, const LinearMap& f) {
  return w.coaction * f == kron(LinearMap::identity(f.field(), v.host_dim), f) * v.coaction;
}

std::vector<LinearMap> module_hom_basis(const ModuleRep& v, const ModuleRep& w) {
  const auto& f = v.field;
  const std::size_t dv = v.dim, dw = w.dim;
  SparseEliminator elim(f, dw * dv);
  for (std::size_t i = 0; i < v.host_dim; ++i) {
    const Matrix a = v.of(i).to_matrix(), b = w.of(i).to_matrix();
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) {
        SparseRow row;
        for (std::size_t s = 0; s < dv; ++s)
          if (!a(s, c).is_zero()) row.emplace_back(r * dv + s, a(s, c));
        for (std::size_t s = 0; s < dw; ++s)
          if (!b(r, s).is_zero()) row.emplace_back(s * dv + c, -b(r, s));
        elim.add_row(std::move(row));
      }
  }
  std::vector<LinearMap> out;
  const SubspaceBasis ker = elim.kernel();
  for (const auto& vec : ker.vectors()) {
    LinearMap m(f, dw, dv);
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c)
        if (!vec[r * dv + c].is_zero()) m.add(r, c, vec[r * dv + c]);
    out.push_back(std::move(m));
  }
  return out;
}

LinearMap braiding(const RMatrix& r, const ModuleRep& v, const ModuleRep& w) {
  const auto& f = r.field();
  // sigma(v (x) w) = sum r_ab (e_b.w) (x) (e_a.v)
  LinearMap acc(f, w.dim * v.dim, w.dim * v.dim);
  for (const auto& [ab, s] : r.element)
    acc = acc + kron(w.of(ab % r.host_dim()), v.of(ab / r.host_dim())).scaled(s);
  return acc * LinearMap::flip(f, v.dim, w.dim);
}

LinearMap braiding_inverse(const RMatrix& r, const ModuleRep& v, const ModuleRep& w) {
  const auto& f = r.field();
  LinearMap acc(f, v.dim * w.dim, v.dim * w.dim);
  for (const auto& [ab, s] : r.inverse)
    acc = acc + kron(v.of(ab / r.host_dim()), w.of(ab % r.host_dim())).scaled(s);
  return acc * LinearMap::flip(f, w.dim, v.dim);
}

VerificationReport check_hexagons(const RMatrix& r, const ModuleRep& u, const ModuleRep& v,
                                  const ModuleRep& w) {
  VerificationReport rep;
  const auto& f = r.field();
  const auto& c = r.host->coalgebra;
  const LinearMap iu = LinearMap::identity(f, u.dim), iv = LinearMap::identity(f, v.dim),
                  iw = LinearMap::identity(f, w.dim);
  const ModuleRep vw = tensor_module(c, v, w), uv = tensor_module(c, u, v);
  record_equal(rep, "hexagon-left", braiding(r, u, vw),
               kron(iv, braiding(r, u, w)) * kron(braiding(r, u, v), iw), {u.dim, v.dim, w.dim});
  record_equal(rep, "hexagon-right", braiding(r, uv, w),
               kron(braiding(r, u, w), iv) * kron(iu, braiding(r, v, w)), {u.dim, v.dim, w.dim});
  return rep;
}

LinearMap yd_braiding(const YDModule& a, const YDModule& b) {
  const auto& f = a.module.field;
  const std::size_t n = a.module.host_dim;
  const LinearMap ia = LinearMap::identity(f, a.dim()), ib = LinearMap::identity(f, b.dim());
  return kron(b.module.action, ia) * permute_factors(f, {n, a.dim(), b.dim()}, {0, 2, 1}) *
         kron(a.comodule.coaction, ib);
}

DualModule dual_module(const FinDimHopf& h, const ModuleRep& v) {
  const auto& f = v.field;
  const std::size_t d = v.dim;
  ModuleRep dual(f, h.dim(), d);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Matrix st = v.of(h.antipode.column(i)).to_matrix();
    for (std::size_t j = 0; j < d; ++j) {
      SparseVec col;
      for (std::size_t k = 0; k < d; ++k)
        if (!st(j, k).is_zero()) col.emplace_back(k, st(j, k));
      dual.action.set_column(i * d + j, std::move(col));
    }
  }
  LinearMap ev(f, 1, d * d), coev(f, d * d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    ev.add(0, i * d + i, Scalar::one(f));
    coev.add(i * d + i, 0, Scalar::one(f));
  }
  return DualModule{std::move(dual), std::move(ev), std::move(coev)};
}

VerificationReport check_rigidity(const FinDimHopf& h, const ModuleRep& v, const DualModule& d) {
  VerificationReport rep = check_module(h.algebra, d.module);
  const auto& f = v.field;
  const LinearMap iv = LinearMap::identity(f, v.dim), id = LinearMap::identity(f, v.dim);
  record_equal(rep, "zigzag-object", kron(iv, d.ev) * kron(d.coev, iv), iv, {v.dim});
  record_equal(rep, "zigzag-dual", kron(d.ev, id) * kron(id, d.coev), id, {v.dim});
  const ModuleRep triv = trivial_module(h.coalgebra);
  if (is_module_map(tensor_module(h.coalgebra, d.module, v), triv, d.ev)) rep.pass("ev-linear");
  else rep.fail("ev-linear", json::object());
  if (is_module_map(triv, tensor_module(h.coalgebra, v, d.module), d.coev)) rep.pass("coev-linear");
  else rep.fail("coev-linear", json::object());
  return rep;
}

}  // namespace hopfad

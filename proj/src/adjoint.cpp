#include "hopfad/adjoint.hpp"

#include "adjoint_internal.hpp"

#include <algorithm>
#include <sstream>

namespace hopfad {

ConditionSet ConditionSet::parse(const std::string& s) {
  ConditionSet c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "ad1") c.ad1 = true;
    else if (tok == "ad2") c.ad2 = true;
    else if (tok == "ad3") c.ad3 = true;
    else if (!tok.empty()) throw std::invalid_argument("unknown condition '" + tok + "'");
  }
  return c;
}

std::string ConditionSet::str() const {
  std::string out;
  auto put = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  put(ad1, "ad1");
  put(ad2, "ad2");
  put(ad3, "ad3");
  return out;
}

Coefficient Coefficient::of(const ComoduleAlgebra& k) {
  return Coefficient{k.dim(), k.algebra.mult, k.algebra.mult, k.coaction};
}

RMatrix AdjointProblem::effective_r() const { return rbar ? hopfad::rbar(rmatrix) : rmatrix; }

std::size_t AdjointProblem::k_unit() const {
  const SparseVec& u = comod_alg.algebra.unit;
  if (u.size() != 1 || !u.front().second.is_one())
    throw std::invalid_argument("the unit of K must be a basis vector");
  return u.front().first;
}

AdjointProblem make_problem(std::shared_ptr<const TaftSetting> s, ComoduleAlgebra k, ConditionSet c) {
  RMatrix r = s->r;
  Coefficient coeff = Coefficient::of(k);
  return AdjointProblem{std::move(s), std::move(r), std::move(k), std::move(coeff), c};
}

Matrix ConditionSystem::to_matrix(const FieldContext& f) const {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) += v;
  return m;
}

namespace detail {

std::vector<std::vector<SparseRow>> right_rows(const AdjointProblem& p) {
  const std::size_t D = p.k_dim(), DP = p.p_dim();
  std::vector<std::vector<SparseRow>> rr(D, std::vector<SparseRow>(DP));
  for (std::size_t q = 0; q < DP; ++q)
    for (std::size_t m = 0; m < D; ++m)
      for (const auto& [pp, v] : p.coeff.right.column(q * D + m)) rr[m][pp].emplace_back(q, v);
  return rr;
}

SparseVec flatten_sparse(const LinearMap& alpha) {
  SparseVec out;
  const std::size_t DP = alpha.rows();
  for (std::size_t c = 0; c < alpha.cols(); ++c)
    for (const auto& [pp, v] : alpha.column(c)) out.emplace_back(c * DP + pp, v);
  return out;
}

SparseVec apply_on_k(const LinearMap& alpha, const SparseVec& h, std::size_t k, std::size_t k_dim) {
  SparseVec acc;
  for (const auto& [y, c] : h)
    for (const auto& [pp, v] : alpha.column(y * k_dim + k)) acc.emplace_back(pp, c * v);
  sparse_normalize(acc);
  return acc;
}

SparseVec right_act(const AdjointProblem& p, const SparseVec& v, std::size_t k) {
  SparseVec acc;
  const std::size_t D = p.k_dim();
  for (const auto& [q, c] : v)
    for (const auto& [pp, w] : p.coeff.right.column(q * D + k)) acc.emplace_back(pp, c * w);
  sparse_normalize(acc);
  return acc;
}

SparseVec left_act(const AdjointProblem& p, const SparseVec& k, const SparseVec& v) {
  SparseVec acc;
  const std::size_t DP = p.p_dim();
  for (const auto& [a, c] : k)
    for (const auto& [q, d] : v)
      for (const auto& [pp, w] : p.coeff.left.column(a * DP + q)) acc.emplace_back(pp, c * d * w);
  sparse_normalize(acc);
  return acc;
}

SparseVec ad2_source_grading(const AdjointProblem& p, std::size_t k) {
  const auto& f = p.field();
  if (p.ad2_literal) return {{k, Scalar::one(f)}};
  const std::size_t D = p.k_dim();
  SparseVec out;
  for (const auto& [yk, v] : p.comod_alg.coaction.column(k))
    for (const auto& [t, c] : p.setting->pi.column(yk / D)) out.emplace_back(t * D + yk % D, v * c);
  sparse_normalize(out);
  return out;
}

LinearMap pi_coaction(const AdjointProblem& p) {
  const LinearMap id = LinearMap::identity(p.field(), p.p_dim());
  return kron(p.setting->pi, id) * p.coeff.coaction;
}

SparseCoords::SparseCoords(const SubspaceBasis& b) : pivots(b.pivots()) {
  basis.reserve(b.dim());
  for (const auto& v : b.vectors()) basis.push_back(to_sparse(v));
}

std::optional<SparseVec> SparseCoords::coords(const SparseVec& v) const {
  SparseVec c, rest = v;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = std::lower_bound(v.begin(), v.end(), pivots[i],
                               [](const auto& e, std::size_t k) { return e.first < k; });
    if (it == v.end() || it->first != pivots[i]) continue;
    c.emplace_back(i, it->second);
    rest = sparse_axpy(rest, -it->second, basis[i]);
  }
  if (!rest.empty()) return std::nullopt;
  return c;
}

}  // namespace detail

using namespace detail;

ConditionSystem condition_system(const AdjointProblem& p) {
  if (p.reduced && !p.conditions.ad3)
    throw std::invalid_argument("the reduced parametrization presupposes Ad3");
  const auto& f = p.field();
  const std::size_t N = p.hopf_dim(), D = p.k_dim(), DP = p.p_dim(), u = p.k_unit();
  const auto rr = right_rows(p);

  ConditionSystem sys;
  sys.reduced = p.reduced;
  sys.cols = p.reduced ? N * DP : p.ambient_dim();

  auto emit = [&](SparseRow& row, const Scalar& c, std::size_t y, std::size_t m, std::size_t pp) {
    if (!p.reduced) {
      row.emplace_back(p.var(y, m, pp), c);
      return;
    }
    for (const auto& [q, v] : rr[m][pp]) row.emplace_back(y * DP + q, c * v);
  };
  auto push = [&](std::vector<SparseRow>& rows) {
    for (auto& row : rows) {
      sparse_normalize(row);
      sys.rows.push_back(std::move(row));
    }
    rows.clear();
  };
  const Scalar one = Scalar::one(f);

  if (p.conditions.ad3 && !p.reduced) {
    const std::size_t before = sys.rows.size();
    std::vector<SparseRow> rows;
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t k = 0; k < D; ++k)
        for (std::size_t pp = 0; pp < DP; ++pp) {
          SparseRow row;
          emit(row, one, x, k, pp);
          for (const auto& [q, v] : rr[k][pp]) emit(row, -v, x, u, q);
          rows.push_back(std::move(row));
        }
    push(rows);
    sys.blocks.emplace_back("ad3", sys.rows.size() - before);
  }

  if (p.conditions.ad1) {
    const std::size_t before = sys.rows.size();
    std::vector<SparseVec> ks;
    if (p.generators_only) ks = p.comod_alg.generators;
    else
      for (std::size_t k = 0; k < D; ++k) ks.push_back(sparse_unit(f, k));
    const auto& H = p.hopf().algebra;
    const auto& K = p.comod_alg.algebra;
    for (const auto& kv : ks) {
      const SparseVec lam = p.comod_alg.coaction.apply(kv);
      // Lk[q] = k . e_q
      std::vector<SparseVec> lk(DP);
      for (std::size_t q = 0; q < DP; ++q) lk[q] = left_act(p, kv, sparse_unit(f, q));
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t l = 0; l < D; ++l) {
          const SparseVec moved = tensor_product(H, K, lam, sparse_unit(f, x * D + l));
          std::vector<SparseRow> rows(DP);
          for (const auto& [c, v] : moved)
            for (std::size_t pp = 0; pp < DP; ++pp) emit(rows[pp], v, c / D, c % D, pp);
          for (std::size_t q = 0; q < DP; ++q)
            for (const auto& [pp, v] : lk[q]) emit(rows[pp], -v, x, l, q);
          push(rows);
        }
    }
    sys.blocks.emplace_back("ad1", sys.rows.size() - before);
  }

  if (p.conditions.ad2) {
    const std::size_t before = sys.rows.size();
    const std::size_t n = p.base().dim();
    const RMatrix r = p.effective_r();
    const LinearMap c_map = pi_coaction(p);
    const auto& H = p.hopf().algebra;
    const auto& T = p.base().algebra;
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t k = 0; k < D; ++k) {
        std::vector<SparseRow> rows(n * DP);
        for (const auto& [ab, rc] : r.element) {
          const std::size_t a = ab / n, b = ab % n;
          const SparseVec y = H.product(p.setting->iota_t.column(a), sparse_unit(f, x));
          for (const auto& [tk, gv] : ad2_source_grading(p, k))
            for (const auto& [t, tv] : T.product(b, tk / D))
              for (const auto& [yi, yv] : y)
                for (std::size_t pp = 0; pp < DP; ++pp)
                  emit(rows[t * DP + pp], rc * gv * tv * yv, yi, tk % D, pp);
        }
        for (std::size_t q = 0; q < DP; ++q)
          for (const auto& [tp, v] : c_map.column(q)) emit(rows[tp], -v, x, k, q);
        push(rows);
      }
    sys.blocks.emplace_back("ad2", sys.rows.size() - before);
  }
  return sys;
}

SubspaceBasis solve_conditions(const AdjointProblem& p) {
  const auto& f = p.field();
  const std::size_t N = p.hopf_dim(), D = p.k_dim(), DP = p.p_dim();
  const ConditionSystem sys = condition_system(p);
  std::vector<Vector> natural;

  if (!p.reduced) {
    // Unknowns alpha(x (x) 1) go last, so Ad3 rows become pivots on the
    // remaining ones and the other blocks collapse onto alpha(x (x) 1).
    const std::size_t u = p.k_unit(), total = p.ambient_dim();
    std::vector<std::size_t> to_internal(total);
    std::size_t next = 0;
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t k = 0; k < D; ++k)
        if (k != u)
          for (std::size_t pp = 0; pp < DP; ++pp) to_internal[p.var(x, k, pp)] = next++;
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t pp = 0; pp < DP; ++pp) to_internal[p.var(x, u, pp)] = next++;
    SparseEliminator elim(f, total);
    for (const auto& row : sys.rows) {
      SparseRow mapped;
      mapped.reserve(row.size());
      for (const auto& [c, v] : row) mapped.emplace_back(to_internal[c], v);
      elim.add_row(std::move(mapped));
    }
    const SubspaceBasis ker = elim.kernel();
    for (const auto& v : ker.vectors()) {
      Vector w(total, Scalar::zero(f));
      for (std::size_t c = 0; c < total; ++c) w[c] = v[to_internal[c]];
      natural.push_back(std::move(w));
    }
  } else {
    SparseEliminator elim(f, sys.cols);
    for (const auto& row : sys.rows) elim.add_row(row);
    const SubspaceBasis ker = elim.kernel();
    const auto rr = right_rows(p);
    for (const auto& v : ker.vectors()) {
      Vector w(p.ambient_dim(), Scalar::zero(f));
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t m = 0; m < D; ++m)
          for (std::size_t pp = 0; pp < DP; ++pp)
            for (const auto& [q, c] : rr[m][pp]) w[p.var(y, m, pp)] += c * v[y * DP + q];
      natural.push_back(std::move(w));
    }
  }
  return SubspaceBasis::span(f, p.ambient_dim(), natural);
}

LinearMap unflatten(const AdjointProblem& p, const Vector& v) {
  const std::size_t DP = p.p_dim(), cols = p.hopf_dim() * p.k_dim();
  if (v.size() != cols * DP) throw std::invalid_argument("unflatten: length mismatch");
  LinearMap out(p.field(), DP, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SparseVec col;
    for (std::size_t pp = 0; pp < DP; ++pp)
      if (!v[c * DP + pp].is_zero()) col.emplace_back(pp, v[c * DP + pp]);
    out.set_column(c, std::move(col));
  }
  return out;
}

Vector flatten(const AdjointProblem& p, const LinearMap& alpha) {
  return to_dense(p.field(), p.ambient_dim(), flatten_sparse(alpha));
}

std::optional<json> condition_residual(const AdjointProblem& p, const LinearMap& alpha) {
  const auto& f = p.field();
  const std::size_t N = p.hopf_dim(), D = p.k_dim(), DP = p.p_dim(), u = p.k_unit();
  const Scalar minus = -Scalar::one(f);
  auto witness = [](const char* cond, std::vector<std::size_t> idx, const SparseVec& res) {
    return json{{"condition", cond}, {"indices", idx}, {"residual", sparse_to_json(res)}};
  };

  if (p.conditions.ad1) {
    const auto& H = p.hopf().algebra;
    const auto& K = p.comod_alg.algebra;
    for (std::size_t k = 0; k < D; ++k) {
      const SparseVec lam = p.comod_alg.coaction.column(k);
      const SparseVec kv = sparse_unit(f, k);
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t l = 0; l < D; ++l) {
          const SparseVec lhs = alpha.apply(tensor_product(H, K, lam, sparse_unit(f, x * D + l)));
          const SparseVec rhs = left_act(p, kv, alpha.column(x * D + l));
          const SparseVec res = sparse_axpy(lhs, minus, rhs);
          if (!res.empty()) return witness("ad1", {k, x, l}, res);
        }
    }
  }
  if (p.conditions.ad2) {
    const std::size_t n = p.base().dim();
    const RMatrix r = p.effective_r();
    const LinearMap c_map = pi_coaction(p);
    const auto& H = p.hopf().algebra;
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t k = 0; k < D; ++k) {
        SparseVec lhs;
        for (const auto& [ab, rc] : r.element) {
          const std::size_t a = ab / n, b = ab % n;
          const SparseVec y = H.product(p.setting->iota_t.column(a), sparse_unit(f, x));
          for (const auto& [tk, gv] : ad2_source_grading(p, k))
            for (const auto& [t, tv] : p.base().algebra.product(b, tk / D))
              for (const auto& [pp, v] : apply_on_k(alpha, y, tk % D, D))
                lhs.emplace_back(t * DP + pp, rc * gv * tv * v);
        }
        sparse_normalize(lhs);
        const SparseVec res = sparse_axpy(lhs, minus, c_map.apply(alpha.column(x * D + k)));
        if (!res.empty()) return witness("ad2", {x, k}, res);
      }
  }
  if (p.conditions.ad3) {
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t k = 0; k < D; ++k) {
        const SparseVec rhs = right_act(p, alpha.column(x * D + u), k);
        const SparseVec res = sparse_axpy(alpha.column(x * D + k), minus, rhs);
        if (!res.empty()) return witness("ad3", {x, k}, res);
      }
  }
  return std::nullopt;
}

LinearMap AdjointAlgebra::element_of(const SparseVec& coords) const {
  LinearMap out(problem.field(), problem.p_dim(), problem.hopf_dim() * problem.k_dim());
  for (const auto& [i, c] : coords) out = out + elements[i].scaled(c);
  return out;
}

namespace detail {

// (h.alpha)(x (x) k) = alpha(xh (x) k)
LinearMap act_on(const AdjointProblem& p, const LinearMap& alpha, std::size_t h) {
  const auto& H = p.hopf().algebra;
  const std::size_t N = p.hopf_dim(), D = p.k_dim();
  LinearMap out(p.field(), p.p_dim(), N * D);
  for (std::size_t x = 0; x < N; ++x) {
    const SparseVec& xh = H.product(x, h);
    for (std::size_t k = 0; k < D; ++k) out.set_column(x * D + k, apply_on_k(alpha, xh, k, D));
  }
  return out;
}

// (alpha.beta)(x (x) k) = alpha(x_1 (x) beta(x_2 (x) k))
LinearMap convolve(const AdjointProblem& p, const LinearMap& alpha, const LinearMap& beta) {
  const auto& comult = p.hopf().coalgebra.comult;
  const std::size_t N = p.hopf_dim(), D = p.k_dim();
  LinearMap out(p.field(), p.p_dim(), N * D);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t k = 0; k < D; ++k) {
      SparseVec acc;
      for (const auto& [x12, c] : comult.column(x)) {
        const std::size_t x1 = x12 / N, x2 = x12 % N;
        for (const auto& [kk, v] : beta.column(x2 * D + k))
          for (const auto& [pp, w] : alpha.column(x1 * D + kk)) acc.emplace_back(pp, c * v * w);
      }
      sparse_normalize(acc);
      out.set_column(x * D + k, std::move(acc));
    }
  return out;
}

// beta_r with coaction(alpha) = sum_r e_r (x) beta_r
std::vector<LinearMap> coact_on(const AdjointProblem& p, const LinearMap& alpha) {
  const auto& f = p.field();
  const auto& hopf = p.hopf();
  const std::size_t N = p.hopf_dim(), D = p.k_dim(), DP = p.p_dim(), u = p.k_unit();
  const LinearMap delta2 = hopf.coalgebra.comult2();
  std::vector<std::vector<SparseVec>> acc(N, std::vector<SparseVec>(N));
  for (std::size_t x = 0; x < N; ++x)
    for (const auto& [idx, c] : delta2.column(x)) {
      const std::size_t x1 = idx / (N * N), x2 = (idx / N) % N, x3 = idx % N;
      const SparseVec lam = p.coeff.coaction.apply(alpha.column(x2 * D + u));
      if (lam.empty()) continue;
      const SparseVec& s1 = hopf.antipode.column(x1);
      for (const auto& [ab, lv] : lam) {
        const std::size_t a = ab / DP, b = ab % DP;
        const SparseVec left =
            hopf.algebra.product(hopf.algebra.product(s1, sparse_unit(f, a)), sparse_unit(f, x3));
        for (const auto& [r, w] : left) acc[r][x].emplace_back(b, c * lv * w);
      }
    }
  std::vector<LinearMap> out;
  out.reserve(N);
  for (std::size_t r = 0; r < N; ++r) {
    LinearMap beta(f, DP, N * D);
    for (std::size_t x = 0; x < N; ++x) {
      sparse_normalize(acc[r][x]);
      for (std::size_t k = 0; k < D; ++k) beta.set_column(x * D + k, right_act(p, acc[r][x], k));
    }
    out.push_back(std::move(beta));
  }
  return out;
}

}  // namespace detail

AdjointAlgebra solve_adjoint(const AdjointProblem& p) {
  if (p.p_dim() != p.k_dim())
    throw std::invalid_argument("solve_adjoint needs the coefficient P = K");
  const auto& f = p.field();
  const std::size_t N = p.hopf_dim(), D = p.k_dim();
  SubspaceBasis basis = solve_conditions(p);
  const std::size_t dim = basis.dim();
  std::vector<LinearMap> elements;
  for (const auto& v : basis.vectors()) elements.push_back(unflatten(p, v));
  const SparseCoords sc(basis);

  auto express = [&](const LinearMap& m, const std::string& what, json where) {
    auto c = sc.coords(flatten_sparse(m));
    if (!c) {
      where["structure"] = what;
      throw ClosureFailure(what + " leaves the solution space", where);
    }
    return *c;
  };

  FinDimAlgebra alg(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      alg.mult.set_column(i * dim + j, express(convolve(p, elements[i], elements[j]), "product",
                                                {{"pair", {i, j}}}));
  LinearMap unit(f, p.p_dim(), N * D);
  for (std::size_t x = 0; x < N; ++x) {
    const Scalar e = p.hopf().coalgebra.counit_of(x);
    if (e.is_zero()) continue;
    for (std::size_t k = 0; k < D; ++k) unit.add(k, x * D + k, e);
  }
  alg.unit = express(unit, "unit", json::object());

  ModuleRep action(f, N, dim);
  for (std::size_t h = 0; h < N; ++h)
    for (std::size_t j = 0; j < dim; ++j)
      action.action.set_column(h * dim + j,
                               express(act_on(p, elements[j], h), "action", {{"host", h}, {"element", j}}));

  ComoduleRep coaction(f, N, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto betas = coact_on(p, elements[j]);
    SparseVec col;
    for (std::size_t r = 0; r < N; ++r)
      for (const auto& [i, c] : express(betas[r], "coaction", {{"host", r}, {"element", j}}))
        col.emplace_back(r * dim + i, c);
    coaction.coaction.set_column(j, std::move(col));
  }

  return AdjointAlgebra{p, std::move(basis), std::move(elements), std::move(alg), std::move(action),
                        std::move(coaction)};
}

}  // namespace hopfad

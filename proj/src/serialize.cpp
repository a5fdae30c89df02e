#include "hopfad/serialize.hpp"

namespace hopfad {

namespace {

json dense(const FieldContext& f, std::size_t n, const SparseVec& v) { return vector_to_json(to_dense(f, n, v)); }

json map_columns(const LinearMap& m) {
  json out = json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(dense(m.field(), m.rows(), m.column(c)));
  return out;
}

SparseVec sparse_of(const FieldContext& f, const json& j) { return to_sparse(vector_from_json(f, j)); }

}  // namespace

json document_header(const FieldContext& f, const std::string& basis_convention) {
  return {{"schema_version", kSchemaVersion},
          {"field", field_to_json(*f)},
          {"basis_convention", basis_convention}};
}

json algebra_to_json(const FinDimAlgebra& a) {
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim; ++j) row.push_back(dense(a.field, a.dim, a.product(i, j)));
    mult.push_back(std::move(row));
  }
  return {{"dim", a.dim}, {"mult", std::move(mult)}, {"unit", dense(a.field, a.dim, a.unit)}};
}

json hopf_to_json(const FinDimHopf& h) {
  json out = algebra_to_json(h.algebra);
  const std::size_t d = h.dim();
  const auto& f = h.field();
  json comult = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector col = to_dense(f, d * d, h.coalgebra.comult.column(i));
    json rows = json::array();
    for (std::size_t j = 0; j < d; ++j)
      rows.push_back(vector_to_json(Vector(col.begin() + j * d, col.begin() + (j + 1) * d)));
    comult.push_back(std::move(rows));
  }
  json counit = json::array();
  for (std::size_t i = 0; i < d; ++i) counit.push_back(scalar_to_json(h.coalgebra.counit_of(i)));
  out["comult"] = std::move(comult);
  out["counit"] = std::move(counit);
  out["antipode"] = linear_map_to_json(h.antipode);
  return out;
}

FinDimHopf hopf_from_json(const FieldContext& f, const json& j) {
  const auto d = j.at("dim").get<std::size_t>();
  FinDimAlgebra a(f, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) a.mult.set_column(i * d + k, sparse_of(f, j.at("mult").at(i).at(k)));
  a.unit = sparse_of(f, j.at("unit"));
  FinDimCoalgebra c(f, d);
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec col;
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [k, s] : sparse_of(f, j.at("comult").at(i).at(r))) col.emplace_back(r * d + k, s);
    c.comult.set_column(i, std::move(col));
    const Scalar e = scalar_from_json(f, j.at("counit").at(i));
    if (!e.is_zero()) c.counit.add(0, i, e);
  }
  return FinDimHopf(std::move(a), std::move(c), linear_map_from_json(f, j.at("antipode")));
}

json problem_to_json(const AdjointProblem& p) {
  json k = {{"name", p.comod_alg.name}, {"dim", p.k_dim()}};
  if (p.comod_alg.k_params) {
    const auto& kp = *p.comod_alg.k_params;
    k["d"] = kp.d;
    k["m"] = kp.m;
    k["xi"] = rational_to_json(kp.xi);
  }
  return {{"n", p.setting->n},
          {"K", std::move(k)},
          {"conditions", p.conditions.str()},
          {"reduced", p.reduced},
          {"rbar", p.rbar},
          {"generators_only", p.generators_only},
          {"ad2_literal", p.ad2_literal}};
}

json adjoint_to_json(const AdjointAlgebra& a) {
  const auto& f = a.problem.field();
  const std::size_t d = a.dim();
  json basis = json::array();
  for (const auto& e : a.elements) basis.push_back(linear_map_to_json(e));
  json product = json::array();
  for (std::size_t i = 0; i < d; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d; ++j) row.push_back(dense(f, d, a.algebra.product(i, j)));
    product.push_back(std::move(row));
  }
  json action = json::array();
  for (std::size_t h = 0; h < a.action.host_dim; ++h) action.push_back(linear_map_to_json(a.action.of(h)));
  return {{"problem", problem_to_json(a.problem)},
          {"dim", d},
          {"basis", std::move(basis)},
          {"product", std::move(product)},
          {"unit", dense(f, d, a.algebra.unit)},
          {"action", std::move(action)},
          {"coaction", map_columns(a.coaction.coaction)}};
}

json h_adjoint_to_json(const HAdjoint& a) {
  json out = algebra_to_json(a.carrier);
  out["rho_ad"] = linear_map_to_json(a.rho_ad);
  json action = json::array();
  for (std::size_t h = 0; h < a.action.host_dim; ++h) action.push_back(linear_map_to_json(a.action.of(h)));
  out["action"] = std::move(action);
  out["coaction"] = map_columns(a.coaction.coaction);
  json gammas = json::object();
  for (const auto& [name, g] : a.half_braidings) gammas[name] = linear_map_to_json(g);
  out["half_braidings"] = std::move(gammas);
  out["literal_inverse"] = a.literal_inverse;
  return out;
}

std::string emit_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hopfad

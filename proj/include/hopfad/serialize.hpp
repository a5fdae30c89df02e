#pragma once

#include "hopfad/braided_adjoint.hpp"

namespace hopfad {

inline constexpr int kSchemaVersion = 1;

inline constexpr const char* kTaftBasis =
    "H#T: x^a g^b at index a*n+b; tensor index i*dim_B+j; maps column-major by source basis";
inline constexpr const char* kKBasis = "K(d,xi): h^a w^b at index a*n+b";

/// {"schema_version", "field", "basis_convention"}
json document_header(const FieldContext& f, const std::string& basis_convention);

/// {dim, mult: [[[Scalar...]...]...], unit: [Scalar...]}; mult[i][j] = e_i e_j.
json algebra_to_json(const FinDimAlgebra& a);
/// Adds comult[i][j][k] = coefficient of e_j (x) e_k in Delta(e_i), counit,
/// antipode (matrix).
json hopf_to_json(const FinDimHopf& h);
FinDimHopf hopf_from_json(const FieldContext& f, const json& j);

json problem_to_json(const AdjointProblem& p);
/// {problem, dim, basis, product, unit, action, coaction}; action[h] is the
/// dim x dim matrix of e_h.
json adjoint_to_json(const AdjointAlgebra& a);
/// {dim, mult, unit, rho_ad, action, coaction, half_braidings}
json h_adjoint_to_json(const HAdjoint& a);

/// Sorted keys, two-space indent, trailing newline.
std::string emit_json(const json& j);

}  // namespace hopfad

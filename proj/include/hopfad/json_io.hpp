#pragma once

#include "hopfad/sparse.hpp"
#include "hopfad/report.hpp"

namespace hopfad {

/// Rationals are strings "num/den" (den omitted when 1); scalars are
/// arrays of phi(n) such strings; matrices are {rows, cols, entries}.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldContext& f, const json& j);

json vector_to_json(const Vector& v);
Vector vector_from_json(const FieldContext& f, const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldContext& f, const json& j);

/// [[index, scalar], ...]
json sparse_to_json(const SparseVec& v);
SparseVec sparse_from_json(const FieldContext& f, const json& j);

json linear_map_to_json(const LinearMap& m);
LinearMap linear_map_from_json(const FieldContext& f, const json& j);

/// {"conductor": n, "cyclotomic_poly": [...]}
json field_to_json(const CyclotomicField& f);
FieldContext field_from_json(const json& j);

}  // namespace hopfad

#include "hopfad/json_io.hpp"

#include <stdexcept>

namespace hopfad {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json scalar_to_json(const Scalar& s) {
  json arr = json::array();
  for (const auto& c : s.coords()) arr.push_back(rational_to_json(c));
  return arr;
}

Scalar scalar_from_json(const FieldContext& f, const json& j) {
  if (!j.is_array() || j.size() != f->degree())
    throw std::invalid_argument("scalar must be an array of " + std::to_string(f->degree()) + " rationals");
  std::vector<Rational> coords;
  coords.reserve(j.size());
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Scalar(f, std::move(coords));
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

Vector vector_from_json(const FieldContext& f, const json& j) {
  Vector v;
  v.reserve(j.size());
  for (const auto& s : j) v.push_back(scalar_from_json(f, s));
  return v;
}

json matrix_to_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", vector_to_json(m.entries())}};
}

Matrix matrix_from_json(const FieldContext& f, const json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(f, entries[r * cols + c]);
  return m;
}

json sparse_to_json(const SparseVec& v) {
  json arr = json::array();
  for (const auto& [i, s] : v) arr.push_back(json::array({i, scalar_to_json(s)}));
  return arr;
}

SparseVec sparse_from_json(const FieldContext& f, const json& j) {
  SparseVec v;
  for (const auto& e : j) v.emplace_back(e.at(0).get<std::size_t>(), scalar_from_json(f, e.at(1)));
  sparse_normalize(v);
  return v;
}

json linear_map_to_json(const LinearMap& m) { return matrix_to_json(m.to_matrix()); }

LinearMap linear_map_from_json(const FieldContext& f, const json& j) {
  return LinearMap::from_matrix(matrix_from_json(f, j));
}

json field_to_json(const CyclotomicField& f) {
  json poly = json::array();
  for (const auto& c : f.modulus()) poly.push_back(rational_to_json(c));
  return {{"conductor", f.conductor()}, {"cyclotomic_poly", poly}};
}

FieldContext field_from_json(const json& j) {
  FieldContext f = make_field(j.at("conductor").get<int>());
  if (j.contains("cyclotomic_poly") && field_to_json(*f) != j)
    throw std::invalid_argument("cyclotomic_poly does not match conductor");
  return f;
}

}  // namespace hopfad

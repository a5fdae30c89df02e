#pragma once

#include "hopfad/json_io.hpp"
#include "hopfad/sparse.hpp"

#include <string>

namespace hopfad {

/// Algebra by structure constants: mult is dim x dim^2 with column i*dim+j
/// holding e_i e_j.
struct FinDimAlgebra {
  FinDimAlgebra(const FieldContext& f, std::size_t d)
      : field(f), dim(d), mult(f, d, d * d) {}

  FieldContext field;
  std::size_t dim;
  LinearMap mult;
  SparseVec unit;

  const SparseVec& product(std::size_t i, std::size_t j) const { return mult.column(i * dim + j); }
  SparseVec product(const SparseVec& a, const SparseVec& b) const;
  LinearMap left_mult(const SparseVec& a) const;
  LinearMap right_mult(const SparseVec& a) const;
  LinearMap unit_map() const;  // dim x 1
};

/// Coalgebra: comult is dim^2 x dim, counit is 1 x dim.
struct FinDimCoalgebra {
  FinDimCoalgebra(const FieldContext& f, std::size_t d)
      : field(f), dim(d), comult(f, d * d, d), counit(f, 1, d) {}

  FieldContext field;
  std::size_t dim;
  LinearMap comult;
  LinearMap counit;

  Scalar counit_of(std::size_t i) const { return counit.entry(0, i); }
  Scalar counit_of(const SparseVec& v) const;
  /// (Delta (x) id) Delta, dim^3 x dim.
  LinearMap comult2() const;
};

struct FinDimHopf {
  FinDimHopf(FinDimAlgebra a, FinDimCoalgebra c, LinearMap s)
      : algebra(std::move(a)), coalgebra(std::move(c)), antipode(std::move(s)) {}

  FinDimAlgebra algebra;
  FinDimCoalgebra coalgebra;
  LinearMap antipode;

  std::size_t dim() const { return algebra.dim; }
  const FieldContext& field() const { return algebra.field; }
};

class NoAntipode : public std::runtime_error {
 public:
  NoAntipode() : std::runtime_error("convolution system for the antipode is inconsistent") {}
};

/// Product map of A (x) B: (a (x) b)(a' (x) b') = aa' (x) bb'.
LinearMap tensor_mult_map(const FinDimAlgebra& a, const FinDimAlgebra& b);
FinDimAlgebra tensor_algebra(const FinDimAlgebra& a, const FinDimAlgebra& b);
/// Product in A (x) B without building the structure constants.
SparseVec tensor_product(const FinDimAlgebra& a, const FinDimAlgebra& b, const SparseVec& u,
                         const SparseVec& v);

/// Convolution algebra on the dual basis; unit is the counit.
FinDimAlgebra dual_algebra(const FinDimCoalgebra& c);

VerificationReport check_algebra(const FinDimAlgebra& a);
VerificationReport check_coalgebra(const FinDimCoalgebra& c);
/// Includes the algebra and coalgebra checks.
VerificationReport check_bialgebra(const FinDimAlgebra& a, const FinDimCoalgebra& c);
VerificationReport check_antipode(const FinDimHopf& h);
VerificationReport check_hopf(const FinDimHopf& h);

/// The unique S with m(S (x) id)Delta = u eps. Throws NoAntipode when the
/// system has no solution, std::logic_error when it has several.
LinearMap solve_antipode(const FinDimAlgebra& a, const FinDimCoalgebra& c);
FinDimHopf make_hopf(FinDimAlgebra a, FinDimCoalgebra c);

/// Mixed-radix digits of a kron index, most significant first.
std::vector<std::size_t> split_index(std::size_t index, const std::vector<std::size_t>& dims);

/// Shared shape of failure witnesses: {"indices": [...], "residual": ...}.
json map_witness(const LinearMap& lhs, const LinearMap& rhs, std::size_t column,
                 const std::vector<std::size_t>& dims);

/// Records pass when lhs == rhs, otherwise a fail with the first
/// differing column decoded against dims.
void record_equal(VerificationReport& r, const std::string& claim_id, const LinearMap& lhs,
                  const LinearMap& rhs, const std::vector<std::size_t>& dims);

}  // namespace hopfad

#pragma once

#include "hopfad/adjoint.hpp"

namespace hopfad::detail {

/// rr[m][p] lists (q, c) with (e_q . e_m)_p = c.
std::vector<std::vector<SparseRow>> right_rows(const AdjointProblem& p);
/// Column-major flattening, index c*rows + r.
SparseVec flatten_sparse(const LinearMap& alpha);
/// alpha(h (x) e_k) for h in H#T.
SparseVec apply_on_k(const LinearMap& alpha, const SparseVec& h, std::size_t k, std::size_t k_dim);
SparseVec right_act(const AdjointProblem& p, const SparseVec& v, std::size_t k);
SparseVec left_act(const AdjointProblem& p, const SparseVec& k, const SparseVec& v);
/// Source T-grading of e_k in Ad2 as an element of T (x) K (index t*dim K + k).
SparseVec ad2_source_grading(const AdjointProblem& p, std::size_t k);
/// (pi (x) id) coaction of P, (n * dim P) x dim P.
LinearMap pi_coaction(const AdjointProblem& p);

LinearMap act_on(const AdjointProblem& p, const LinearMap& alpha, std::size_t h);
LinearMap convolve(const AdjointProblem& p, const LinearMap& alpha, const LinearMap& beta);
std::vector<LinearMap> coact_on(const AdjointProblem& p, const LinearMap& alpha);

/// Coordinates against an echelon basis using sparse arithmetic.
struct SparseCoords {
  explicit SparseCoords(const SubspaceBasis& b);
  std::optional<SparseVec> coords(const SparseVec& v) const;

  std::vector<SparseVec> basis;
  std::vector<std::size_t> pivots;
};

}  // namespace hopfad::detail

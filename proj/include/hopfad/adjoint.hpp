#pragma once

#include "hopfad/constructions.hpp"

#include <stdexcept>

namespace hopfad {

struct ConditionSet {
  bool ad1 = false;
  bool ad2 = false;
  bool ad3 = false;

  static ConditionSet shimizu() { return {true, false, true}; }
  static ConditionSet relative() { return {true, true, true}; }
  /// "ad1,ad3" and the like; throws std::invalid_argument on unknown names.
  static ConditionSet parse(const std::string& s);
  std::string str() const;
  friend bool operator==(const ConditionSet&, const ConditionSet&) = default;
};

/// K-bimodule with an H#T-coaction. left: K (x) P -> P, right: P (x) K -> P.
struct Coefficient {
  std::size_t dim;
  LinearMap left;
  LinearMap right;
  LinearMap coaction;  // (dim H#T * dim) x dim

  static Coefficient of(const ComoduleAlgebra& k);
};

struct AdjointProblem {
  std::shared_ptr<const TaftSetting> setting;
  RMatrix rmatrix;
  ComoduleAlgebra comod_alg;
  Coefficient coeff;
  ConditionSet conditions;
  bool reduced = false;          // parametrize by alpha(x (x) 1)
  bool rbar = false;             // Ad2 with R_21^{-1} in place of R
  bool generators_only = false;  // Ad1 for k among the generators of K
  /// Ad2 with x (x) k -> R^2 (x) (1#R^1)x (x) k on the source; the default
  /// also coacts on k: R^2 pi(k_{-1}) (x) (1#R^1)x (x) k_0.
  bool ad2_literal = false;

  const FinDimHopf& hopf() const { return *setting->taft; }
  const FinDimHopf& base() const { return *setting->group; }
  const FieldContext& field() const { return setting->field; }
  /// The R entering Ad2 and the relative-center braiding.
  RMatrix effective_r() const;
  std::size_t hopf_dim() const { return hopf().dim(); }
  std::size_t k_dim() const { return comod_alg.dim(); }
  std::size_t p_dim() const { return coeff.dim; }
  /// dim Hom(H#T (x) K, P)
  std::size_t ambient_dim() const { return hopf_dim() * k_dim() * p_dim(); }
  /// Index of the unknown alpha(x (x) k)_p.
  std::size_t var(std::size_t x, std::size_t k, std::size_t p) const {
    return (x * k_dim() + k) * p_dim() + p;
  }
  /// Basis index of 1 in K.
  std::size_t k_unit() const;
};

/// P = K, R = R_q of the setting.
AdjointProblem make_problem(std::shared_ptr<const TaftSetting> s, ComoduleAlgebra k, ConditionSet c);

/// Sparse stacked equations. Full variant: column var(x,k,p). Reduced
/// variant: column x*dim P + p for alpha(x (x) 1)_p.
struct ConditionSystem {
  std::size_t cols = 0;
  bool reduced = false;
  std::vector<SparseRow> rows;
  std::vector<std::pair<std::string, std::size_t>> blocks;  // label, row count

  Matrix to_matrix(const FieldContext& f) const;
};

ConditionSystem condition_system(const AdjointProblem& p);

/// Kernel of the condition system in full coordinates (re-inflated when
/// the problem is reduced).
SubspaceBasis solve_conditions(const AdjointProblem& p);

/// Element of Hom(H#T (x) K, P) as a dim P x (dim H#T * dim K) map.
LinearMap unflatten(const AdjointProblem& p, const Vector& v);
Vector flatten(const AdjointProblem& p, const LinearMap& alpha);

/// Residuals of the active conditions evaluated directly on alpha; nullopt
/// when all vanish, otherwise {"condition", "indices", "residual"}.
std::optional<json> condition_residual(const AdjointProblem& p, const LinearMap& alpha);

class ClosureFailure : public std::runtime_error {
 public:
  ClosureFailure(const std::string& what, json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const json& witness() const { return witness_; }

 private:
  json witness_;
};

struct AdjointAlgebra {
  AdjointProblem problem;
  SubspaceBasis basis;
  std::vector<LinearMap> elements;  // basis as maps
  FinDimAlgebra algebra;            // product constants and unit coordinates
  ModuleRep action;                 // host H#T
  ComoduleRep coaction;             // host H#T

  std::size_t dim() const { return basis.dim(); }
  YDModule yd() const { return YDModule{action, coaction}; }
  LinearMap element_of(const SparseVec& coords) const;
};

/// Requires P = K. Throws ClosureFailure when a structure map leaves the
/// solution space.
AdjointAlgebra solve_adjoint(const AdjointProblem& p);

/// Kernel membership of every basis element, unit law, and for Ad2 variants
/// the consistency of (pi (x) id) coaction with Ad2.
VerificationReport verify_solution(const AdjointAlgebra& a);
VerificationReport verify_yd(const AdjointAlgebra& a);
/// Product is H#T-linear and colinear, associative and unital.
VerificationReport verify_center_algebra(const AdjointAlgebra& a);
/// m c = m with c the YD braiding.
VerificationReport verify_braided_commutative(const AdjointAlgebra& a);
/// m flip = m; a negative control, expected to fail for the relative variants.
VerificationReport verify_flip_commutative(const AdjointAlgebra& a);
/// Double braiding of A with the pi-induced module of v. Throws
/// std::invalid_argument when Ad2 is not active.
VerificationReport verify_relative_center(const AdjointAlgebra& a, const ModuleRep& v);

/// dim of {a : h.a = eps(h) a, coaction(a) = 1 (x) a}.
std::size_t connectedness(const FinDimHopf& h, const YDModule& m);
std::size_t connectedness(const AdjointAlgebra& a);
YDModule yd_direct_sum(const YDModule& a, const YDModule& b);

/// Each relative basis vector lies in the Shimizu solution space.
VerificationReport monotonicity(const SubspaceBasis& relative, const SubspaceBasis& shimizu);

/// phi(alpha) = (alpha(g^i (x) 1))_{i<m} into K^m; requires K = K(d, xi).
VerificationReport phi_structure_transport(const AdjointAlgebra& a);

struct Chi0Dims {
  std::size_t relative = 0;
  std::size_t chi0_k = 0;
  std::size_t chi0_t = 0;
};
VerificationReport chi0_crosscheck(int n, int d, const Rational& xi, Chi0Dims* dims = nullptr);

/// Both sides of the dinaturality identity on alpha, for M a K-module and v
/// a T-module. The prebalancing twists V^* and H#T by (S^{-1} (x) S)(R_21);
/// literal_inverse uses R^{-1} instead, which agrees only when R_21 R = 1.
std::optional<json> dinaturality_residual(const AdjointProblem& p, const LinearMap& alpha,
                                          const ModuleRep& m, const ModuleRep& v,
                                          bool literal_inverse = false);
VerificationReport dinaturality_sample(const AdjointProblem& p, const ModuleRep& m, const ModuleRep& v,
                                       bool literal_inverse = false);

}  // namespace hopfad

#pragma once

#include "hopfad/hopf.hpp"

#include <memory>

namespace hopfad {

/// Left module: action is dim x (host_dim * dim), h (x) v -> h.v.
struct ModuleRep {
  ModuleRep(const FieldContext& f, std::size_t host, std::size_t d)
      : field(f), host_dim(host), dim(d), action(f, d, host * d) {}

  FieldContext field;
  std::size_t host_dim;
  std::size_t dim;
  LinearMap action;

  /// Action of a basis element, dim x dim.
  LinearMap of(std::size_t i) const;
  LinearMap of(const SparseVec& h) const;
};

/// Left comodule: coaction is (host_dim * dim) x dim, v -> v_{-1} (x) v_0.
struct ComoduleRep {
  ComoduleRep(const FieldContext& f, std::size_t host, std::size_t d)
      : field(f), host_dim(host), dim(d), coaction(f, host * d, d) {}

  FieldContext field;
  std::size_t host_dim;
  std::size_t dim;
  LinearMap coaction;
};

struct YDModule {
  ModuleRep module;
  ComoduleRep comodule;
  std::size_t dim() const { return module.dim; }
};

/// R in T (x) T with its inverse computed in the tensor algebra.
struct RMatrix {
  std::shared_ptr<const FinDimHopf> host;
  SparseVec element;
  SparseVec inverse;

  std::size_t host_dim() const { return host->dim(); }
  const FieldContext& field() const { return host->field(); }
};

/// Throws std::domain_error when r is not invertible in T (x) T.
RMatrix make_rmatrix(std::shared_ptr<const FinDimHopf> host, SparseVec r);
/// R_21 as an element of T (x) T.
SparseVec flip_element(const SparseVec& r, std::size_t dim);
/// Rbar = R_21^{-1}, again quasitriangular.
RMatrix rbar(const RMatrix& r);

VerificationReport check_rmatrix(const RMatrix& r);

/// Reorders tensor factors: output factor k is input factor perm[k].
LinearMap permute_factors(const FieldContext& f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm);

ModuleRep regular_module(const FinDimAlgebra& a);
ModuleRep trivial_module(const FinDimCoalgebra& c);  // acts by the counit
/// Restriction along an algebra map phi: B -> A (phi is dim A x dim B).
ModuleRep pullback_module(const LinearMap& phi, const ModuleRep& v);
/// h.(v (x) w) = h_1.v (x) h_2.w
ModuleRep tensor_module(const FinDimCoalgebra& c, const ModuleRep& v, const ModuleRep& w);
/// v (x) w -> v_{-1} w_{-1} (x) v_0 (x) w_0
ComoduleRep tensor_comodule(const FinDimAlgebra& a, const ComoduleRep& v, const ComoduleRep& w);
ComoduleRep regular_comodule(const FinDimCoalgebra& c);
ComoduleRep trivial_comodule(const FinDimAlgebra& a, std::size_t dim);
YDModule tensor_yd(const FinDimHopf& h, const YDModule& a, const YDModule& b);

VerificationReport check_module(const FinDimAlgebra& a, const ModuleRep& v);
VerificationReport check_comodule(const FinDimCoalgebra& c, const ComoduleRep& v);
/// Comodule axioms plus multiplicativity and unitality of the coaction.
VerificationReport check_comodule_algebra(const FinDimHopf& h, const FinDimAlgebra& k,
                                          const LinearMap& coaction);
/// lambda(h.v) = h_1 v_{-1} S(h_3) (x) h_2.v_0, plus module and comodule axioms.
VerificationReport check_yd(const FinDimHopf& h, const YDModule& v);

bool is_module_map(const ModuleRep& v, const ModuleRep& w, const LinearMap& f);
bool is_comodule_map(const ComoduleRep& v, const ComoduleRep& w, const LinearMap& f);
/// Basis of Hom_A(V, W), each map dim W x dim V.
std::vector<LinearMap> module_hom_basis(const ModuleRep& v, const ModuleRep& w);

/// sigma_{V,W}(v (x) w) = R^2.w (x) R^1.v
LinearMap braiding(const RMatrix& r, const ModuleRep& v, const ModuleRep& w);
/// Inverse of braiding(r, v, w), built from R^{-1}: W (x) V -> V (x) W.
LinearMap braiding_inverse(const RMatrix& r, const ModuleRep& v, const ModuleRep& w);
/// Both hexagon identities on U, V, W.
VerificationReport check_hexagons(const RMatrix& r, const ModuleRep& u, const ModuleRep& v,
                                  const ModuleRep& w);

/// c(v (x) x) = v_{-1}.x (x) v_0, A (x) B -> B (x) A.
LinearMap yd_braiding(const YDModule& a, const YDModule& b);

struct DualModule {
  ModuleRep module;  // (t.f)(x) = f(S(t)x)
  LinearMap ev;      // V* (x) V -> k
  LinearMap coev;    // k -> V (x) V*
};
DualModule dual_module(const FinDimHopf& h, const ModuleRep& v);
VerificationReport check_rigidity(const FinDimHopf& h, const ModuleRep& v, const DualModule& d);

}  // namespace hopfad

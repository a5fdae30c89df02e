#pragma once

#include "hopfad/adjoint.hpp"

#include <map>

namespace hopfad {

/// H_ad for a braided Hopf algebra H in Rep(T), with modules over H#T
/// standing in for objects of the category of H-modules in Rep(T).
struct HAdjoint {
  std::shared_ptr<const FinDimHopf> base;  // T
  RMatrix rmatrix;
  BraidedHopf line;
  std::shared_ptr<const FinDimHopf> boson;  // H#T, index a*dim T + b
  FinDimAlgebra carrier;                    // the product of H
  LinearMap rho_ad;                         // H (x) H -> H
  ModuleRep action;                         // host H#T: (h#t).a = rho_ad(h (x) t.a)
  ComoduleRep coaction;                     // h -> h_1#R^2 (x) R^1.h_2
  /// gamma_X = (rho_X (x) id)(id (x) s)(Delta (x) id) with s = sigma_{H,X}
  /// by default; literal_inverse takes s = sigma^{-1}_{X,H} instead. The two
  /// agree when R_21 R = 1.
  bool literal_inverse = false;
  /// gamma_X per registered module name.
  mutable std::map<std::string, LinearMap> half_braidings;

  std::size_t dim() const { return carrier.dim; }
  std::size_t t_dim() const { return base->dim(); }
  LinearMap h_inclusion() const;  // h -> h#1
  LinearMap t_inclusion() const;  // t -> 1#t
  ModuleRep t_module(const ModuleRep& x) const;
  ModuleRep h_module(const ModuleRep& x) const;

  /// gamma_X : H (x) X -> X (x) H, cached per name.
  const LinearMap& half_braiding(const std::string& name, const ModuleRep& x) const;
  LinearMap half_braiding(const ModuleRep& x) const;
};

/// Builds H#T itself; r lives on T.
HAdjoint build_h_ad(const BraidedHopf& h, const RMatrix& r);
HAdjoint build_h_ad(const TaftSetting& s);

/// A named H#T-module.
struct NamedModule {
  std::string name;
  ModuleRep module;
};

/// "regular" and "trivial" over H#T.
NamedModule named_module(const HAdjoint& a, const std::string& name);

/// Module axioms and T-linearity of rho_ad; the tensor action (h-act)
/// against the H#T coproduct; gamma_X invertible, H#T-linear, natural and
/// multiplicative on pairs; double braiding with G(V) for V regular and
/// trivial; m gamma_{H,H} = m; gamma_X against the displayed coaction.
VerificationReport verify_h_ad(const HAdjoint& a, const std::vector<NamedModule>& modules);

/// pi_X is an H#T-map H_ad -> X (x) X*, dinatural on End(X), and satisfies
/// the relative dinaturality identity for V regular and trivial. A non-null
/// dual_override replaces the action on X*.
VerificationReport pi_dinatural_check(const HAdjoint& a, const ModuleRep& x,
                                      const ModuleRep* dual_override = nullptr);

/// phi(alpha) = (id (x) eps_T) alpha(1 (x) 1) from the relative adjoint
/// algebra of K = H#T onto H_ad.
VerificationReport example1_iso(const AdjointAlgebra& adjoint, const HAdjoint& a);

}  // namespace hopfad

#pragma once

#include "hopfad/braiding.hpp"

#include <optional>

namespace hopfad {

/// kC_n on basis g^0..g^{n-1}, over Q(zeta_n).
std::shared_ptr<const FinDimHopf> group_algebra_cn(int n);
/// R = (1/n) sum_{i,j} q^{-ij} g^i (x) g^j
RMatrix r_matrix_cn(std::shared_ptr<const FinDimHopf> cn);
/// R = 1 (x) 1
RMatrix trivial_rmatrix(std::shared_ptr<const FinDimHopf> t);

/// Hopf algebra in Rep(T): structure maps are T-linear and the coproduct is
/// multiplicative for the braided product on H (x) H.
struct BraidedHopf {
  FinDimAlgebra algebra;
  FinDimCoalgebra coalgebra;
  ModuleRep tmodule;
  LinearMap antipode;

  std::size_t dim() const { return algebra.dim; }
};

/// (a (x) b)(c (x) d) = a sigma(b (x) c) d as a map (H (x) H)^{(x)2} -> H (x) H.
LinearMap braided_tensor_mult(const FinDimAlgebra& h, const LinearMap& sigma);

/// k[x]/(x^n) with g.x^a = q^a x^a; Delta(x^a) is Delta(x)^a in the braided
/// tensor algebra built from R.
BraidedHopf braided_line(const RMatrix& r);
VerificationReport check_braided_hopf(const BraidedHopf& h, const RMatrix& r);

/// Smash product and smash coproduct on x^a # g^b at index a*dim(T)+b,
/// without the antipode.
std::pair<FinDimAlgebra, FinDimCoalgebra> bosonization_data(const BraidedHopf& h,
                                                            const FinDimHopf& t,
                                                            const RMatrix& r);
/// Throws NoAntipode when the smash data admits no antipode.
FinDimHopf bosonization(const BraidedHopf& h, const FinDimHopf& t, const RMatrix& r);

/// Presentation <g, x | gx = q xg, g^n = 1, x^n = 0>, Delta(x) = x (x) 1 + g (x) x,
/// Delta(g) = g (x) g, with x = x#1, g = 1#g.
VerificationReport taft_presentation_check(const FinDimAlgebra& a, const FinDimCoalgebra& c, int n);
VerificationReport taft_presentation_check(const FinDimHopf& b, int n);

struct KParams {
  int d = 1;
  int m = 1;
  Rational xi;
};

/// Algebra K with coaction K -> H (x) K, (H (x) K) index i*dim K + k.
struct ComoduleAlgebra {
  std::string name;
  FinDimAlgebra algebra;
  LinearMap coaction;
  std::optional<KParams> k_params;
  /// Algebra generators; Ad1 restricted to these implies Ad1 everywhere.
  std::vector<SparseVec> generators;

  std::size_t dim() const { return algebra.dim; }
};

/// K(d, xi) on h^a w^b at index a*n+b: h^d = 1, hw = q^m wh, w^n = xi,
/// lambda(h) = g^m (x) h, lambda(w) = x (x) 1 + g (x) w. Throws
/// std::invalid_argument unless d | n.
ComoduleAlgebra comodule_algebra_K(const FinDimHopf& taft, int n, int d, const Rational& xi);
ComoduleAlgebra trivial_comodule_algebra(const FinDimHopf& taft);
ComoduleAlgebra regular_comodule_algebra(const FinDimHopf& taft);
/// kC_d with lambda(g_d^a) = g^{ma} (x) g_d^a.
ComoduleAlgebra coideal_cd(const FinDimHopf& taft, int n, int d);

/// pi(x^a g^b) = delta_{a0} g^b, n x n^2.
LinearMap projection_pi(int n);
/// t -> 1#t and h -> h#1.
LinearMap inclusion_t(int n);
LinearMap inclusion_h(int n);

/// Algebra, coalgebra, and antipode compatibility of f: A -> B.
VerificationReport check_hopf_morphism(const FinDimHopf& a, const FinDimHopf& b, const LinearMap& f);

/// Everything built from one n: T = kC_n, R_q, H, H#T and the maps between them.
struct TaftSetting {
  int n;
  FieldContext field;
  std::shared_ptr<const FinDimHopf> group;
  RMatrix r;
  BraidedHopf line;
  std::shared_ptr<const FinDimHopf> taft;
  LinearMap pi;
  LinearMap iota_t;
  LinearMap iota_h;
};

TaftSetting make_taft_setting(int n);

/// Gaussian binomial (a choose b)_q as an element of Q(zeta_n).
Scalar q_binomial(const FieldContext& f, const Scalar& q, int a, int b);

}  // namespace hopfad

#pragma once

#include "hopfad/braided_adjoint.hpp"

#include <cstdint>
#include <tuple>

namespace hopfad {

/// Process-wide cache of make_taft_setting(n).
std::shared_ptr<const TaftSetting> shared_setting(int n);

/// Associativity, distributivity, commutativity and inverses on
/// pseudo-random triples drawn from seed.
VerificationReport field_spot_check(const FieldContext& f, std::uint64_t seed, std::size_t triples = 100);

/// verify_solution, verify_yd, verify_center_algebra,
/// verify_braided_commutative, connectedness = 1, and with Ad2 the relative
/// center against regular kC_n.
VerificationReport adjoint_structure_checks(const AdjointAlgebra& a);

/// (d, xi) with d | n, xi = 0, and xi = 1 when d > 1.
std::vector<std::pair<int, Rational>> k_grid(int n);

/// verify_h_ad on the given modules, pi_dinatural_check on each, and a note
/// comparing against the sigma^{-1}_{X,H} form of gamma.
VerificationReport braided_adjoint_checks(const HAdjoint& a, const std::vector<NamedModule>& modules,
                                          const std::string& at = {});

VerificationReport suite_hopf(const std::vector<int>& ns, std::uint64_t seed);
VerificationReport suite_rmatrix(const std::vector<int>& ns);
VerificationReport suite_adjoint(const std::vector<int>& ns);
VerificationReport suite_braided(const std::vector<int>& ns);

}  // namespace hopfad

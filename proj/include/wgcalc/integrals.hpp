#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wgcalc/permutation.hpp"
#include "wgcalc/polynomial.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// A Haar-unitary monomial ∫ Π u_{j_ℓ,h_ℓ} Π ū_{i_m,p_m} du over U(d).
/// Indices are 1-based and must lie in 1..d. Unequal factor counts make the
/// integral vanish.
struct MonomialSpec {
    int d = 0;
    std::vector<std::pair<int, int>> u;     // (j_ℓ, h_ℓ)
    std::vector<std::pair<int, int>> ubar;  // (i_m, p_m)

    void validate() const;
};

/// Number of (γ,σ) ∈ S_k² with γ(i̲) = j̲ and h̲ = σ(p̲), grouped by the cycle
/// type of γσ⁻¹. This is the d-independent part of the integral formula.
std::map<Partition, Integer> integral_pair_counts(const MonomialSpec& m);

/// Exact value Σ_{γ,σ} δ_{γ(i̲)}^{j̲} δ_{h̲}^{σ(p̲)} Wg(d, γσ⁻¹).
Rational monomial_integral(const MonomialSpec& m);

/// Same with d symbolic (the index pattern fixes the (γ,σ) sum; d enters only
/// through Wg). Indices are validated for the symbolic regime d ≥ max index.
RationalFunctionInD monomial_integral_symbolic(const MonomialSpec& m);

/// Wg(d, τ) read off from the integral with i_ℓ = h_ℓ = p_ℓ = ℓ, j_ℓ = τ(ℓ).
/// Requires k ≤ d.
Rational wg_via_monomial(int d, const Permutation& tau);

}  // namespace wgcalc

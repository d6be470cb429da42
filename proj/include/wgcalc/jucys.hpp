#pragma once

#include <vector>

#include "wgcalc/group_algebra.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// Jucys–Murphy elements J_2, ..., J_k with J_i = (1,i) + (2,i) + ... + (i−1,i).
std::vector<GroupAlgebraElement<Rational>> jucys_elements(int k);

/// d · Π_{i=2}^k (d + J_i) expanded in Q[S_k] with polynomial coefficients.
GroupAlgebraElement<PolynomialInD> jucys_product_symbolic(int k);

/// The factorization d·Π(d+J_i) = Σ_ρ d^{c(ρ)}ρ, exactly as polynomials in d.
bool jucys_factorization_check(int k);
/// Same at a fixed integer d.
bool jucys_factorization_check(int k, long d);

/// e_i(J_2,...,J_k); equals Σ_{|μ|=i} C_μ.
GroupAlgebraElement<Rational> elementary_symmetric_jucys(int k, int i);

/// h_j(J_2,...,J_k), the complete homogeneous symmetric polynomial.
GroupAlgebraElement<Rational> complete_homogeneous_jucys(int k, int j);

/// Orders of the expansion P⁻¹ = d^{−k} Σ_j (−1/d)^j h_j(J_2,...,J_k):
/// orders[j] = h_j collected into class sums (coefficients α_{j,μ} ∈ N,
/// supported on classes of sign (−1)^j).
struct JucysSeries {
    int k = 0;
    std::vector<ClassFunction<Rational>> orders;
};

JucysSeries jucys_series(int k, int max_order);

/// Partial sum of the series as Laurent data: coefficient of d^{−k−j} C_μ
/// is (−1)^j α_{j,μ}. Checks agreement with the symbolic Wg expansion
/// through order d^{−k−max_order}.
bool jucys_series_matches_laurent(int k, int max_order);

}  // namespace wgcalc

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wgcalc/group_algebra.hpp"
#include "wgcalc/weingarten.hpp"

namespace wgcalc {

/// A[μ; μ1, μ2]: the number of factorizations σ = σ1σ2 of a fixed σ of type
/// μ with π(σ1) = μ1, π(σ2) = μ2. Character (Frobenius) route.
Integer connection_coefficient(const Partition& mu, const Partition& mu1, const Partition& mu2);

/// C_{μ1}·C_{μ2} = Σ_μ A[μ;μ1,μ2] C_μ via the character route.
ClassFunction<Rational> class_product(const Partition& mu1, const Partition& mu2);

/// Oracle of record: fixes a representative per output class and counts
/// factorizations directly. Bound: k ≤ 6.
ClassFunction<Rational> brute_force_class_product(const Partition& mu1, const Partition& mu2);

/// Structure constants A[μ; μ1, μ2] for all class triples of S_k.
struct ConnectionTable {
    int k = 0;
    std::map<std::pair<Partition, Partition>, ClassFunction<Rational>> products;
    const ClassFunction<Rational>& product(const Partition& mu1, const Partition& mu2) const;
};

ConnectionTable connection_table(int k);

/// Coefficients A[μ, h] of the 1/d expansion
/// P⁻¹ = d^{−k}(1 + Σ_μ Σ_{h ≥ |μ|} d^{−h} A[μ,h] C_μ),
/// obtained from the alternating geometric series truncated at degree h_max.
std::map<std::pair<Partition, int>, Integer> collins_expansion(int k, int h_max);

/// Leading coefficients C[μ] = A[μ, |μ|]. C[1^k] is the constant term 1.
struct TopCoefficients {
    int k = 0;
    std::map<Partition, Integer> values;
};

/// Computed by the geometric series in the degenerate algebra Q[S̃_k]
/// (class products there keep only the length-additive part).
TopCoefficients top_coefficients(int k);

/// Independent brute force over permutation factorizations with the length
/// filter (alternating sum over factorization counts). Bound: k ≤ 5.
Integer top_coefficient_brute(const Partition& mu);

/// Π_j (−1)^{a_j −1} Cat_{a_j−1} over the parts of μ.
Integer top_coefficient_catalan(const Partition& mu);

struct MultiplicativityReport {
    int k = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Checks top_coefficients(k) against the Catalan product and against the
/// leading Laurent coefficient of the symbolic Wg. Bound: k ≤ 8.
MultiplicativityReport verify_collins_multiplicativity(int k);

}  // namespace wgcalc

#pragma once

#include <map>
#include <string>
#include <vector>

#include "wgcalc/characters.hpp"
#include "wgcalc/group_algebra.hpp"

namespace wgcalc {

/// The Formanek–Weingarten function as a function on conjugacy classes.
/// When d < k the element P is invertible only in Σ_k(V); the class-function
/// form returned here (character sum restricted to ht(λ) ≤ d) is then one
/// representative of the operator, flagged via `restricted`. Canonicalization
/// onto the good-permutation basis is the tableaux module's straighten().
template <class C>
struct WeingartenFunction {
    int k = 0;
    std::map<Partition, C> values;
    bool restricted = false;

    const C& at(const Partition& mu) const {
        auto it = values.find(mu);
        if (it == values.end())
            throw std::invalid_argument("WeingartenFunction: no class " + mu.to_string());
        return it->second;
    }

    ClassFunction<C> as_class_function() const {
        ClassFunction<C> f(k);
        for (const auto& [mu, v] : values) f.set(mu, v);
        return f;
    }
};

/// P = Σ_ρ d^{c(ρ)}ρ in the class basis: coefficient of C_μ is d^{ht(μ)}.
ClassFunction<Rational> p_element(int k, const Rational& d);
ClassFunction<PolynomialInD> p_element_symbolic(int k);

/// Character route: Wg(d,μ) = Σ_{λ ⊢ k, ht(λ) ≤ d} χ_λ(1)χ_λ(μ)/(k!·r_λ(d)).
WeingartenFunction<Rational> wg_characters(int k, long d);
WeingartenFunction<RationalFunctionInD> wg_characters_symbolic(int k);

/// Independent oracle: solves X·P = 1 in the center of Q[S_k] as a
/// p(k)×p(k) linear system over exact rationals. Requires d ≥ k.
WeingartenFunction<Rational> wg_oracle_linear(int k, long d);

/// Closed form for the full cycle: (−1)^{k−1} Cat_{k−1} / Π_{j=1−k}^{k−1}(d−j).
RationalFunctionInD wg_full_cycle(int k);

struct SignViolation {
    Partition mu;
    Rational value;
    int expected_sign = 0;
};

struct SignReport {
    int k = 0;
    long d = 0;
    std::vector<SignViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks sign(Wg(d,μ)) = ε(μ) for every μ ⊢ k. Requires d ≥ k.
SignReport novak_sign_check(int k, long d);

/// Σ_σ b_σ Wg(d,σ) where Σ b_σ σ = a·a* (a* the coefficient-wise σ → σ⁻¹).
/// Positive for every nonzero a; a = 0 is rejected.
Rational wg_inequality_check(int k, long d, const GroupAlgebraElement<Rational>& a);

/// Max pole order of the symbolic Wg entries at each integer in
/// [−k+1, k−1]. Verifies the bound p(p+|i|) ≤ k (violation would be a bug).
std::map<int, int> pole_profile(int k);

/// d!²·Wg(d,μ) for k = d, the scaling used by the printed tables.
std::map<Partition, Rational> wg_scaled_table(int d);

struct ConjectureReport {
    struct PerD {
        long d = 0;
        bool decreasing = true;
        bool denominators_divide = true;
        Integer max_denominator;
        std::vector<std::string> counterexamples;
    };
    std::vector<PerD> per_d;
    bool ok() const {
        for (const auto& r : per_d)
            if (!r.decreasing || !r.denominators_divide) return false;
        return true;
    }
};

/// For d = 2..d_max, checks on the d!²-scaled table (in the printed order:
/// lexicographic on parts written increasing) that absolute values strictly
/// decrease and that every denominator divides the largest one.
ConjectureReport conjecture_scan(int d_max);

}  // namespace wgcalc

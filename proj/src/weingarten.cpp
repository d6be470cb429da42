#include "wgcalc/weingarten.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgcalc {

ClassFunction<Rational> p_element(int k, const Rational& d) {
    ClassFunction<Rational> f(k);
    for (const Partition& mu : partitions_of(k)) {
        Rational v(1);
        for (int i = 0; i < mu.height(); ++i) v *= d;
        f.set(mu, v);
    }
    return f;
}

ClassFunction<PolynomialInD> p_element_symbolic(int k) {
    ClassFunction<PolynomialInD> f(k);
    PolynomialInD d = PolynomialInD::variable();
    for (const Partition& mu : partitions_of(k)) {
        PolynomialInD v(1);
        for (int i = 0; i < mu.height(); ++i) v = v * d;
        f.set(mu, v);
    }
    return f;
}

WeingartenFunction<Rational> wg_characters(int k, long d) {
    if (d < 1) throw std::invalid_argument("wg_characters: d must be >= 1");
    const CharacterTable& tab = character_table(k);
    WeingartenFunction<Rational> wg;
    wg.k = k;
    wg.restricted = d < k;
    Integer kfact = factorial(k);
    for (const Partition& mu : tab.classes) {
        Rational acc(0);
        for (const Partition& lam : tab.classes) {
            if (lam.height() > d) continue;
            Rational term = Rational(dim_irrep(lam)) * Rational(tab.value(lam, mu));
            acc += term / (Rational(kfact) * r_lambda_at(lam, Rational(d)));
        }
        wg.values[mu] = acc;
    }
    return wg;
}

WeingartenFunction<RationalFunctionInD> wg_characters_symbolic(int k) {
    const CharacterTable& tab = character_table(k);
    WeingartenFunction<RationalFunctionInD> wg;
    wg.k = k;
    Rational kfact(factorial(k));
    std::vector<PolynomialInD> r_polys;
    for (const Partition& lam : tab.classes) r_polys.push_back(r_lambda_poly(lam));
    for (const Partition& mu : tab.classes) {
        RationalFunctionInD acc;
        for (size_t i = 0; i < tab.classes.size(); ++i) {
            Rational num = Rational(dim_irrep(tab.classes[i])) * Rational(tab.value(tab.classes[i], mu)) / kfact;
            if (num.is_zero()) continue;
            acc += RationalFunctionInD(PolynomialInD(num), r_polys[i]);
        }
        wg.values[mu] = acc;
    }
    return wg;
}

WeingartenFunction<Rational> wg_oracle_linear(int k, long d) {
    if (d < k) throw std::invalid_argument("wg_oracle_linear: requires d >= k");
    std::vector<Partition> classes = partitions_of(k);
    size_t n = classes.size();
    // Row ρ: coefficient of a fixed representative σ_ρ in X·P, as a linear
    // form in the unknowns x_μ. coeff = Σ_{τ ∈ (μ)} d^{c(τ⁻¹ σ_ρ)}.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, Rational(0)));
    for (size_t r = 0; r < n; ++r) {
        const Permutation& rep = conjugacy_class(classes[r]).front();
        for (size_t c = 0; c < n; ++c) {
            Integer acc = 0;
            for (const Permutation& tau : conjugacy_class(classes[c]))
                acc += pow_integer(Integer(d), tau.inverse().compose(rep).cycle_count());
            m[r][c] = Rational(acc);
        }
        m[r][n] = classes[r].height() == k ? Rational(1) : Rational(0);  // identity class
    }
    // Gaussian elimination
    for (size_t col = 0, row = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col].is_zero()) piv++;
        if (piv == n)
            throw std::logic_error("wg_oracle_linear: singular system (should not happen for d >= k)");
        std::swap(m[piv], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (size_t j = col; j <= n; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
        }
        row++;
    }
    WeingartenFunction<Rational> wg;
    wg.k = k;
    for (size_t i = 0; i < n; ++i) wg.values[classes[i]] = m[i][n];
    return wg;
}

RationalFunctionInD wg_full_cycle(int k) {
    if (k < 1) throw std::invalid_argument("wg_full_cycle: k must be >= 1");
    std::vector<Rational> roots;
    for (int j = -k + 1; j <= k - 1; ++j) roots.push_back(Rational(j));
    Rational num(catalan(k - 1));
    if (k % 2 == 0) num = -num;  // (−1)^{k−1}
    return RationalFunctionInD(PolynomialInD(num), PolynomialInD::from_roots(roots));
}

SignReport novak_sign_check(int k, long d) {
    if (d < k) throw std::invalid_argument("novak_sign_check: requires d >= k");
    WeingartenFunction<Rational> wg = wg_characters(k, d);
    SignReport report;
    report.k = k;
    report.d = d;
    for (const auto& [mu, v] : wg.values) {
        int expected = mu.class_sign();
        if (v.sign() != expected) report.violations.push_back({mu, v, expected});
    }
    return report;
}

Rational wg_inequality_check(int k, long d, const GroupAlgebraElement<Rational>& a) {
    if (a.is_zero()) throw std::invalid_argument("wg_inequality_check: a must be nonzero");
    if (a.degree() != k) throw std::invalid_argument("wg_inequality_check: degree mismatch");
    WeingartenFunction<Rational> wg = wg_characters(k, d);
    GroupAlgebraElement<Rational> b = ga_multiply(a, a.star());
    Rational acc(0);
    for (const auto& [sigma, coeff] : b.terms()) acc += coeff * wg.at(sigma.cycle_type());
    return acc;
}

std::map<int, int> pole_profile(int k) {
    WeingartenFunction<RationalFunctionInD> wg = wg_characters_symbolic(k);
    std::map<int, int> profile;
    for (int i = -k + 1; i <= k - 1; ++i) profile[i] = 0;
    for (const auto& [mu, f] : wg.values) {
        (void)mu;
        if (f.is_zero()) continue;
        for (int i = -k + 1; i <= k - 1; ++i) {
            int p = f.den().root_multiplicity(Rational(i));
            profile[i] = std::max(profile[i], p);
        }
    }
    for (const auto& [i, p] : profile) {
        if (p * (p + std::abs(i)) > k)
            throw std::logic_error("pole_profile: bound p(p+|i|) <= k violated at i = " +
                                   std::to_string(i));
    }
    return profile;
}

std::map<Partition, Rational> wg_scaled_table(int d) {
    WeingartenFunction<Rational> wg = wg_characters(d, d);
    Rational scale(factorial(d) * factorial(d));
    std::map<Partition, Rational> out;
    for (const auto& [mu, v] : wg.values) out[mu] = v * scale;
    return out;
}

ConjectureReport conjecture_scan(int d_max) {
    ConjectureReport report;
    for (int d = 2; d <= d_max; ++d) {
        ConjectureReport::PerD r;
        r.d = d;
        std::map<Partition, Rational> table = wg_scaled_table(d);
        std::vector<Partition> order = partitions_in_table_order(d);
        Integer max_den = 1;
        for (const auto& [mu, v] : table) {
            (void)mu;
            if (v.den() > max_den) max_den = v.den();
        }
        r.max_denominator = max_den;
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            Rational cur = abs(table.at(order[i])), nxt = abs(table.at(order[i + 1]));
            if (!(cur > nxt)) {
                r.decreasing = false;
                r.counterexamples.push_back("|" + order[i].to_string() + "| = " + cur.to_string() +
                                            " !> |" + order[i + 1].to_string() + "| = " +
                                            nxt.to_string());
            }
        }
        for (const auto& [mu, v] : table) {
            if (max_den % v.den() != 0) {
                r.denominators_divide = false;
                r.counterexamples.push_back("denominator of " + mu.to_string() + " (" +
                                            v.den().get_str() + ") does not divide " +
                                            max_den.get_str());
            }
        }
        report.per_d.push_back(std::move(r));
    }
    return report;
}

}  // namespace wgcalc

#include "wgcalc/jucys.hpp"

namespace wgcalc {

std::vector<GroupAlgebraElement<Rational>> jucys_elements(int k) {
    std::vector<GroupAlgebraElement<Rational>> out;
    for (int i = 2; i <= k; ++i) {
        GroupAlgebraElement<Rational> j(k);
        for (int a = 1; a < i; ++a) j.add_term(Permutation::transposition(k, a, i), Rational(1));
        out.push_back(std::move(j));
    }
    return out;
}

GroupAlgebraElement<PolynomialInD> jucys_product_symbolic(int k) {
    if (k > 8) throw capacity_error("jucys_product_symbolic: k exceeds bound 8");
    PolynomialInD d = PolynomialInD::variable();
    GroupAlgebraElement<PolynomialInD> acc(k);
    acc.add_term(Permutation::identity(k), d);
    for (int i = 2; i <= k; ++i) {
        GroupAlgebraElement<PolynomialInD> factor(k);
        factor.add_term(Permutation::identity(k), d);
        for (int a = 1; a < i; ++a)
            factor.add_term(Permutation::transposition(k, a, i), PolynomialInD(1));
        acc = ga_multiply(acc, factor);
    }
    return acc;
}

bool jucys_factorization_check(int k) {
    GroupAlgebraElement<PolynomialInD> lhs = jucys_product_symbolic(k);
    GroupAlgebraElement<PolynomialInD> rhs = class_expand(p_element_symbolic(k));
    return lhs == rhs;
}

bool jucys_factorization_check(int k, long d) {
    GroupAlgebraElement<Rational> acc(k);
    acc.add_term(Permutation::identity(k), Rational(d));
    for (int i = 2; i <= k; ++i) {
        GroupAlgebraElement<Rational> factor(k);
        factor.add_term(Permutation::identity(k), Rational(d));
        for (int a = 1; a < i; ++a)
            factor.add_term(Permutation::transposition(k, a, i), Rational(1));
        acc = ga_multiply(acc, factor);
    }
    return acc == class_expand(p_element(k, Rational(d)));
}

GroupAlgebraElement<Rational> elementary_symmetric_jucys(int k, int i) {
    // e over the k−1 variables J_2..J_k by the one-variable-at-a-time recurrence
    std::vector<GroupAlgebraElement<Rational>> e(static_cast<size_t>(i) + 1,
                                                 GroupAlgebraElement<Rational>(k));
    e[0] = GroupAlgebraElement<Rational>::identity(k);
    for (const auto& j : jucys_elements(k))
        for (int t = i; t >= 1; --t)
            e[static_cast<size_t>(t)] += ga_multiply(e[static_cast<size_t>(t - 1)], j);
    return e[static_cast<size_t>(i)];
}

GroupAlgebraElement<Rational> complete_homogeneous_jucys(int k, int j) {
    // h over J_2..J_m: H(m, t) = H(m−1, t) + J_m · H(m, t−1)
    std::vector<GroupAlgebraElement<Rational>> js = jucys_elements(k);
    std::vector<GroupAlgebraElement<Rational>> h(static_cast<size_t>(j) + 1,
                                                 GroupAlgebraElement<Rational>(k));
    h[0] = GroupAlgebraElement<Rational>::identity(k);  // zero variables
    for (const auto& jm : js)
        for (int t = 1; t <= j; ++t)
            h[static_cast<size_t>(t)] += ga_multiply(jm, h[static_cast<size_t>(t - 1)]);
    return h[static_cast<size_t>(j)];
}

JucysSeries jucys_series(int k, int max_order) {
    if (max_order < 0) throw std::invalid_argument("jucys_series: max_order must be >= 0");
    JucysSeries series;
    series.k = k;
    // all h_j at once, sharing the recurrence table
    std::vector<GroupAlgebraElement<Rational>> h(static_cast<size_t>(max_order) + 1,
                                                 GroupAlgebraElement<Rational>(k));
    h[0] = GroupAlgebraElement<Rational>::identity(k);
    for (const auto& jm : jucys_elements(k))
        for (int t = 1; t <= max_order; ++t)
            h[static_cast<size_t>(t)] += ga_multiply(jm, h[static_cast<size_t>(t - 1)]);
    for (int j = 0; j <= max_order; ++j)
        series.orders.push_back(class_collect(h[static_cast<size_t>(j)]));
    return series;
}

bool jucys_series_matches_laurent(int k, int max_order) {
    JucysSeries series = jucys_series(k, max_order);
    WeingartenFunction<RationalFunctionInD> wg = wg_characters_symbolic(k);
    for (const auto& [mu, f] : wg.values) {
        auto laurent = f.laurent_at_infinity(k + max_order);
        std::map<int, Rational> coeff;
        for (const auto& [t, c] : laurent) coeff[t] = c;
        for (int j = 0; j <= max_order; ++j) {
            Rational alpha = series.orders[static_cast<size_t>(j)].value(mu);
            Rational expect = j % 2 == 0 ? alpha : -alpha;
            auto it = coeff.find(k + j);
            Rational got = it == coeff.end() ? Rational(0) : it->second;
            if (got != expect) return false;
        }
    }
    return true;
}

}  // namespace wgcalc

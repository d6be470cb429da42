#include "wgcalc/connection.hpp"

#include <stdexcept>

namespace wgcalc {

Integer connection_coefficient(const Partition& mu, const Partition& mu1, const Partition& mu2) {
    int k = mu.size();
    if (mu1.size() != k || mu2.size() != k)
        throw std::invalid_argument("connection_coefficient: partition size mismatch");
    const CharacterTable& tab = character_table(k);
    // A[μ;μ1,μ2] = (|C_μ1||C_μ2|/k!) Σ_λ χ_λ(μ1)χ_λ(μ2)χ_λ(μ)/χ_λ(1)
    Rational acc(0);
    for (const Partition& lam : tab.classes) {
        Rational term = Rational(tab.value(lam, mu1)) * Rational(tab.value(lam, mu2)) *
                        Rational(tab.value(lam, mu));
        acc += term / Rational(dim_irrep(lam));
    }
    acc *= Rational(class_size(mu1) * class_size(mu2), factorial(k));
    if (!acc.is_integer() || acc.sign() < 0)
        throw std::logic_error("connection_coefficient: non-integral result");
    return acc.num();
}

ClassFunction<Rational> class_product(const Partition& mu1, const Partition& mu2) {
    int k = mu1.size();
    if (mu2.size() != k) throw std::invalid_argument("class_product: partition size mismatch");
    ClassFunction<Rational> out(k);
    for (const Partition& mu : partitions_of(k))
        out.set(mu, Rational(connection_coefficient(mu, mu1, mu2)));
    return out;
}

ClassFunction<Rational> brute_force_class_product(const Partition& mu1, const Partition& mu2) {
    int k = mu1.size();
    if (mu2.size() != k)
        throw std::invalid_argument("brute_force_class_product: partition size mismatch");
    if (k > 6) throw capacity_error("brute_force_class_product: k exceeds bound 6");
    ClassFunction<Rational> out(k);
    for (const Partition& mu : partitions_of(k)) {
        const Permutation& rep = conjugacy_class(mu).front();
        long count = 0;
        for (const Permutation& s1 : conjugacy_class(mu1))
            if (s1.inverse().compose(rep).cycle_type() == mu2) count++;
        out.set(mu, Rational(count));
    }
    return out;
}

const ClassFunction<Rational>& ConnectionTable::product(const Partition& mu1,
                                                        const Partition& mu2) const {
    auto it = products.find({mu1, mu2});
    if (it == products.end())
        throw std::invalid_argument("ConnectionTable: missing product " + mu1.to_string() + "·" +
                                    mu2.to_string());
    return it->second;
}

ConnectionTable connection_table(int k) {
    ConnectionTable tab;
    tab.k = k;
    std::vector<Partition> classes = partitions_of(k);
    for (const Partition& a : classes)
        for (const Partition& b : classes)
            tab.products.emplace(std::make_pair(a, b), class_product(a, b));
    return tab;
}

namespace {

// Class-algebra element with truncated integer Laurent data: value[μ][h] is
// the coefficient of d^{−h} C_μ.
using TruncatedSeries = std::map<Partition, std::map<int, Integer>>;

TruncatedSeries series_multiply(const TruncatedSeries& a,
                                const std::map<Partition, int>& t_degrees,
                                const ConnectionTable& contab, int h_max) {
    // multiply by T = Σ_{ν ≠ 1^k} d^{−|ν|} C_ν
    TruncatedSeries out;
    for (const auto& [mu1, poly] : a) {
        for (const auto& [nu, dnu] : t_degrees) {
            const ClassFunction<Rational>& prod = contab.product(mu1, nu);
            for (const auto& [h, c] : poly) {
                if (h + dnu > h_max) continue;
                for (const auto& [mu, acoef] : prod.values())
                    out[mu][h + dnu] += c * acoef.num();
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        auto& poly = it->second;
        for (auto jt = poly.begin(); jt != poly.end();)
            jt = jt->second == 0 ? poly.erase(jt) : std::next(jt);
        it = poly.empty() ? out.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace

std::map<std::pair<Partition, int>, Integer> collins_expansion(int k, int h_max) {
    if (h_max < k - 1) throw std::invalid_argument("collins_expansion: h_max must be >= k-1");
    ConnectionTable contab = connection_table(k);
    std::map<Partition, int> t_degrees;  // ν ≠ 1^k with degree |ν|
    for (const Partition& nu : partitions_of(k))
        if (nu.perm_length() > 0) t_degrees[nu] = nu.perm_length();

    std::map<std::pair<Partition, int>, Integer> out;
    // power = T^i, accumulated with sign (−1)^i
    TruncatedSeries power;
    {
        Partition identity_class(std::vector<int>(static_cast<size_t>(k), 1));
        power[identity_class][0] = 1;  // T^0 = C_{1^k}, the unit
    }
    for (int i = 1; i <= h_max; ++i) {
        power = series_multiply(power, t_degrees, contab, h_max);
        if (power.empty()) break;
        for (const auto& [mu, poly] : power)
            for (const auto& [h, c] : poly) out[{mu, h}] += (i % 2 == 0 ? c : -c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

TopCoefficients top_coefficients(int k) {
    TopCoefficients top;
    top.k = k;
    Partition identity_class(std::vector<int>(static_cast<size_t>(k), 1));
    top.values[identity_class] = 1;  // the "1 +" constant term
    if (k == 1) return top;

    ConnectionTable contab = connection_table(k);
    // geometric series in the degenerate algebra: products keep only the
    // length-additive part, so I = span{C̃_ν : ν ≠ 1^k} is nilpotent
    std::map<Partition, Integer> power;  // T̃^i in the class basis
    for (const Partition& nu : partitions_of(k))
        if (nu.perm_length() > 0) power[nu] = 1;
    std::map<Partition, Integer> acc;
    int i = 1;
    while (!power.empty()) {
        for (const auto& [mu, c] : power) acc[mu] += (i % 2 == 0 ? c : -c);
        std::map<Partition, Integer> next;
        for (const auto& [mu1, c] : power) {
            for (const Partition& nu : partitions_of(k)) {
                if (nu.perm_length() == 0) continue;
                const ClassFunction<Rational>& prod = contab.product(mu1, nu);
                for (const auto& [mu, acoef] : prod.values())
                    if (mu.perm_length() == mu1.perm_length() + nu.perm_length())
                        next[mu] += c * acoef.num();
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        power = std::move(next);
        i++;
    }
    for (const auto& [mu, c] : acc)
        if (c != 0) top.values[mu] = c;
    return top;
}

namespace {

long count_factorizations(const Permutation& sigma, int factors,
                          const std::vector<Permutation>& nonidentity) {
    // factorizations σ = σ1···σ_i, all σ_j ≠ 1, with Σ|σ_j| = |σ|
    if (factors == 1) return sigma.is_identity() ? 0 : 1;
    long acc = 0;
    for (const Permutation& s1 : nonidentity) {
        if (s1.length() >= sigma.length()) continue;
        Permutation rest = s1.inverse().compose(sigma);
        if (rest.length() != sigma.length() - s1.length()) continue;
        acc += count_factorizations(rest, factors - 1, nonidentity);
    }
    return acc;
}

}  // namespace

Integer top_coefficient_brute(const Partition& mu) {
    int k = mu.size();
    if (k > 5) throw capacity_error("top_coefficient_brute: k exceeds bound 5");
    if (mu.perm_length() == 0) return 1;
    std::vector<Permutation> nonidentity;
    for (const Permutation& p : all_permutations(k))
        if (!p.is_identity()) nonidentity.push_back(p);
    const Permutation& rep = conjugacy_class(mu).front();
    Integer acc = 0;
    for (int i = 1; i <= mu.perm_length(); ++i) {
        long c = count_factorizations(rep, i, nonidentity);
        acc += (i % 2 == 0 ? c : -c);
    }
    return acc;
}

Integer top_coefficient_catalan(const Partition& mu) {
    Integer prod = 1;
    for (int idx = 0; idx < mu.height(); ++idx) {
        int a = mu.part(idx);
        Integer c = catalan(a - 1);
        if ((a - 1) % 2 != 0) c = -c;
        prod *= c;
    }
    return prod;
}

MultiplicativityReport verify_collins_multiplicativity(int k) {
    if (k > 8) throw capacity_error("verify_collins_multiplicativity: k exceeds bound 8");
    MultiplicativityReport report;
    report.k = k;
    TopCoefficients top = top_coefficients(k);
    WeingartenFunction<RationalFunctionInD> wg = wg_characters_symbolic(k);
    for (const Partition& mu : partitions_of(k)) {
        Integer computed = top.values.count(mu) ? top.values.at(mu) : Integer(0);
        Integer expected = top_coefficient_catalan(mu);
        if (computed != expected)
            report.mismatches.push_back("C" + mu.to_string() + " = " + computed.get_str() +
                                        " but Catalan product gives " + expected.get_str());
        auto [t, lead] = wg.at(mu).leading_at_infinity();
        if (t != k + mu.perm_length() || lead != Rational(computed))
            report.mismatches.push_back("C" + mu.to_string() +
                                        " does not match the Wg leading Laurent coefficient");
    }
    return report;
}

}  // namespace wgcalc

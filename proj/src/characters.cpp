#include "wgcalc/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wgcalc {

int CharacterTable::index_of(const Partition& mu) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), mu);
    if (it == classes.end() || *it != mu)
        throw std::invalid_argument("CharacterTable: unknown partition " + mu.to_string());
    return static_cast<int>(it - classes.begin());
}

long CharacterTable::value(const Partition& lambda, const Partition& mu) const {
    return chi[static_cast<size_t>(index_of(lambda))][static_cast<size_t>(index_of(mu))];
}

namespace {

// Border strips of size t removable from λ, via beta numbers: first-column
// hook lengths β_i = λ_i + (m − i). Removing a strip of size t replaces some
// β_i by β_i − t (valid when the new value is fresh and nonnegative); the
// strip height parity is the number of β_j passed over.
struct StripRemoval {
    Partition rest;
    int sign;  // (−1)^{height−1}
};

std::vector<StripRemoval> remove_strips(const Partition& lambda, int t) {
    std::vector<StripRemoval> out;
    int m = lambda.height();
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) beta[static_cast<size_t>(i)] = lambda.part(i) + (m - 1 - i);
    for (int i = 0; i < m; ++i) {
        int nb = beta[static_cast<size_t>(i)] - t;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int crossings = 0;
        for (int j = 0; j < m; ++j)
            if (j != i && beta[static_cast<size_t>(j)] > nb && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)])
                crossings++;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> parts;
        for (int j = 0; j < m; ++j) {
            int p = nbeta[static_cast<size_t>(j)] - (m - 1 - j);
            if (p > 0) parts.push_back(p);
        }
        out.push_back({Partition(parts), crossings % 2 == 0 ? 1 : -1});
    }
    return out;
}

using MemoKey = std::pair<Partition, Partition>;

long mn_character(const Partition& lambda, const Partition& mu,
                       std::map<MemoKey, long>& memo) {
    if (lambda.size() == 0) return 1;
    MemoKey key{lambda, mu};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int t = mu.part(0);
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    Partition rest(rest_parts);
    long acc = 0;
    for (const StripRemoval& sr : remove_strips(lambda, t))
        acc += sr.sign * mn_character(sr.rest, rest, memo);
    memo.emplace(key, acc);
    return acc;
}

std::map<MemoKey, long>& character_memo() {
    static std::map<MemoKey, long> memo;
    return memo;
}

std::mutex& character_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character: |λ| = " + std::to_string(lambda.size()) +
                                    " but |μ| = " + std::to_string(mu.size()));
    std::lock_guard<std::mutex> lock(character_mutex());
    return mn_character(lambda, mu, character_memo());
}

const CharacterTable& character_table(int k) {
    if (k > 12) throw capacity_error("character_table: k exceeds bound 12");
    static std::map<int, CharacterTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    CharacterTable tab;
    tab.k = k;
    tab.classes = partitions_of(k);
    size_t n = tab.classes.size();
    tab.chi.assign(n, std::vector<long>(n, 0));
    {
        std::lock_guard<std::mutex> clock(character_mutex());
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                tab.chi[i][j] = mn_character(tab.classes[i], tab.classes[j], character_memo());
    }
    return cache.emplace(k, std::move(tab)).first->second;
}

Integer dim_irrep(const Partition& lambda) {
    Integer hooks = 1;
    for (const BoxStats& b : hooks_and_contents(lambda)) hooks *= b.hook;
    return factorial(lambda.size()) / hooks;
}

Rational schur_dim(const Partition& lambda, long d) {
    Rational prod(1);
    for (const BoxStats& b : hooks_and_contents(lambda))
        prod *= Rational(d + b.content, b.hook);
    return prod;
}

PolynomialInD r_lambda_poly(const Partition& lambda) {
    std::vector<Rational> roots;
    for (const BoxStats& b : hooks_and_contents(lambda)) roots.push_back(Rational(-b.content));
    return PolynomialInD::from_roots(roots);
}

Rational r_lambda_at(const Partition& lambda, const Rational& d) {
    Rational prod(1);
    for (const BoxStats& b : hooks_and_contents(lambda)) prod *= d + Rational(b.content);
    return prod;
}

GroupAlgebraElement<Rational> central_idempotent(const Partition& lambda) {
    int k = lambda.size();
    if (k > 8) throw capacity_error("central_idempotent: k exceeds bound 8");
    const CharacterTable& tab = character_table(k);
    Rational scale(dim_irrep(lambda), factorial(k));
    GroupAlgebraElement<Rational> e(k);
    int il = tab.index_of(lambda);
    // group by class to avoid recomputing χ per permutation
    for (size_t j = 0; j < tab.classes.size(); ++j) {
        Rational c = scale * Rational(tab.chi[static_cast<size_t>(il)][j]);
        if (c.is_zero()) continue;
        for (const Permutation& p : conjugacy_class(tab.classes[j])) e.add_term(p, c);
    }
    return e;
}

}  // namespace wgcalc

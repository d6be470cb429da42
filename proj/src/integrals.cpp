#include "wgcalc/integrals.hpp"

#include <stdexcept>

namespace wgcalc {

void MonomialSpec::validate() const {
    if (d < 1) throw std::invalid_argument("MonomialSpec: d must be >= 1");
    for (const auto& [a, b] : u)
        if (a < 1 || a > d || b < 1 || b > d)
            throw std::invalid_argument("MonomialSpec: index out of range 1..d");
    for (const auto& [a, b] : ubar)
        if (a < 1 || a > d || b < 1 || b > d)
            throw std::invalid_argument("MonomialSpec: index out of range 1..d");
}

namespace {

// All bijections ℓ ↦ m with m ∈ candidates[ℓ] (backtracking over the sparse
// candidate sets; the sets are cosets of index-repetition stabilizers).
void enumerate_sdr(const std::vector<std::vector<int>>& candidates, size_t pos,
                   std::vector<uint8_t>& img, std::vector<bool>& used,
                   std::vector<Permutation>& out) {
    size_t k = candidates.size();
    if (pos == k) {
        out.push_back(Permutation(img));
        return;
    }
    for (int m : candidates[pos]) {
        if (used[static_cast<size_t>(m)]) continue;
        used[static_cast<size_t>(m)] = true;
        img[pos] = static_cast<uint8_t>(m);
        enumerate_sdr(candidates, pos + 1, img, used, out);
        used[static_cast<size_t>(m)] = false;
    }
}

std::vector<Permutation> matching_permutations(const std::vector<std::vector<int>>& candidates) {
    std::vector<Permutation> out;
    std::vector<uint8_t> img(candidates.size());
    std::vector<bool> used(candidates.size(), false);
    enumerate_sdr(candidates, 0, img, used, out);
    return out;
}

}  // namespace

std::map<Partition, Integer> integral_pair_counts(const MonomialSpec& m) {
    size_t k = m.u.size();
    std::map<Partition, Integer> counts;
    if (k != m.ubar.size()) return counts;  // vanishing case: empty count map
    if (k == 0) return counts;

    // γ(ℓ) = position m with i_m = j_ℓ ; σ(ℓ) = position m with p_m = h_ℓ
    std::vector<std::vector<int>> gamma_cand(k), sigma_cand(k);
    for (size_t l = 0; l < k; ++l) {
        for (size_t pos = 0; pos < k; ++pos) {
            if (m.ubar[pos].first == m.u[l].first) gamma_cand[l].push_back(static_cast<int>(pos));
            if (m.ubar[pos].second == m.u[l].second) sigma_cand[l].push_back(static_cast<int>(pos));
        }
    }
    std::vector<Permutation> gammas = matching_permutations(gamma_cand);
    if (gammas.empty()) return counts;
    std::vector<Permutation> sigmas = matching_permutations(sigma_cand);
    for (const Permutation& g : gammas)
        for (const Permutation& s : sigmas) counts[g.compose(s.inverse()).cycle_type()] += 1;
    return counts;
}

Rational monomial_integral(const MonomialSpec& m) {
    m.validate();
    if (m.u.size() != m.ubar.size()) return Rational(0);
    if (m.u.empty()) return Rational(1);
    int k = static_cast<int>(m.u.size());
    std::map<Partition, Integer> counts = integral_pair_counts(m);
    if (counts.empty()) return Rational(0);
    WeingartenFunction<Rational> wg = wg_characters(k, m.d);
    Rational acc(0);
    for (const auto& [mu, c] : counts) acc += Rational(c) * wg.at(mu);
    return acc;
}

RationalFunctionInD monomial_integral_symbolic(const MonomialSpec& m) {
    if (m.u.size() != m.ubar.size()) return RationalFunctionInD();
    if (m.u.empty()) return RationalFunctionInD(Rational(1));
    int k = static_cast<int>(m.u.size());
    std::map<Partition, Integer> counts = integral_pair_counts(m);
    if (counts.empty()) return RationalFunctionInD();
    WeingartenFunction<RationalFunctionInD> wg = wg_characters_symbolic(k);
    RationalFunctionInD acc;
    for (const auto& [mu, c] : counts)
        acc += wg.at(mu) * RationalFunctionInD(Rational(c));
    return acc;
}

Rational wg_via_monomial(int d, const Permutation& tau) {
    int k = tau.degree();
    if (k > d) throw std::invalid_argument("wg_via_monomial: requires k <= d");
    MonomialSpec m;
    m.d = d;
    for (int l = 1; l <= k; ++l) {
        m.u.emplace_back(tau(l), l);   // u_{τ(ℓ), ℓ}
        m.ubar.emplace_back(l, l);     // ū_{ℓ, ℓ}
    }
    return monomial_integral(m);
}

}  // namespace wgcalc

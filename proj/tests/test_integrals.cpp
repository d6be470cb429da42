#include "doctest.h"

#include <cmath>

#include "wgcalc/haar_mc.hpp"
#include "wgcalc/integrals.hpp"
#include "wgcalc/tensor_ops.hpp"

using namespace wgcalc;

namespace {

MonomialSpec spec2(int d, std::vector<std::pair<int, int>> u, std::vector<std::pair<int, int>> ubar) {
    MonomialSpec m;
    m.d = d;
    m.u = std::move(u);
    m.ubar = std::move(ubar);
    return m;
}

}  // namespace

TEST_CASE("worked monomial integrals") {
    SUBCASE("single entry: 1/d") {
        CHECK(monomial_integral(spec2(2, {{1, 1}}, {{1, 1}})) == Rational(1, 2));
        CHECK(monomial_integral(spec2(3, {{1, 1}}, {{1, 1}})) == Rational(1, 3));
    }
    SUBCASE("u11 u22 conj(u11) conj(u22) = 1/(d^2-1)") {
        auto m = spec2(2, {{1, 1}, {2, 2}}, {{1, 1}, {2, 2}});
        CHECK(monomial_integral(m) == Rational(1, 3));
        auto counts = integral_pair_counts(m);
        REQUIRE(counts.size() == 1);  // only (γ,σ) = (id,id)
        CHECK(counts.at(Partition({1, 1})) == 1);
    }
    SUBCASE("u11 u12 conj(u11) conj(u12) = 1/(d(d+1))") {
        auto m = spec2(2, {{1, 1}, {1, 2}}, {{1, 1}, {1, 2}});
        CHECK(monomial_integral(m) == Rational(1, 6));
        auto counts = integral_pair_counts(m);  // γ free over S_2, σ = id
        CHECK(counts.at(Partition({1, 1})) == 1);
        CHECK(counts.at(Partition({2})) == 1);
    }
    SUBCASE("|u11|^4 = 2/(d(d+1))") {
        auto m = spec2(2, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
        CHECK(monomial_integral(m) == Rational(1, 3));
    }
    SUBCASE("u11 u22 conj(u12) conj(u21) = -1/(d(d^2-1))") {
        auto m = spec2(2, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}});
        CHECK(monomial_integral(m) == Rational(-1, 6));
    }
    SUBCASE("unbalanced monomials vanish") {
        CHECK(monomial_integral(spec2(2, {{1, 1}}, {})) == Rational(0));
        CHECK(monomial_integral(spec2(3, {{1, 1}, {2, 2}}, {{1, 1}})) == Rational(0));
    }
    SUBCASE("mismatched index patterns vanish") {
        CHECK(monomial_integral(spec2(2, {{1, 1}}, {{2, 2}})) == Rational(0));
    }
    SUBCASE("index validation") {
        CHECK_THROWS_AS(monomial_integral(spec2(2, {{3, 1}}, {{3, 1}})), std::invalid_argument);
    }
    SUBCASE("symbolic route") {
        PolynomialInD d = PolynomialInD::variable();
        auto m = spec2(2, {{1, 1}, {2, 2}}, {{1, 1}, {2, 2}});
        CHECK(monomial_integral_symbolic(m) ==
              RationalFunctionInD(PolynomialInD(1), d * d - PolynomialInD(1)));
        auto m2 = spec2(2, {{1, 1}, {1, 2}}, {{1, 1}, {1, 2}});
        CHECK(monomial_integral_symbolic(m2) ==
              RationalFunctionInD(PolynomialInD(1), d * (d + PolynomialInD(1))));
    }
}

TEST_CASE("relabeling invariance of the factors") {
    // permuting the k factor slots simultaneously leaves the integral fixed
    auto m = spec2(3, {{1, 2}, {2, 2}, {1, 3}}, {{1, 2}, {2, 3}, {1, 2}});
    Rational base = monomial_integral(m);
    for (const Permutation& s : all_permutations(3)) {
        MonomialSpec r;
        r.d = 3;
        r.u.resize(3);
        r.ubar.resize(3);
        for (int l = 1; l <= 3; ++l) {
            r.u[static_cast<size_t>(s(l) - 1)] = m.u[static_cast<size_t>(l - 1)];
            r.ubar[static_cast<size_t>(s(l) - 1)] = m.ubar[static_cast<size_t>(l - 1)];
        }
        CHECK(monomial_integral(r) == base);
    }
}

TEST_CASE("wg_via_monomial reproduces the character route") {
    SUBCASE("d=3, k=2") {
        CHECK(wg_via_monomial(3, Permutation::identity(2)) == Rational(1, 8));
        CHECK(wg_via_monomial(3, Permutation::transposition(2, 1, 2)) == Rational(-1, 24));
    }
    SUBCASE("d=3, full cycle in S_3 gives 1/60") {
        CHECK(wg_via_monomial(3, Permutation::parse(3, "(1 2 3)")) == Rational(1, 60));
    }
    SUBCASE("all of S_2 and S_3 at d=3") {
        for (int k = 2; k <= 3; ++k) {
            auto wg = wg_characters(k, 3);
            for (const Permutation& tau : all_permutations(k))
                CHECK(wg_via_monomial(3, tau) == wg.at(tau.cycle_type()));
        }
    }
    SUBCASE("k > d rejected") {
        CHECK_THROWS_AS(wg_via_monomial(2, Permutation::identity(3)), std::invalid_argument);
    }
}

TEST_CASE("phi map") {
    SUBCASE("Phi(1) = P for k=2, d=2") {
        auto phi = phi_map(TensorOperator::identity(2, 2));
        CHECK(phi.coefficient(Permutation::identity(2)) == Rational(4));
        CHECK(phi.coefficient(Permutation::transposition(2, 1, 2)) == Rational(2));
        CHECK(phi == class_expand(p_element(2, Rational(2))));
    }
    SUBCASE("Phi(tau) = Phi(1)·tau") {
        for (const Permutation& tau : all_permutations(2)) {
            auto lhs = phi_map(TensorOperator::permutation_operator(tau, 2));
            auto rhs = ga_multiply(phi_map(TensorOperator::identity(2, 2)),
                                   GroupAlgebraElement<Rational>::unit(tau));
            CHECK(lhs == rhs);
        }
        for (const Permutation& tau : all_permutations(3)) {
            auto lhs = phi_map(TensorOperator::permutation_operator(tau, 2));
            auto rhs = ga_multiply(phi_map(TensorOperator::identity(2, 3)),
                                   GroupAlgebraElement<Rational>::unit(tau));
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("Phi(e11 x e11) = id + (12) at d=2") {
        auto phi = phi_map(TensorOperator::elementary(2, {0, 0}, {0, 0}));
        CHECK(phi.coefficient(Permutation::identity(2)) == Rational(1));
        CHECK(phi.coefficient(Permutation::transposition(2, 1, 2)) == Rational(1));
        CHECK(phi.term_count() == 2);
    }
}

TEST_CASE("trace factorization over cycles (random rational tuples)") {
    // tr(X1 ⊗ … ⊗ Xk ∘ σ⁻¹) = Π over cycles (i1…ih) of tr(X_{i1}···X_{ih})
    for (int d = 2; d <= 3; ++d) {
        for (int k = 2; k <= 4; ++k) {
            // deterministic pseudo-random rational matrices
            long state = 12345 + 17 * d + k;
            auto next = [&state]() {
                state = (state * 1103515245 + 12345) % 2147483647;
                return Rational(state % 7 - 3, 1 + state % 3);
            };
            std::vector<std::vector<Rational>> mats(static_cast<size_t>(k));
            for (auto& mat : mats) {
                mat.resize(static_cast<size_t>(d * d));
                for (auto& v : mat) v = next();
            }
            TensorOperator big(d, k);
            std::vector<int> row(static_cast<size_t>(k)), col(static_cast<size_t>(k));
            auto fill = [&](auto&& self, int slot) -> void {
                if (slot == k) {
                    Rational prod(1);
                    for (int s = 0; s < k; ++s)
                        prod *= mats[static_cast<size_t>(s)][static_cast<size_t>(
                            row[static_cast<size_t>(s)] * d + col[static_cast<size_t>(s)])];
                    big.add_entry(row, col, prod);
                    return;
                }
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) {
                        row[static_cast<size_t>(slot)] = r;
                        col[static_cast<size_t>(slot)] = c;
                        self(self, slot + 1);
                    }
            };
            fill(fill, 0);
            for (const Permutation& s : all_permutations(k)) {
                Rational lhs =
                    big.compose(TensorOperator::permutation_operator(s.inverse(), d)).trace();
                // product over cycles
                Rational rhs(1);
                std::vector<bool> seen(static_cast<size_t>(k + 1), false);
                for (int i = 1; i <= k; ++i) {
                    if (seen[static_cast<size_t>(i)]) continue;
                    std::vector<int> cyc;
                    int x = i;
                    while (!seen[static_cast<size_t>(x)]) {
                        seen[static_cast<size_t>(x)] = true;
                        cyc.push_back(x);
                        x = s(x);
                    }
                    std::vector<Rational> prod(static_cast<size_t>(d * d), Rational(0));
                    for (int r = 0; r < d; ++r) prod[static_cast<size_t>(r * d + r)] = Rational(1);
                    for (int v : cyc) {
                        std::vector<Rational> nxt(static_cast<size_t>(d * d), Rational(0));
                        for (int r = 0; r < d; ++r)
                            for (int c = 0; c < d; ++c)
                                for (int t = 0; t < d; ++t)
                                    nxt[static_cast<size_t>(r * d + c)] +=
                                        prod[static_cast<size_t>(r * d + t)] *
                                        mats[static_cast<size_t>(v - 1)][static_cast<size_t>(t * d + c)];
                        prod = nxt;
                    }
                    Rational tr(0);
                    for (int r = 0; r < d; ++r) tr += prod[static_cast<size_t>(r * d + r)];
                    rhs *= tr;
                }
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("projection E") {
    SUBCASE("E(identity) is the identity of Q[S_k]") {
        auto res = projection_E(TensorOperator::identity(2, 2));
        CHECK(res.element == GroupAlgebraElement<Rational>::identity(2));
        CHECK_FALSE(res.restricted);
    }
    SUBCASE("E fixes permutation operators, k=2, d=2") {
        for (const Permutation& s : all_permutations(2)) {
            auto res = projection_E(TensorOperator::permutation_operator(s, 2));
            CHECK(res.element == GroupAlgebraElement<Rational>::unit(s));
        }
    }
    SUBCASE("restricted flag for d < k") {
        CHECK(projection_E(TensorOperator::identity(2, 3)).restricted);
    }
    SUBCASE("integral formula = trace against E, d=2, k=2, exhaustive") {
        int d = 2;
        // E(e_{h,p}) for all 16 pairs, then
        // ∫ u_{j̲,h̲} ū_{i̲,p̲} = tr(e_{i̲,j̲} ∘ E(e_{h̲,p̲})_op)
        std::vector<MultiIndex> idx = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        for (const MultiIndex& h : idx) {
            for (const MultiIndex& p : idx) {
                auto e_hp = TensorOperator::elementary(d, h, p);
                TensorOperator e_proj = ga_to_operator(projection_E(e_hp).element, d);
                for (const MultiIndex& i : idx) {
                    for (const MultiIndex& j : idx) {
                        MonomialSpec m;
                        m.d = d;
                        for (int l = 0; l < 2; ++l) {
                            m.u.emplace_back(j[static_cast<size_t>(l)] + 1, h[static_cast<size_t>(l)] + 1);
                            m.ubar.emplace_back(i[static_cast<size_t>(l)] + 1, p[static_cast<size_t>(l)] + 1);
                        }
                        Rational lhs = monomial_integral(m);
                        Rational rhs =
                            TensorOperator::elementary(d, i, j).compose(e_proj).trace();
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("monte carlo oracle stays within 4 standard errors") {
    struct Case {
        MonomialSpec m;
        double exact;
    };
    std::vector<Case> cases = {
        {spec2(2, {{1, 1}}, {{1, 1}}), 0.5},
        {spec2(2, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}), 1.0 / 3},
        {spec2(2, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}), -1.0 / 6},
        {spec2(3, {{1, 1}}, {{1, 1}}), 1.0 / 3},
        {spec2(3, {{1, 1}, {2, 2}}, {{1, 1}, {2, 2}}), 1.0 / 8},
    };
    uint64_t seed = 20240601;
    for (const auto& c : cases) {
        McEstimate est = haar_mc_oracle(c.m, 20000, seed++);
        CHECK(std::abs(est.mean_re - c.exact) <= 4 * est.stderr_re + 1e-12);
        CHECK(std::abs(est.mean_im) <= 4 * est.stderr_im + 1e-12);
    }
    CHECK_THROWS_AS(haar_mc_oracle(cases[0].m, 10, 1), std::invalid_argument);
}

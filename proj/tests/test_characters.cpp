#include "doctest.h"

#include "wgcalc/characters.hpp"
#include "wgcalc/group_algebra.hpp"

using namespace wgcalc;

TEST_CASE("full-cycle characters: hooks give (-1)^{k-a}, others vanish") {
    for (int k = 2; k <= 7; ++k) {
        Partition full({k});
        for (const Partition& lam : partitions_of(k)) {
            bool is_hook = lam.height() == 1 || lam.part(1) == 1;
            long expect = 0;
            if (is_hook) {
                int a = lam.part(0);
                expect = (k - a) % 2 == 0 ? 1 : -1;
            }
            CHECK(character(lam, full) == expect);
        }
    }
    CHECK(character(Partition({2, 2}), Partition({4})) == 0);
}

TEST_CASE("small character values") {
    CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character(Partition({2, 1}), Partition({2, 1})) == 0);
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character(Partition({1, 1}), Partition({2})) == -1);
    CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("dimensions: hook and hook-content formulas") {
    CHECK(dim_irrep(Partition({2, 1})) == 2);
    CHECK(schur_dim(Partition({2, 1}), 3) == Rational(8));
    CHECK(schur_dim(Partition({1, 1}), 1) == Rational(0));
    CHECK(schur_dim(Partition({3}), 2) == Rational(4));  // binomial(d+k−1, k)
    CHECK(dim_irrep(Partition({4, 2, 1})) == 35);
    // χ_λ(1^k) from the table equals the hook formula, k ≤ 8
    for (int k = 1; k <= 8; ++k) {
        Partition ones(std::vector<int>(static_cast<size_t>(k), 1));
        for (const Partition& lam : partitions_of(k)) {
            CHECK(Integer(character(lam, ones)) == dim_irrep(lam));
            CHECK(dim_irrep(lam) > 0);
        }
    }
}

TEST_CASE("character orthogonality and column sums, k <= 8") {
    for (int k = 1; k <= 8; ++k) {
        const CharacterTable& tab = character_table(k);
        size_t n = tab.classes.size();
        std::vector<Integer> sizes;
        for (const Partition& mu : tab.classes) sizes.push_back(class_size(mu));
        Integer kfact = factorial(k);
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = a; b < n; ++b) {
                Integer dot = 0;
                for (size_t j = 0; j < n; ++j) dot += sizes[j] * tab.chi[a][j] * tab.chi[b][j];
                CHECK(dot == (a == b ? kfact : Integer(0)));
            }
        }
        Integer sq = 0;
        size_t ones_idx = n - 1;  // (1^k) is last in canonical order
        for (size_t a = 0; a < n; ++a) sq += Integer(tab.chi[a][ones_idx]) * tab.chi[a][ones_idx];
        CHECK(sq == kfact);
    }
}

TEST_CASE("power-sum identity: d^{c(rho)} = sum over low irreps, k <= 6") {
    for (int k = 1; k <= 6; ++k) {
        for (long d = 1; d <= 6; ++d) {
            for (const Partition& mu : partitions_of(k)) {
                Rational rhs(0);
                for (const Partition& lam : partitions_of(k)) {
                    if (lam.height() > d) continue;
                    rhs += schur_dim(lam, d) * Rational(character(lam, mu));
                }
                CHECK(rhs == Rational(pow_integer(Integer(d), mu.height())));
            }
        }
    }
}

TEST_CASE("content sum matches the c2 scalar formula, k <= 10") {
    for (int k = 1; k <= 10; ++k) {
        for (const Partition& lam : partitions_of(k)) {
            Rational content_sum(0);
            for (const BoxStats& b : hooks_and_contents(lam)) content_sum += Rational(b.content);
            Rational formula(0);
            for (int i = 1; i <= lam.height(); ++i) {
                long li = lam.part(i - 1);
                formula += Rational(li * li - (2 * i - 1) * li, 2);
            }
            CHECK(content_sum == formula);
        }
    }
}

TEST_CASE("central idempotents") {
    SUBCASE("k=2 symmetrizer and antisymmetrizer") {
        auto e2 = central_idempotent(Partition({2}));
        auto e11 = central_idempotent(Partition({1, 1}));
        Permutation id = Permutation::identity(2), t = Permutation::transposition(2, 1, 2);
        CHECK(e2.coefficient(id) == Rational(1, 2));
        CHECK(e2.coefficient(t) == Rational(1, 2));
        CHECK(e11.coefficient(id) == Rational(1, 2));
        CHECK(e11.coefficient(t) == Rational(-1, 2));
    }
    SUBCASE("orthogonal idempotents summing to 1, k = 3, 4") {
        for (int k = 3; k <= 4; ++k) {
            auto parts = partitions_of(k);
            GroupAlgebraElement<Rational> sum(k);
            for (const Partition& lam : parts) {
                auto e = central_idempotent(lam);
                CHECK(ga_multiply(e, e) == e);
                sum += e;
            }
            CHECK(sum == GroupAlgebraElement<Rational>::identity(k));
        }
        CHECK(ga_multiply(central_idempotent(Partition({3})), central_idempotent(Partition({2, 1})))
                  .is_zero());
    }
    SUBCASE("capacity bound") {
        CHECK_THROWS_AS(central_idempotent(Partition({9})), capacity_error);
    }
}

TEST_CASE("r_lambda") {
    PolynomialInD d = PolynomialInD::variable();
    CHECK(r_lambda_poly(Partition({2})) == d * (d + PolynomialInD(1)));
    CHECK(r_lambda_poly(Partition({1, 1})) == d * (d - PolynomialInD(1)));
    CHECK(r_lambda_at(Partition({2, 1}), Rational(3)) == Rational(24));

    // Stanley refinement: the character-route scalar of P on M_λ equals
    // Π (d + c_u) as polynomials in d, k ≤ 8.
    for (int k = 1; k <= 8; ++k) {
        const CharacterTable& tab = character_table(k);
        for (const Partition& lam : tab.classes) {
            PolynomialInD scalar;  // (1/χ_λ(1)) Σ_μ |C_μ| χ_λ(μ) d^{ht(μ)}
            for (const Partition& mu : tab.classes) {
                Rational coeff = Rational(class_size(mu)) * Rational(tab.value(lam, mu));
                std::vector<Rational> mono(static_cast<size_t>(mu.height()) + 1, Rational(0));
                mono.back() = coeff;
                scalar += PolynomialInD::from_coeffs(mono);
            }
            scalar = scalar * (Rational(1) / Rational(dim_irrep(lam)));
            CHECK(scalar == r_lambda_poly(lam));
        }
    }
}

#include "doctest.h"

#include <map>
#include <set>

#include "wgcalc/characters.hpp"
#include "wgcalc/tableaux.hpp"
#include "wgcalc/tensor_ops.hpp"

using namespace wgcalc;

namespace {

// independent oracle for the longest strictly decreasing subsequence
int brute_longest_decreasing(const Permutation& s) {
    int k = s.degree(), best = 0;
    std::vector<int> l(static_cast<size_t>(k + 1), 1);
    for (int i = k; i >= 1; --i) {
        for (int j = i + 1; j <= k; ++j)
            if (s(j) < s(i)) l[static_cast<size_t>(i)] = std::max(l[static_cast<size_t>(i)], 1 + l[static_cast<size_t>(j)]);
        best = std::max(best, l[static_cast<size_t>(i)]);
    }
    return best;
}

}  // namespace

TEST_CASE("syt enumeration counts match dimensions") {
    CHECK(enumerate_syt(Partition({1, 1, 1})).size() == 1);
    CHECK(enumerate_syt(Partition({2, 1})).size() == 2);
    CHECK(enumerate_syt(Partition({4, 2, 1})).size() == 35);
    for (int k = 1; k <= 7; ++k)
        for (const Partition& lam : partitions_of(k))
            CHECK(Integer(static_cast<long>(enumerate_syt(lam).size())) == dim_irrep(lam));
}

TEST_CASE("rsk on words: the strange example") {
    // letters ranked a<e<g<n<r<s<t: s t r a n g e = 6 7 5 1 4 3 2
    WordRsk res = rsk_word({6, 7, 5, 1, 4, 3, 2});
    CHECK(res.shape() == Partition({2, 2, 1, 1, 1}));
    CHECK(res.shape().height() == 5);
    std::vector<std::vector<int>> expect_p = {{1, 2}, {3, 7}, {4}, {5}, {6}};
    CHECK(res.p_rows == expect_p);
    std::vector<std::vector<int>> expect_q = {{1, 2}, {3, 5}, {4}, {6}, {7}};
    CHECK(res.q == StandardTableau(expect_q));
}

TEST_CASE("rsk basic shapes") {
    SUBCASE("identity gives a single row") {
        auto [p, q] = rsk(Permutation::identity(4));
        CHECK(p.shape() == Partition({4}));
        CHECK(p == q);
    }
    SUBCASE("2 1 gives a column") {
        auto [p, q] = rsk(Permutation::parse(2, "2 1"));
        CHECK(p.shape() == Partition({1, 1}));
        CHECK(p == q);
    }
}

TEST_CASE("rsk bijectivity, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::pair<StandardTableau, StandardTableau>> images;
        for (const Permutation& s : all_permutations(n)) {
            auto [p, q] = rsk(s);
            CHECK(p.shape() == q.shape());
            CHECK(rsk_inverse(p, q) == s);
            images.insert({p, q});
        }
        CHECK(images.size() == static_cast<size_t>(factorial(n).get_si()));
        // Σ over shapes of (#SYT)² = n!
        Integer total = 0;
        for (const Partition& lam : partitions_of(n)) {
            Integer cnt(static_cast<long>(enumerate_syt(lam).size()));
            total += cnt * cnt;
        }
        CHECK(total == factorial(n));
    }
    CHECK_THROWS_AS(rsk_inverse(StandardTableau({{1, 2}}), StandardTableau({{1}, {2}})),
                    std::invalid_argument);
}

TEST_CASE("schensted: rsk height = longest decreasing subsequence, n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Permutation& s : all_permutations(n))
            CHECK(longest_decreasing(s) == brute_longest_decreasing(s));
}

TEST_CASE("d-good permutations") {
    CHECK(longest_decreasing(Permutation::parse(3, "3 2 1")) == 3);
    CHECK_FALSE(is_d_good(Permutation::parse(3, "3 2 1"), 3));
    SUBCASE("every permutation is 1-bad") {
        for (const Permutation& s : all_permutations(3)) CHECK_FALSE(is_d_good(s, 1));
    }
    SUBCASE("3-good count in S_4 is 14") {
        int count = 0;
        for (const Permutation& s : all_permutations(4))
            if (is_d_good(s, 3)) count++;
        CHECK(count == 14);
    }
    SUBCASE("good-permutation count equals the dimension of the commutant, k <= 7, d <= 4") {
        for (int k = 1; k <= 7; ++k) {
            std::map<int, long> counts;  // d → #{(d+1)-good}
            for (int d = 1; d <= 4; ++d) counts[d] = 0;
            for (const Permutation& s : all_permutations(k)) {
                int h = longest_decreasing(s);
                for (int d = 1; d <= 4; ++d)
                    if (h <= d) counts[d]++;  // (d+1)-good ⇔ no descent of length d+1
            }
            for (int d = 1; d <= 4; ++d) {
                Integer dim = 0;
                for (const Partition& lam : partitions_of(k)) {
                    if (lam.height() > d) continue;
                    dim += dim_irrep(lam) * dim_irrep(lam);
                }
                CHECK(Integer(counts[d]) == dim);
            }
        }
    }
}

TEST_CASE("straightening") {
    SUBCASE("d=1 sends (12) to the identity") {
        auto a = GroupAlgebraElement<Rational>::unit(Permutation::transposition(2, 1, 2));
        CHECK(straighten(a, 1) == GroupAlgebraElement<Rational>::identity(2));
    }
    SUBCASE("d >= k is the identity map") {
        for (const Permutation& s : all_permutations(3)) {
            auto a = GroupAlgebraElement<Rational>::unit(s, Rational(5, 3));
            CHECK(straighten(a, 3) == a);
            CHECK(straighten(a, 7) == a);
        }
    }
    SUBCASE("output supported on good permutations, integer-preserving, idempotent") {
        for (int k = 3; k <= 5; ++k) {
            for (int d = 1; d <= 3; ++d) {
                GroupAlgebraElement<Rational> a(k);
                int c = 1;
                for (const Permutation& s : all_permutations(k)) a.add_term(s, Rational(c++ % 5 - 2));
                auto result = straighten(a, d);
                for (const auto& [p, coeff] : result.terms()) {
                    CHECK(is_d_good(p, d + 1));
                    CHECK(coeff.is_integer());
                }
                CHECK(straighten(result, d) == result);
            }
        }
    }
    SUBCASE("operator equality on V^{⊗3}, dim V = 2, five sample inputs") {
        int k = 3, d = 2;
        auto perms = all_permutations(k);
        for (int sample = 0; sample < 5; ++sample) {
            GroupAlgebraElement<Rational> a(k);
            long state = 1000 + sample;
            for (const Permutation& s : perms) {
                state = (state * 48271) % 2147483647;
                a.add_term(s, Rational(state % 7 - 3));
            }
            auto result = straighten(a, d);
            CHECK(ga_to_operator(result, d) == ga_to_operator(a, d));
        }
    }
}

TEST_CASE("content vectors") {
    SUBCASE("the (4,2,1) reference tableau") {
        StandardTableau t({{1, 4, 6, 7}, {2, 5}, {3}});
        std::vector<int> expect = {0, -1, -2, 1, 0, 2, 3};
        CHECK(content_vector(t) == expect);
        CHECK(tableau_from_contents(expect) == t);
    }
    SUBCASE("single row") {
        StandardTableau t({{1, 2, 3}});
        CHECK(content_vector(t) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("roundtrip and injectivity over all SYT of size <= 7") {
        for (int n = 1; n <= 7; ++n) {
            std::set<std::vector<int>> seen;
            for (const Partition& lam : partitions_of(n)) {
                for (const StandardTableau& t : enumerate_syt(lam)) {
                    auto c = content_vector(t);
                    CHECK(seen.insert(c).second);
                    CHECK(tableau_from_contents(c) == t);
                }
            }
        }
    }
    SUBCASE("inconsistent sequences rejected") {
        CHECK_THROWS_AS(tableau_from_contents({1}), std::invalid_argument);
        CHECK_THROWS_AS(tableau_from_contents({0, 2}), std::invalid_argument);
        CHECK_THROWS_AS(tableau_from_contents({0, -2}), std::invalid_argument);
    }
}

TEST_CASE("restriction: removing entries > j from an SYT leaves an SYT, n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (const StandardTableau& t : enumerate_syt(lam)) {
                for (int j = 1; j < n; ++j) {
                    std::vector<std::vector<int>> trunc;
                    for (const auto& row : t.rows()) {
                        std::vector<int> r;
                        for (int v : row)
                            if (v <= j) r.push_back(v);
                        if (!r.empty()) trunc.push_back(r);
                    }
                    CHECK_NOTHROW(StandardTableau(trunc));
                }
            }
        }
    }
}

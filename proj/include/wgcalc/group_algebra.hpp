#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "wgcalc/partition.hpp"
#include "wgcalc/permutation.hpp"
#include "wgcalc/polynomial.hpp"

namespace wgcalc {

enum class ProductMode {
    ordinary,
    /// q = 0 degeneration: a term survives only when |σ₁σ₂| = |σ₁| + |σ₂|.
    degenerate,
};

/// Sparse element of Q[S_k] (or of its length-graded degeneration) over a
/// coefficient ring C (Rational or PolynomialInD). No zero coefficients are
/// stored; iteration order is the lexicographic one-line order, so
/// serialization is deterministic.
template <class C>
class GroupAlgebraElement {
public:
    explicit GroupAlgebraElement(int k) : k_(k) {}

    static GroupAlgebraElement identity(int k) {
        GroupAlgebraElement e(k);
        e.add_term(Permutation::identity(k), C(1));
        return e;
    }
    static GroupAlgebraElement unit(const Permutation& p, const C& coeff = C(1)) {
        GroupAlgebraElement e(p.degree());
        e.add_term(p, coeff);
        return e;
    }

    int degree() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Permutation, C>& terms() const { return terms_; }

    C coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Permutation& p, const C& coeff) {
        if (p.degree() != k_)
            throw std::invalid_argument("GroupAlgebraElement: permutation degree mismatch");
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            if (!coeff.is_zero()) terms_.emplace(p, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        check_same_degree(o);
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        check_same_degree(o);
        for (const auto& [p, c] : o.terms_) add_term(p, C(0) - c);
        return *this;
    }
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a += b;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        return a -= b;
    }

    GroupAlgebraElement scaled(const C& s) const {
        GroupAlgebraElement r(k_);
        if (s.is_zero()) return r;
        for (const auto& [p, c] : terms_) {
            C v = c * s;
            if (!v.is_zero()) r.terms_.emplace(p, v);
        }
        return r;
    }

    /// Coefficient-wise star: σ → σ⁻¹.
    GroupAlgebraElement star() const {
        GroupAlgebraElement r(k_);
        for (const auto& [p, c] : terms_) r.add_term(p.inverse(), c);
        return r;
    }

    friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

private:
    void check_same_degree(const GroupAlgebraElement& o) const {
        if (k_ != o.k_) throw std::invalid_argument("GroupAlgebraElement: degree mismatch");
    }
    int k_;
    std::map<Permutation, C> terms_;
};

template <class C>
GroupAlgebraElement<C> ga_multiply(const GroupAlgebraElement<C>& a, const GroupAlgebraElement<C>& b,
                                   ProductMode mode = ProductMode::ordinary) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("ga_multiply: degree mismatch");
    GroupAlgebraElement<C> out(a.degree());
    for (const auto& [p, cp] : a.terms()) {
        for (const auto& [q, cq] : b.terms()) {
            Permutation pq = p.compose(q);
            if (mode == ProductMode::degenerate && pq.length() != p.length() + q.length())
                continue;
            out.add_term(pq, cp * cq);
        }
    }
    return out;
}

/// Central element in the class-sum basis: values are coefficients of C_μ.
template <class C>
class ClassFunction {
public:
    explicit ClassFunction(int k) : k_(k) {}

    int degree() const { return k_; }
    const std::map<Partition, C>& values() const { return values_; }
    bool is_zero() const { return values_.empty(); }

    C value(const Partition& mu) const {
        auto it = values_.find(mu);
        return it == values_.end() ? C(0) : it->second;
    }

    void set(const Partition& mu, const C& v) {
        if (mu.size() != k_)
            throw std::invalid_argument("ClassFunction: partition size mismatch");
        if (v.is_zero())
            values_.erase(mu);
        else
            values_[mu] = v;
    }

    void add(const Partition& mu, const C& v) {
        if (mu.size() != k_)
            throw std::invalid_argument("ClassFunction: partition size mismatch");
        auto it = values_.find(mu);
        if (it == values_.end()) {
            if (!v.is_zero()) values_.emplace(mu, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) values_.erase(it);
        }
    }

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int k_;
    std::map<Partition, C> values_;
};

/// Expands each C_μ over its conjugacy class.
template <class C>
GroupAlgebraElement<C> class_expand(const ClassFunction<C>& f) {
    GroupAlgebraElement<C> out(f.degree());
    for (const auto& [mu, c] : f.values())
        for (const Permutation& p : conjugacy_class(mu)) out.add_term(p, c);
    return out;
}

/// Inverse of class_expand on central elements. Throws (naming a witness
/// pair of conjugate permutations) if the element is not constant on classes.
template <class C>
ClassFunction<C> class_collect(const GroupAlgebraElement<C>& a) {
    ClassFunction<C> out(a.degree());
    std::map<Partition, Permutation> witness;
    for (const auto& [p, c] : a.terms()) {
        Partition mu = p.cycle_type();
        auto it = witness.find(mu);
        if (it == witness.end()) {
            witness.emplace(mu, p);
            out.set(mu, c);
        } else if (!(out.value(mu) == c)) {
            throw std::invalid_argument(
                "class_collect: element not central; conjugate permutations " +
                it->second.to_cycles() + " and " + p.to_cycles() + " carry unequal coefficients");
        }
    }
    // classes touched must be complete
    for (const auto& [mu, c] : out.values()) {
        (void)c;
        size_t expected = conjugacy_class(mu).size();
        size_t found = 0;
        for (const Permutation& p : conjugacy_class(mu))
            if (!a.coefficient(p).is_zero()) found++;
        if (found != expected) {
            // some permutation of the class is missing: witness it
            for (const Permutation& p : conjugacy_class(mu))
                if (a.coefficient(p).is_zero())
                    throw std::invalid_argument(
                        "class_collect: element not central; " + witness.at(mu).to_cycles() +
                        " has nonzero coefficient but conjugate " + p.to_cycles() + " is absent");
        }
    }
    return out;
}

}  // namespace wgcalc

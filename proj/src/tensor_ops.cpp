#include "wgcalc/tensor_ops.hpp"

#include <stdexcept>

namespace wgcalc {

uint64_t TensorOperator::encode(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != k_)
        throw std::invalid_argument("TensorOperator: multi-index length mismatch");
    uint64_t code = 0;
    for (int v : idx) {
        if (v < 0 || v >= d_) throw std::invalid_argument("TensorOperator: index out of range");
        code = code * static_cast<uint64_t>(d_) + static_cast<uint64_t>(v);
    }
    return code;
}

MultiIndex TensorOperator::decode(uint64_t code) const {
    MultiIndex idx(static_cast<size_t>(k_));
    for (int i = k_ - 1; i >= 0; --i) {
        idx[static_cast<size_t>(i)] = static_cast<int>(code % static_cast<uint64_t>(d_));
        code /= static_cast<uint64_t>(d_);
    }
    return idx;
}

TensorOperator TensorOperator::identity(int d, int k) {
    TensorOperator t(d, k);
    uint64_t n = 1;
    for (int i = 0; i < k; ++i) n *= static_cast<uint64_t>(d);
    for (uint64_t c = 0; c < n; ++c) t.entries_[{c, c}] = Rational(1);
    return t;
}

TensorOperator TensorOperator::permutation_operator(const Permutation& sigma, int d) {
    int k = sigma.degree();
    TensorOperator t(d, k);
    uint64_t n = 1;
    for (int i = 0; i < k; ++i) n *= static_cast<uint64_t>(d);
    for (uint64_t c = 0; c < n; ++c) {
        MultiIndex col = t.decode(c);
        MultiIndex row(static_cast<size_t>(k));
        // slot j of the output carries the input slot σ⁻¹(j)
        for (int j = 1; j <= k; ++j)
            row[static_cast<size_t>(j - 1)] = col[static_cast<size_t>(sigma.inverse()(j) - 1)];
        t.entries_[{t.encode(row), c}] = Rational(1);
    }
    return t;
}

TensorOperator TensorOperator::elementary(int d, const MultiIndex& i, const MultiIndex& j) {
    if (i.size() != j.size())
        throw std::invalid_argument("TensorOperator::elementary: index length mismatch");
    TensorOperator t(d, static_cast<int>(i.size()));
    t.entries_[{t.encode(i), t.encode(j)}] = Rational(1);
    return t;
}

void TensorOperator::add_entry(const MultiIndex& row, const MultiIndex& col, const Rational& v) {
    add_entry_coded(encode(row), encode(col), v);
}

void TensorOperator::add_entry_coded(uint64_t row, uint64_t col, const Rational& v) {
    if (v.is_zero()) return;
    auto it = entries_.find({row, col});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(row, col), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

Rational TensorOperator::at(const MultiIndex& row, const MultiIndex& col) const {
    auto it = entries_.find({encode(row), encode(col)});
    return it == entries_.end() ? Rational(0) : it->second;
}

TensorOperator TensorOperator::compose(const TensorOperator& other) const {
    if (d_ != other.d_ || k_ != other.k_)
        throw std::invalid_argument("TensorOperator: shape mismatch in composition");
    // group the right factor's entries by row
    std::map<uint64_t, std::vector<std::pair<uint64_t, Rational>>> by_row;
    for (const auto& [rc, v] : other.entries_) by_row[rc.first].emplace_back(rc.second, v);
    TensorOperator out(d_, k_);
    for (const auto& [rc, v] : entries_) {
        auto it = by_row.find(rc.second);
        if (it == by_row.end()) continue;
        for (const auto& [c2, v2] : it->second) out.add_entry_coded(rc.first, c2, v * v2);
    }
    return out;
}

Rational TensorOperator::trace() const {
    Rational acc(0);
    for (const auto& [rc, v] : entries_)
        if (rc.first == rc.second) acc += v;
    return acc;
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
    if (d_ != o.d_ || k_ != o.k_)
        throw std::invalid_argument("TensorOperator: shape mismatch in addition");
    for (const auto& [rc, v] : o.entries_) add_entry_coded(rc.first, rc.second, v);
    return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) {
    if (d_ != o.d_ || k_ != o.k_)
        throw std::invalid_argument("TensorOperator: shape mismatch in subtraction");
    for (const auto& [rc, v] : o.entries_) add_entry_coded(rc.first, rc.second, -v);
    return *this;
}

TensorOperator TensorOperator::scaled(const Rational& s) const {
    TensorOperator out(d_, k_);
    if (s.is_zero()) return out;
    for (const auto& [rc, v] : entries_) out.entries_.emplace(rc, v * s);
    return out;
}

GroupAlgebraElement<Rational> phi_map(const TensorOperator& a) {
    int k = a.tensor_degree();
    GroupAlgebraElement<Rational> out(k);
    for (const Permutation& sigma : all_permutations(k)) {
        // tr(A ∘ op(σ⁻¹)) = Σ over entries (r, c) of A with c = r∘σ
        Rational acc(0);
        for (const auto& [rc, v] : a.entries()) {
            MultiIndex row = a.decode(rc.first), col = a.decode(rc.second);
            bool match = true;
            for (int j = 1; j <= k && match; ++j)
                if (col[static_cast<size_t>(j - 1)] != row[static_cast<size_t>(sigma(j) - 1)])
                    match = false;
            if (match) acc += v;
        }
        out.add_term(sigma, acc);
    }
    return out;
}

TensorOperator ga_to_operator(const GroupAlgebraElement<Rational>& a, int d) {
    TensorOperator out(d, a.degree());
    for (const auto& [p, c] : a.terms()) out += TensorOperator::permutation_operator(p, d).scaled(c);
    return out;
}

ProjectionResult projection_E(const TensorOperator& a) {
    int k = a.tensor_degree();
    long d = a.dim();
    WeingartenFunction<Rational> wg = wg_characters(k, d);
    GroupAlgebraElement<Rational> wg_elem = class_expand(wg.as_class_function());
    return {ga_multiply(wg_elem, phi_map(a)), wg.restricted};
}

}  // namespace wgcalc

#include "wgcalc/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgcalc {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lens;
    for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
    shape_ = Partition(lens);
    int n = shape_.size();
    std::vector<bool> seen(static_cast<size_t>(n + 1), false);
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("StandardTableau: filling is not a bijection to 1..n");
            seen[static_cast<size_t>(v)] = true;
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("StandardTableau: rows must strictly increase");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("StandardTableau: columns must strictly increase");
        }
    }
}

std::pair<int, int> StandardTableau::position_of(int value) const {
    for (size_t r = 0; r < rows_.size(); ++r)
        for (size_t c = 0; c < rows_[r].size(); ++c)
            if (rows_[r][c] == value) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    throw std::invalid_argument("StandardTableau: value " + std::to_string(value) + " not present");
}

std::string StandardTableau::to_string() const {
    std::string out;
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += "\n";
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) out += " ";
            out += std::to_string(rows_[r][c]);
        }
    }
    return out;
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    if (shape.size() > 12) throw capacity_error("enumerate_syt: |shape| exceeds bound 12");
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.height()));
    int n = shape.size();
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(StandardTableau(std::vector<std::vector<int>>(
                rows.begin(), rows.begin() + static_cast<long>(std::count_if(
                                                  rows.begin(), rows.end(),
                                                  [](const auto& r) { return !r.empty(); })))));
            return;
        }
        for (int r = 0; r < shape.height(); ++r) {
            size_t len = rows[static_cast<size_t>(r)].size();
            if (static_cast<int>(len) >= shape.part(r)) continue;          // row full
            if (r > 0 && rows[static_cast<size_t>(r - 1)].size() <= len) continue;  // must stay staircase
            rows[static_cast<size_t>(r)].push_back(next);
            self(self, next + 1);
            rows[static_cast<size_t>(r)].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

namespace {

// insert x into P by row bumping; returns the (row, col) where a new box
// appeared (0-based)
std::pair<int, int> row_insert(std::vector<std::vector<int>>& p, int x) {
    size_t r = 0;
    while (true) {
        if (r == p.size()) {
            p.push_back({x});
            return {static_cast<int>(r), 0};
        }
        auto& row = p[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
        }
        std::swap(*it, x);
        r++;
    }
}

}  // namespace

WordRsk rsk_word(const std::vector<int>& word) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (size_t step = 0; step < word.size(); ++step) {
        auto [r, c] = row_insert(p, word[step]);
        if (r == static_cast<int>(q.size())) q.push_back({});
        (void)c;
        q[static_cast<size_t>(r)].push_back(static_cast<int>(step) + 1);
    }
    return {p, StandardTableau(q)};
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& sigma) {
    std::vector<int> word;
    for (int i = 1; i <= sigma.degree(); ++i) word.push_back(sigma(i));
    WordRsk res = rsk_word(word);
    return {StandardTableau(res.p_rows), res.q};
}

Permutation rsk_inverse(const StandardTableau& p, const StandardTableau& q) {
    if (p.shape() != q.shape())
        throw std::invalid_argument("rsk_inverse: tableaux shapes differ");
    int n = p.size();
    std::vector<std::vector<int>> rows = p.rows();
    std::vector<uint8_t> img(static_cast<size_t>(n));
    for (int step = n; step >= 1; --step) {
        auto [qr, qc] = q.position_of(step);
        int r = qr - 1, c = qc - 1;
        int x = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        rows[static_cast<size_t>(r)].pop_back();
        for (int rr = r - 1; rr >= 0; --rr) {
            auto& row = rows[static_cast<size_t>(rr)];
            // rightmost entry < x gets bumped back up
            auto it = std::lower_bound(row.begin(), row.end(), x);
            --it;
            std::swap(*it, x);
        }
        img[static_cast<size_t>(step - 1)] = static_cast<uint8_t>(x - 1);
    }
    return Permutation(img);
}

int longest_decreasing(const Permutation& sigma) {
    return rsk(sigma).first.shape().height();
}

bool is_d_good(const Permutation& sigma, int d) { return longest_decreasing(sigma) < d; }

namespace {

// lexicographically first index tuple carrying a descending subsequence of
// the given length
std::vector<int> first_descending_positions(const Permutation& sigma, int len) {
    int k = sigma.degree();
    // L[i] = longest descending subsequence starting at position i (1-based)
    std::vector<int> l(static_cast<size_t>(k + 1), 1);
    for (int i = k; i >= 1; --i)
        for (int j = i + 1; j <= k; ++j)
            if (sigma(j) < sigma(i)) l[static_cast<size_t>(i)] = std::max(l[static_cast<size_t>(i)], 1 + l[static_cast<size_t>(j)]);
    std::vector<int> pos;
    int need = len, prev = k + 1;  // prev = value bound (strictly below previous value)
    int start = 1;
    while (need > 0) {
        int found = -1;
        for (int i = start; i <= k; ++i) {
            if (sigma(i) < prev && l[static_cast<size_t>(i)] >= need) {
                found = i;
                break;
            }
        }
        if (found < 0) return {};  // no such subsequence
        pos.push_back(found);
        prev = sigma(found);
        start = found + 1;
        need--;
    }
    return pos;
}

}  // namespace

GroupAlgebraElement<Rational> straighten(const GroupAlgebraElement<Rational>& a, int d) {
    if (d < 1) throw std::invalid_argument("straighten: d must be >= 1");
    int k = a.degree();
    GroupAlgebraElement<Rational> cur = a;
    while (true) {
        // lexicographically largest (d+1)-bad support term
        const Permutation* bad = nullptr;
        for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
            if (!is_d_good(it->first, d + 1)) {
                bad = &it->first;
                break;
            }
        }
        if (!bad) return cur;
        Permutation sigma = *bad;
        Rational coeff = cur.coefficient(sigma);
        std::vector<int> positions = first_descending_positions(sigma, d + 1);
        std::vector<int> values;
        for (int i : positions) values.push_back(sigma(i));
        std::sort(values.begin(), values.end());
        // A·σ = 0 on V^{⊗k} for the antisymmetrizer A over these d+1 values,
        // so σ = −Σ_{τ≠1} ε_τ τσ with τ running over value rearrangements.
        std::vector<int> perm = values;
        cur.add_term(sigma, -coeff);
        while (std::next_permutation(perm.begin(), perm.end())) {
            int inv = 0;
            for (size_t x = 0; x < perm.size(); ++x)
                for (size_t y = x + 1; y < perm.size(); ++y)
                    if (perm[x] > perm[y]) inv++;
            Permutation tau = Permutation::identity(k);
            std::vector<uint8_t> img = tau.images();
            for (size_t t = 0; t < values.size(); ++t)
                img[static_cast<size_t>(values[t] - 1)] = static_cast<uint8_t>(perm[t] - 1);
            tau = Permutation(img);
            Rational sign(inv % 2 == 0 ? 1 : -1);
            cur.add_term(tau * sigma, -coeff * sign);
        }
    }
}

std::vector<int> content_vector(const StandardTableau& t) {
    std::vector<int> out;
    for (int i = 1; i <= t.size(); ++i) {
        auto [r, c] = t.position_of(i);
        out.push_back(c - r);
    }
    return out;
}

StandardTableau tableau_from_contents(const std::vector<int>& contents) {
    std::vector<std::vector<int>> rows;
    for (size_t i = 0; i < contents.size(); ++i) {
        int c = contents[i];
        // first free box on the diagonal j − r = c: rows r = max(1, 1−c), …
        int r = std::max(1, 1 - c);
        while (static_cast<size_t>(r) <= rows.size() &&
               static_cast<int>(rows[static_cast<size_t>(r - 1)].size()) >= r + c)
            r++;
        int col = r + c;
        if (col < 1 || (r > 1 && (static_cast<size_t>(r - 1) > rows.size() ||
                                  static_cast<int>(rows[static_cast<size_t>(r - 2)].size()) < col)))
            throw std::invalid_argument("tableau_from_contents: inconsistent content sequence");
        if (static_cast<size_t>(r) > rows.size()) {
            if (static_cast<size_t>(r) != rows.size() + 1)
                throw std::invalid_argument("tableau_from_contents: inconsistent content sequence");
            rows.push_back({});
        }
        if (static_cast<int>(rows[static_cast<size_t>(r - 1)].size()) != col - 1)
            throw std::invalid_argument("tableau_from_contents: inconsistent content sequence");
        rows[static_cast<size_t>(r - 1)].push_back(static_cast<int>(i) + 1);
    }
    return StandardTableau(rows);
}

}  // namespace wgcalc

#include "wgcalc/tensor_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace wgcalc {

RatMatrix RatMatrix::identity(int d) {
    RatMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::elementary(int d, int r, int c) {
    RatMatrix m(d);
    m.at(r, c) = Rational(1);
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    RatMatrix out(d_);
    for (int r = 0; r < d_; ++r)
        for (int t = 0; t < d_; ++t) {
            const Rational& v = at(r, t);
            if (v.is_zero()) continue;
            for (int c = 0; c < d_; ++c) {
                const Rational& w = o.at(t, c);
                if (!w.is_zero()) out.at(r, c) += v * w;
            }
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    RatMatrix out(d_);
    for (int r = 0; r < d_; ++r)
        for (int c = 0; c < d_; ++c) out.at(r, c) = at(r, c) + o.at(r, c);
    return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
    RatMatrix out(d_);
    for (int r = 0; r < d_; ++r)
        for (int c = 0; c < d_; ++c) out.at(r, c) = at(r, c) * s;
    return out;
}

Rational RatMatrix::trace() const {
    Rational acc(0);
    for (int i = 0; i < d_; ++i) acc += at(i, i);
    return acc;
}

bool RatMatrix::is_zero() const {
    for (const Rational& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

MatrixTuple elementary_tuple(int d) {
    MatrixTuple out;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out.push_back(RatMatrix::elementary(d, r, c));
    return out;
}

void TensorMonomialPolynomial::add_term(const Rational& coeff, Words words) {
    if (static_cast<int>(words.size()) != k_)
        throw std::invalid_argument("TensorMonomialPolynomial: wrong slot count");
    for (const auto& w : words)
        for (int v : w)
            if (v < 0 || v >= n_)
                throw std::invalid_argument("TensorMonomialPolynomial: variable id out of range");
    auto it = terms_.find(words);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(std::move(words), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorOperator evaluate(const TensorMonomialPolynomial& p, const MatrixTuple& x) {
    if (static_cast<int>(x.size()) != p.variable_count())
        throw std::invalid_argument("evaluate: variable count mismatch");
    int d = x.empty() ? 1 : x.front().dim();
    for (const RatMatrix& m : x)
        if (m.dim() != d) throw std::invalid_argument("evaluate: inconsistent matrix dimensions");
    int k = p.tensor_degree();
    TensorOperator out(d, k);
    MultiIndex row(static_cast<size_t>(k)), col(static_cast<size_t>(k));
    for (const auto& [words, coeff] : p.terms()) {
        std::vector<RatMatrix> slot;
        bool dead = false;
        for (const auto& w : words) {
            RatMatrix m = RatMatrix::identity(d);
            for (int v : w) m = m * x[static_cast<size_t>(v)];
            if (m.is_zero()) {
                dead = true;
                break;
            }
            slot.push_back(std::move(m));
        }
        if (dead) continue;
        auto emit = [&](auto&& self, int s, const Rational& acc) -> void {
            if (acc.is_zero()) return;
            if (s == k) {
                out.add_entry(row, col, acc);
                return;
            }
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    row[static_cast<size_t>(s)] = r;
                    col[static_cast<size_t>(s)] = c;
                    self(self, s + 1, acc * slot[static_cast<size_t>(s)].at(r, c));
                }
        };
        emit(emit, 0, coeff);
    }
    return out;
}

TensorMonomialPolynomial alternate(const TensorMonomialPolynomial& p,
                                   const std::vector<int>& vars) {
    // multilinearity precondition: every term uses each listed variable once
    for (const auto& [words, coeff] : p.terms()) {
        (void)coeff;
        for (int v : vars) {
            int uses = 0;
            for (const auto& w : words) uses += static_cast<int>(std::count(w.begin(), w.end(), v));
            if (uses != 1)
                throw std::invalid_argument("alternate: input not multilinear in variable " +
                                            std::to_string(v));
        }
    }
    int m = static_cast<int>(vars.size());
    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<size_t>(i)] = i;
    std::map<int, int> var_slot;
    for (int i = 0; i < m; ++i) var_slot[vars[static_cast<size_t>(i)]] = i;
    TensorMonomialPolynomial out(p.tensor_degree(), p.variable_count());
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) inv++;
        Rational sign(inv % 2 == 0 ? 1 : -1);
        for (const auto& [words, coeff] : p.terms()) {
            TensorMonomialPolynomial::Words mapped = words;
            for (auto& w : mapped)
                for (int& v : w) {
                    auto it = var_slot.find(v);
                    if (it != var_slot.end())
                        v = vars[static_cast<size_t>(perm[static_cast<size_t>(it->second)])];
                }
            out.add_term(coeff * sign, std::move(mapped));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Rational t_odd(int i, const MatrixTuple& y) {
    int m = 2 * i - 1;
    if (static_cast<int>(y.size()) != m)
        throw std::invalid_argument("t_odd: expected " + std::to_string(m) + " matrices");
    std::vector<int> perm(static_cast<size_t>(m));
    for (int t = 0; t < m; ++t) perm[static_cast<size_t>(t)] = t;
    Rational acc(0);
    do {
        int inv = 0;
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)]) inv++;
        RatMatrix prod = y[static_cast<size_t>(perm[0])];
        for (int t = 1; t < m; ++t) prod = prod * y[static_cast<size_t>(perm[static_cast<size_t>(t)])];
        acc += prod.trace() * Rational(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

namespace {

int arrangement_sign(const std::vector<int>& arr) {
    int inv = 0;
    for (size_t a = 0; a < arr.size(); ++a)
        for (size_t b = a + 1; b < arr.size(); ++b)
            if (arr[a] > arr[b]) inv++;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Rational script_t_d(int d, const MatrixTuple& y) {
    int n = d * d;
    if (static_cast<int>(y.size()) != n)
        throw std::invalid_argument("script_t_d: expected d^2 matrices");
    // Σ over ordered splits of {1..d²} into blocks of sizes 1, 3, ..., 2d−1
    // (each block taken in increasing order) of sign × Π_i T_{2i−1}(block i).
    // The within-block alternations of the wedge normalization cancel against
    // the multinomial prefactor, leaving exactly this sum.
    std::map<std::pair<int, uint32_t>, Rational> t_memo;  // (block arity i, subset mask)
    auto t_of = [&](int i, const std::vector<int>& subset) {
        uint32_t mask = 0;
        for (int v : subset) mask |= (1u << v);
        auto it = t_memo.find({i, mask});
        if (it != t_memo.end()) return it->second;
        MatrixTuple sub;
        for (int v : subset) sub.push_back(y[static_cast<size_t>(v)]);
        Rational val = t_odd(i, sub);
        t_memo.emplace(std::make_pair(i, mask), val);
        return val;
    };
    Rational total(0);
    std::vector<int> arrangement;
    std::vector<bool> used(static_cast<size_t>(n), false);
    auto rec = [&](auto&& self, int block, Rational acc) -> void {
        if (acc.is_zero()) return;
        if (block > d) {
            total += acc * Rational(arrangement_sign(arrangement));
            return;
        }
        int len = 2 * block - 1;
        std::vector<int> chosen;
        auto pick = [&](auto&& pickself, int start) -> void {
            if (static_cast<int>(chosen.size()) == len) {
                for (int v : chosen) {
                    arrangement.push_back(v);
                    used[static_cast<size_t>(v)] = true;
                }
                self(self, block + 1, acc * t_of(block, chosen));
                for (int v : chosen) {
                    arrangement.pop_back();
                    used[static_cast<size_t>(v)] = false;
                }
                return;
            }
            for (int v = start; v < n; ++v) {
                if (used[static_cast<size_t>(v)]) continue;
                chosen.push_back(v);
                pickself(pickself, v + 1);
                chosen.pop_back();
            }
        };
        pick(pick, 0);
    };
    rec(rec, 1, Rational(1));
    return total;
}

Integer c_d_magnitude(int d) {
    Integer num = 1, den = 1;
    for (int i = 1; i <= d; ++i) num *= factorial(2 * i - 1);
    for (int i = 1; i <= d - 1; ++i) den *= factorial(i);
    return num / den;
}

Rational c_d_computed(int d) { return script_t_d(d, elementary_tuple(d)); }

namespace {

// Shared backtracking for G_d and the Formanek evaluation: assigns distinct
// matrices from `pool` to the slots of m_1 … m_d (lengths 1, 3, ..., 2d−1),
// maintaining the running block product and pruning dead products. `seed_i`
// optionally left-multiplies block i (used to fold in the X-blocks of F).
// On completion calls sink(sign, blocks).
template <class Sink>
void alternation_backtrack(int d, const MatrixTuple& pool, const MatrixTuple* seeds, Sink&& sink) {
    int n = d * d;
    std::vector<int> assignment;
    assignment.reserve(static_cast<size_t>(n));
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::vector<RatMatrix> blocks;
    blocks.reserve(static_cast<size_t>(d));
    auto rec = [&](auto&& self, int block, int pos_in_block, RatMatrix cur) -> void {
        if (block > d) {
            sink(arrangement_sign(assignment), blocks);
            return;
        }
        int len = 2 * block - 1;
        if (pos_in_block == len) {
            blocks.push_back(cur);
            if (block + 1 > d) {
                self(self, block + 1, 0, RatMatrix::identity(pool.front().dim()));
            } else {
                RatMatrix next_seed = seeds ? (*seeds)[static_cast<size_t>(block + 1)]
                                            : RatMatrix::identity(pool.front().dim());
                if (!next_seed.is_zero()) self(self, block + 1, 0, next_seed);
            }
            blocks.pop_back();
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            RatMatrix prod = cur * pool[static_cast<size_t>(v)];
            if (prod.is_zero()) continue;
            used[static_cast<size_t>(v)] = true;
            assignment.push_back(v);
            self(self, block, pos_in_block + 1, std::move(prod));
            assignment.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    };
    RatMatrix first_seed = seeds ? (*seeds)[1] : RatMatrix::identity(pool.front().dim());
    if (!first_seed.is_zero()) rec(rec, 1, 0, first_seed);
}

void add_tensor_of_blocks(TensorOperator& out, const std::vector<RatMatrix>& blocks,
                          const Rational& coeff) {
    int d = blocks.front().dim();
    int k = static_cast<int>(blocks.size());
    MultiIndex row(static_cast<size_t>(k)), col(static_cast<size_t>(k));
    auto emit = [&](auto&& self, int s, const Rational& acc) -> void {
        if (acc.is_zero()) return;
        if (s == k) {
            out.add_entry(row, col, acc);
            return;
        }
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                row[static_cast<size_t>(s)] = r;
                col[static_cast<size_t>(s)] = c;
                self(self, s + 1, acc * blocks[static_cast<size_t>(s)].at(r, c));
            }
    };
    emit(emit, 0, coeff);
}

}  // namespace

TensorOperator g_d(int d, const MatrixTuple& y) {
    if (d >= 4) throw capacity_error("g_d: d exceeds bound 3");
    if (static_cast<int>(y.size()) != d * d)
        throw std::invalid_argument("g_d: expected d^2 matrices");
    TensorOperator out(d, d);
    alternation_backtrack(d, y, nullptr, [&](int sign, const std::vector<RatMatrix>& blocks) {
        add_tensor_of_blocks(out, blocks, Rational(sign));
    });
    return out;
}

ForgzReport verify_forgz(int d) {
    if (d >= 4) throw capacity_error("verify_forgz: d exceeds bound 3");
    ForgzReport report;
    report.d = d;
    MatrixTuple y = elementary_tuple(d);
    report.script_t = script_t_d(d, y);
    TensorOperator g = g_d(d, y);

    auto wg = wg_characters(d, d);
    TensorOperator expected =
        ga_to_operator(class_expand(wg.as_class_function()), d).scaled(report.script_t);
    report.operator_identity = (g == expected);

    GroupAlgebraElement<Rational> phi = phi_map(g);
    GroupAlgebraElement<Rational> phi_expected(d);
    phi_expected.add_term(Permutation::identity(d), report.script_t);
    report.phi_identity = (phi == phi_expected);
    return report;
}

FormanekReport formanek_verify(int d) {
    if (d >= 4) throw capacity_error("formanek_verify: d exceeds bound 3");
    FormanekReport report;
    report.d = d;
    Rational coeff(Integer(1), factorial(d) * factorial(d) * Integer(2 * d - 1));
    if (d % 2 == 0) coeff = -coeff;  // (−1)^{d−1}
    report.coefficient = coeff;

    MatrixTuple xs = elementary_tuple(d), ys = elementary_tuple(d);
    report.script_t_x = script_t_d(d, xs);
    report.script_t_y = script_t_d(d, ys);
    report.scalar = coeff * report.script_t_x * report.script_t_y;

    TensorOperator f_tensor(d, d);
    RatMatrix f_matrix(d);
    // outer alternation over X; the completed X-blocks seed the Y alternation
    alternation_backtrack(d, xs, nullptr, [&](int sx, const std::vector<RatMatrix>& bx) {
        MatrixTuple seeds;
        seeds.push_back(RatMatrix::identity(d));  // 1-based padding
        for (const RatMatrix& b : bx) seeds.push_back(b);
        alternation_backtrack(d, ys, &seeds, [&](int sy, const std::vector<RatMatrix>& blocks) {
            Rational sign(sx * sy);
            add_tensor_of_blocks(f_tensor, blocks, sign);
            RatMatrix prod = blocks.front();
            for (size_t i = 1; i < blocks.size(); ++i) prod = prod * blocks[i];
            f_matrix = f_matrix + prod.scaled(sign);
        });
    });

    GroupAlgebraElement<Rational> wg_elem =
        class_expand(wg_characters(d, d).as_class_function());
    TensorOperator wg_sq = ga_to_operator(ga_multiply(wg_elem, wg_elem), d);
    report.tensor_identity =
        (f_tensor == wg_sq.scaled(report.script_t_x * report.script_t_y));
    report.matrix_identity = (f_matrix == RatMatrix::identity(d).scaled(report.scalar));

    std::vector<int> cyc(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) cyc[static_cast<size_t>(i)] = i + 1;
    Permutation sigma0 = Permutation::from_cycles(d, {cyc});
    Rational tr_tensor =
        f_tensor.compose(TensorOperator::permutation_operator(sigma0.inverse(), d)).trace();
    Rational tr_expected = report.scalar * Rational(d);
    report.trace_identity = (tr_tensor == tr_expected) && (f_matrix.trace() == tr_expected);

    Rational a_sigma0 = wg_characters(d, d).at(Partition({d}));
    report.full_cycle_consistency = (coeff == a_sigma0 / Rational(d));
    return report;
}

}  // namespace wgcalc

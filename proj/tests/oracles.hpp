#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call into the library code they are checking.

#include "dhecke/field.hpp"
#include "dhecke/sparse.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Line = std::vector<int>;

inline int inversions(const Line& w) {
    int k = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++k;
    return k;
}

// (u*v)(x) = v(u(x)).
inline Line compose(const Line& u, const Line& v) {
    Line out(u.size());
    for (std::size_t x = 0; x < u.size(); ++x) out[x] = v[static_cast<std::size_t>(u[x] - 1)];
    return out;
}

inline Line simple(int i, int m) {
    Line s(static_cast<std::size_t>(m));
    std::iota(s.begin(), s.end(), 1);
    std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
    return s;
}

inline Line word_product(const std::vector<int>& word, int m) {
    Line w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    for (int i : word) w = compose(w, simple(i, m));
    return w;
}

inline std::vector<Line> symmetric_group(int m) {
    Line w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Line> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<int> blocks(const std::vector<int>& lambda) {
    std::vector<int> b;
    for (std::size_t k = 0; k < lambda.size(); ++k)
        for (int j = 0; j < lambda[k]; ++j) b.push_back(static_cast<int>(k));
    return b;
}

inline std::vector<Line> young(const std::vector<int>& lambda) {
    const auto b = blocks(lambda);
    std::vector<Line> out;
    for (const auto& w : symmetric_group(static_cast<int>(b.size()))) {
        bool ok = true;
        for (std::size_t x = 0; x < w.size(); ++x) ok = ok && b[x] == b[static_cast<std::size_t>(w[x] - 1)];
        if (ok) out.push_back(w);
    }
    return out;
}

// Group S_m into cosets S_λ d and keep the shortest element of each.
inline std::set<Line> min_coset_reps(const std::vector<int>& lambda) {
    const auto sub = young(lambda);
    const int m = static_cast<int>(blocks(lambda).size());
    std::set<Line> seen, reps;
    for (const auto& d : symmetric_group(m)) {
        if (seen.count(d)) continue;
        Line best = d;
        for (const auto& w : sub) {
            Line c = compose(w, d);
            seen.insert(c);
            if (inversions(c) < inversions(best)) best = c;
        }
        reps.insert(best);
    }
    return reps;
}

// Fill the shape cell by cell in row order with every admissible value.
inline std::size_t count_tableaux(const std::vector<int>& shape, int max_entry, bool standard) {
    std::vector<int> rows;
    for (int p : shape)
        if (p > 0) rows.push_back(p);
    int cells = std::accumulate(rows.begin(), rows.end(), 0);
    if (standard) max_entry = cells;
    std::vector<std::vector<int>> t(rows.size());
    for (std::size_t a = 0; a < rows.size(); ++a) t[a].assign(static_cast<std::size_t>(rows[a]), 0);
    std::vector<bool> used(static_cast<std::size_t>(max_entry + 1), false);
    std::size_t count = 0;
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t a, std::size_t b) {
        if (a == rows.size()) {
            ++count;
            return;
        }
        const std::size_t na = b + 1 == t[a].size() ? a + 1 : a;
        const std::size_t nb = b + 1 == t[a].size() ? 0 : b + 1;
        for (int v = 1; v <= max_entry; ++v) {
            if (standard && used[static_cast<std::size_t>(v)]) continue;
            if (b > 0 && (standard ? v <= t[a][b - 1] : v < t[a][b - 1])) continue;
            if (a > 0 && v <= t[a - 1][b]) continue;
            t[a][b] = v;
            if (standard) used[static_cast<std::size_t>(v)] = true;
            fill(na, nb);
            if (standard) used[static_cast<std::size_t>(v)] = false;
        }
    };
    if (rows.empty()) return 1;
    fill(0, 0);
    return count;
}

inline std::size_t syt(const std::vector<int>& shape) { return count_tableaux(shape, 0, true); }
inline std::size_t ssyt(const std::vector<int>& shape, int n) { return count_tableaux(shape, n, false); }

/// Partitions of l with at most n parts, by recursion on the largest part.
inline std::vector<std::vector<int>> partitions(int l, int n, int max_part = -1) {
    if (max_part < 0) max_part = l;
    if (l == 0) return {{}};
    if (n == 0) return {};
    std::vector<std::vector<int>> out;
    for (int p = std::min(l, max_part); p >= 1; --p)
        for (auto rest : partitions(l - p, n - 1, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(rest);
        }
    return out;
}

inline std::uint64_t choose(int n, int k) {
    std::uint64_t c = 1;
    for (int j = 1; j <= k; ++j) c = c * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    return c;
}

// Dense matrices over Q, row-major.
using Dense = std::vector<std::vector<mpq_class>>;

inline Dense dense(const dhecke::SparseOperator<mpq_class>& a) {
    Dense m(a.dim(), std::vector<mpq_class>(a.dim(), 0));
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& [i, v] : a.column(j).entries()) m[i][j] = v;
    return m;
}

inline Dense multiply(const Dense& a, const Dense& b) {
    const std::size_t d = a.size();
    Dense c(d, std::vector<mpq_class>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline std::vector<mpq_class> flatten(const Dense& a) {
    std::vector<mpq_class> v;
    for (const auto& row : a) v.insert(v.end(), row.begin(), row.end());
    return v;
}

/// Rank by plain Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (rows[k][c] == 0) continue;
            const mpq_class f = rows[k][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Dimension of the algebra generated by gens: span of all words, grown by
/// word length until the rank stops increasing.
inline std::size_t closure_dimension(const std::vector<Dense>& gens, std::size_t d) {
    Dense id(d, std::vector<mpq_class>(d, 0));
    for (std::size_t k = 0; k < d; ++k) id[k][k] = 1;
    std::vector<Dense> layer{id};
    std::vector<std::vector<mpq_class>> all{flatten(id)};
    std::size_t current = 1;
    while (true) {
        std::vector<Dense> next;
        for (const auto& w : layer)
            for (const auto& g : gens) {
                Dense p = multiply(w, g);
                auto trial = all;
                trial.push_back(flatten(p));
                if (rank(trial) > rank(all)) {
                    all = std::move(trial);
                    next.push_back(std::move(p));
                }
            }
        if (all.size() == current) return current;
        current = all.size();
        layer = std::move(next);
    }
}

/// d² minus the rank of the stacked Kronecker system (I⊗G - Gᵀ⊗I) vec X = 0.
inline std::size_t commutant_dimension(const std::vector<Dense>& gens, std::size_t d) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : gens)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                // (XG - GX)[a][b] in unknowns X[i][j] at index i*d + j.
                std::vector<mpq_class> row(d * d, 0);
                for (std::size_t k = 0; k < d; ++k) {
                    row[a * d + k] += g[k][b];
                    row[k * d + b] -= g[a][k];
                }
                rows.push_back(std::move(row));
            }
    return d * d - rank(std::move(rows));
}

}  // namespace oracle

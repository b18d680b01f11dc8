#pragma once

#include "dhecke/parallel.hpp"
#include "dhecke/sparse.hpp"

#include <cstddef>
#include <deque>
#include <vector>

namespace dhecke {

/// Row space of a set of vectors in reduced row echelon form over F.
///
/// Every row has leading coefficient 1 at its pivot, pivots are distinct, and
/// each pivot column is zero in every other row. Reducing a vector therefore
/// needs a single pass over its pivot-column entries.
template <class F>
class SpanBasis {
public:
    SpanBasis() = default;
    explicit SpanBasis(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, kNone) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<SparseVector<F>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the pivot columns; zero iff v is in the span.
    SparseVector<F> reduce(const SparseVector<F>& v) const {
        check_dim(v);
        SparseVector<F> out = v;
        for (const auto& [col, c] : v.entries()) {
            const std::size_t row = pivot_row_[col];
            if (row == kNone) continue;
            F neg = -c;
            out.add_scaled(rows_[row], neg);
        }
        return out;
    }

    bool contains(const SparseVector<F>& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span; returns whether the dimension grew.
    bool insert(const SparseVector<F>& v) {
        SparseVector<F> r = reduce(v);
        if (r.is_zero()) return false;
        const std::size_t pivot = r.entries().front().first;
        F inv = F(r.entries().front().second);
        inv = one_over(inv);
        r *= inv;
        for (auto& row : rows_) {
            const F* c = row.find(pivot);
            if (c == nullptr) continue;
            F neg = -*c;
            row.add_scaled(r, neg);
        }
        pivot_row_[pivot] = rows_.size();
        pivots_.push_back(pivot);
        rows_.push_back(std::move(r));
        return true;
    }

    /// Basis of {x : <row, x> = 0 for every row}, one vector per free column.
    std::vector<SparseVector<F>> nullspace(const F& one) const {
        std::vector<SparseVector<F>> out;
        std::vector<std::size_t> free_index(ambient_, kNone);
        for (std::size_t col = 0; col < ambient_; ++col) {
            if (pivot_row_[col] != kNone) continue;
            free_index[col] = out.size();
            out.push_back(SparseVector<F>::unit(ambient_, col, one));
        }
        for (std::size_t k = 0; k < rows_.size(); ++k)
            for (const auto& [col, c] : rows_[k].entries()) {
                if (col == pivots_[k]) continue;
                F neg = -c;
                out[free_index[col]].add_at(pivots_[k], neg);
            }
        return out;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    static F one_over(const F& x) { return x.inverse(); }

    void check_dim(const SparseVector<F>& v) const {
        if (v.dim() != ambient_) throw DimensionMismatch("SpanBasis: vector length differs from ambient dimension");
    }

    std::size_t ambient_ = 0;
    std::vector<SparseVector<F>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> pivot_row_;
};

template <>
inline mpq_class SpanBasis<mpq_class>::one_over(const mpq_class& x) {
    mpq_class inv = 1 / x;
    return inv;
}

/// Adds a whole operator (flattened) to a span of operators.
template <class F>
bool span_insert(SpanBasis<F>& basis, const SparseOperator<F>& a) {
    return basis.insert(a.vectorize());
}

template <class F>
bool span_contains(const SpanBasis<F>& basis, const SparseOperator<F>& a) {
    return basis.contains(a.vectorize());
}

/// Operators spanning an operator SpanBasis (its rows, un-flattened).
template <class F>
std::vector<SparseOperator<F>> basis_operators(const SpanBasis<F>& basis, std::size_t dim) {
    std::vector<SparseOperator<F>> out;
    out.reserve(basis.dimension());
    for (const auto& row : basis.rows()) out.push_back(SparseOperator<F>::from_vector(row, dim));
    return out;
}

/// Smallest unital subalgebra of End containing gens, found by saturating
/// the span under left and right products with the generators.
template <class F>
SpanBasis<F> algebra_closure(const std::vector<SparseOperator<F>>& gens, std::size_t dim, const F& one) {
    for (const auto& g : gens)
        if (g.dim() != dim) throw DimensionMismatch("algebra_closure: generator dimension mismatch");
    SpanBasis<F> span(dim * dim);
    std::deque<SparseOperator<F>> frontier;
    auto offer = [&](SparseOperator<F> a) {
        if (span_insert(span, a)) frontier.push_back(std::move(a));
    };
    offer(SparseOperator<F>::identity(dim, one));
    for (const auto& g : gens) offer(g);
    while (!frontier.empty()) {
        SparseOperator<F> a = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : gens) {
            offer(a * g);
            offer(g * a);
        }
    }
    return span;
}

/// Rows of the linear system X G - G X = 0 in the unknowns vec(X).
template <class F>
std::vector<SparseVector<F>> commutator_constraints(const SparseOperator<F>& g) {
    const std::size_t d = g.dim();
    const SparseOperator<F> gt = g.transpose();
    std::vector<SparseVector<F>> rows;
    rows.reserve(d * d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t a = 0; a < d; ++a) {
            // (XG)[a,b] = Σ_k X[a,k] G[k,b];  (GX)[a,b] = Σ_k G[a,k] X[k,b].
            SparseVector<F> row(d * d);
            for (const auto& [k, v] : g.column(b).entries()) row.add_at(k * d + a, v);
            for (const auto& [k, v] : gt.column(a).entries()) {
                F neg = -v;
                row.add_at(b * d + k, neg);
            }
            if (!row.is_zero()) rows.push_back(std::move(row));
        }
    return rows;
}

/// {X : X G = G X for every G in gens}, as a span of flattened operators.
template <class F>
SpanBasis<F> commutant(const std::vector<SparseOperator<F>>& gens, std::size_t dim, const F& one, int threads = 1) {
    for (const auto& g : gens)
        if (g.dim() != dim) throw DimensionMismatch("commutant: generator dimension mismatch");
    const auto blocks = parallel_map(gens.size(), threads, [&](std::size_t k) { return commutator_constraints(gens[k]); });
    SpanBasis<F> constraints(dim * dim);
    for (const auto& block : blocks)
        for (const auto& row : block) constraints.insert(row);
    SpanBasis<F> out(dim * dim);
    for (const auto& v : constraints.nullspace(one)) out.insert(v);
    return out;
}

/// Commutant of the span of an operator SpanBasis.
template <class F>
SpanBasis<F> commutant(const SpanBasis<F>& algebra, std::size_t dim, const F& one, int threads = 1) {
    return commutant(basis_operators(algebra, dim), dim, one, threads);
}

/// First row of a that does not lie in span(b), or -1 when a ⊆ b.
template <class F>
long first_outside(const SpanBasis<F>& a, const SpanBasis<F>& b) {
    for (std::size_t k = 0; k < a.rows().size(); ++k)
        if (!b.contains(a.rows()[k])) return static_cast<long>(k);
    return -1;
}

template <class F>
bool span_equal(const SpanBasis<F>& a, const SpanBasis<F>& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("span_equal: ambient dimension mismatch");
    return a.dimension() == b.dimension() && first_outside(a, b) < 0 && first_outside(b, a) < 0;
}

}  // namespace dhecke

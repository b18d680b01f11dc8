#pragma once

#include "dhecke/field.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dhecke {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse vector over a field: (index, value) pairs sorted by index, no stored zeros.
template <class F>
class SparseVector {
public:
    using Entry = std::pair<std::size_t, F>;

    SparseVector() = default;
    explicit SparseVector(std::size_t dim) : dim_(dim) {}

    static SparseVector unit(std::size_t dim, std::size_t index, const F& one) {
        SparseVector v(dim);
        v.entries_.emplace_back(index, one);
        return v;
    }

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Value at index, or nullptr when it is zero.
    const F* find(std::size_t index) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const Entry& e, std::size_t i) { return e.first < i; });
        return it != entries_.end() && it->first == index ? &it->second : nullptr;
    }

    /// Appends an entry whose index exceeds every stored index.
    void push_back(std::size_t index, F value) {
        if (!dhecke::is_zero(value)) entries_.emplace_back(index, std::move(value));
    }

    /// Inserts or accumulates at an arbitrary index.
    void add_at(std::size_t index, const F& value) {
        if (dhecke::is_zero(value)) return;
        auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const Entry& e, std::size_t i) { return e.first < i; });
        if (it != entries_.end() && it->first == index) {
            it->second += value;
            if (dhecke::is_zero(it->second)) entries_.erase(it);
        } else {
            entries_.insert(it, Entry{index, value});
        }
    }

    /// this += c * other.
    void add_scaled(const SparseVector& other, const F& c) {
        if (other.dim_ != dim_) throw DimensionMismatch("SparseVector: dimension mismatch");
        if (dhecke::is_zero(c) || other.is_zero()) return;
        std::vector<Entry> merged;
        merged.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                merged.push_back(std::move(*a++));
            } else if (a == entries_.end() || b->first < a->first) {
                F v = c * b->second;
                merged.emplace_back(b->first, std::move(v));
                ++b;
            } else {
                F v = a->second + c * b->second;
                if (!dhecke::is_zero(v)) merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        entries_ = std::move(merged);
    }

    SparseVector& operator*=(const F& c) {
        if (dhecke::is_zero(c)) {
            entries_.clear();
            return *this;
        }
        for (auto& e : entries_) e.second *= c;
        return *this;
    }

    friend bool operator==(const SparseVector& a, const SparseVector& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Entry> entries_;
};

/// Square sparse matrix over a field, stored by columns: column j is the
/// image of basis vector j.
template <class F>
class SparseOperator {
public:
    using value_type = F;

    SparseOperator() = default;
    explicit SparseOperator(std::size_t dim) : dim_(dim), cols_(dim, SparseVector<F>(dim)) {}

    static SparseOperator identity(std::size_t dim, const F& one) {
        SparseOperator a(dim);
        for (std::size_t j = 0; j < dim; ++j) a.cols_[j].push_back(j, one);
        return a;
    }

    /// Diagonal operator with the given entries.
    static SparseOperator diagonal(const std::vector<F>& diag) {
        SparseOperator a(diag.size());
        for (std::size_t j = 0; j < diag.size(); ++j) a.cols_[j].push_back(j, diag[j]);
        return a;
    }

    std::size_t dim() const { return dim_; }
    const SparseVector<F>& column(std::size_t j) const { return cols_[j]; }
    SparseVector<F>& column(std::size_t j) { return cols_[j]; }
    void set_column(std::size_t j, SparseVector<F> col) {
        if (col.dim() != dim_) throw DimensionMismatch("SparseOperator::set_column: dimension mismatch");
        cols_[j] = std::move(col);
    }

    bool is_zero() const {
        return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.is_zero(); });
    }
    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : cols_) n += c.nnz();
        return n;
    }

    /// Entry (row, col), zero if absent.
    F entry(std::size_t row, std::size_t col, const F& zero) const {
        const F* v = cols_[col].find(row);
        return v ? *v : zero;
    }

    SparseVector<F> apply(const SparseVector<F>& v) const {
        if (v.dim() != dim_) throw DimensionMismatch("SparseOperator::apply: dimension mismatch");
        SparseVector<F> out(dim_);
        for (const auto& [k, c] : v.entries()) out.add_scaled(cols_[k], c);
        return out;
    }

    /// this ∘ b (apply b first).
    SparseOperator compose(const SparseOperator& b) const {
        if (b.dim_ != dim_) throw DimensionMismatch("SparseOperator::compose: dimension mismatch");
        SparseOperator out(dim_);
        for (std::size_t j = 0; j < dim_; ++j) out.cols_[j] = apply(b.cols_[j]);
        return out;
    }

    SparseOperator transpose() const {
        SparseOperator out(dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [i, v] : cols_[j].entries()) out.cols_[i].push_back(j, v);
        return out;
    }

    SparseOperator& add_scaled(const SparseOperator& b, const F& c) {
        if (b.dim_ != dim_) throw DimensionMismatch("SparseOperator: dimension mismatch");
        for (std::size_t j = 0; j < dim_; ++j) cols_[j].add_scaled(b.cols_[j], c);
        return *this;
    }
    SparseOperator& operator*=(const F& c) {
        for (auto& col : cols_) col *= c;
        return *this;
    }

    /// Column-major flattening: entry (i, j) lands at j * dim + i.
    SparseVector<F> vectorize() const {
        SparseVector<F> v(dim_ * dim_);
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& [i, c] : cols_[j].entries()) v.push_back(j * dim_ + i, c);
        return v;
    }

    static SparseOperator from_vector(const SparseVector<F>& v, std::size_t dim) {
        if (v.dim() != dim * dim) throw DimensionMismatch("SparseOperator::from_vector: length is not dim^2");
        SparseOperator a(dim);
        for (const auto& [k, c] : v.entries()) a.cols_[k / dim].push_back(k % dim, c);
        return a;
    }

    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.dim_ == b.dim_ && a.cols_ == b.cols_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<SparseVector<F>> cols_;
};

template <class F>
SparseOperator<F> operator+(SparseOperator<F> a, const SparseOperator<F>& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("SparseOperator: dimension mismatch");
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& [i, v] : b.column(j).entries()) a.column(j).add_at(i, v);
    return a;
}

template <class F>
SparseOperator<F> operator-(SparseOperator<F> a, const SparseOperator<F>& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("SparseOperator: dimension mismatch");
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (const auto& [i, v] : b.column(j).entries()) {
            F neg = -v;
            a.column(j).add_at(i, neg);
        }
    return a;
}

/// Matrix product a·b, i.e. a ∘ b.
template <class F>
SparseOperator<F> operator*(const SparseOperator<F>& a, const SparseOperator<F>& b) {
    return a.compose(b);
}

template <class F>
SparseOperator<F> scaled(SparseOperator<F> a, const F& c) {
    a *= c;
    return a;
}

/// Entrywise image under a field map (specialization of q).
template <class Field>
SparseOperator<typename Field::value_type> lift(const SparseOperator<RationalFunction>& a, const Field& field) {
    using F = typename Field::value_type;
    SparseOperator<F> out(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        SparseVector<F> col(a.dim());
        for (const auto& [i, v] : a.column(j).entries()) col.push_back(i, field.lift(v));
        out.set_column(j, std::move(col));
    }
    return out;
}

template <class Field>
std::vector<SparseOperator<typename Field::value_type>> lift_all(const std::vector<SparseOperator<RationalFunction>>& ops,
                                                                 const Field& field) {
    std::vector<SparseOperator<typename Field::value_type>> out;
    out.reserve(ops.size());
    for (const auto& a : ops) out.push_back(lift(a, field));
    return out;
}

}  // namespace dhecke

#pragma once

#include "dhecke/sparse.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace dhecke {

/// Basis label (i_1, ..., i_r) of a tensor power, entries 1-based.
using MultiIndex = std::vector<int>;

/// The tensor power of V (letters 1..n), optionally enhanced by the extra
/// letter n+1 standing for η. Rank and support count the letters <= n.
class TensorSpace {
public:
    TensorSpace(int n, int r, bool enhanced);
    static TensorSpace enhanced(int n, int r) { return {n, r, true}; }
    static TensorSpace classical(int n, int r) { return {n, r, false}; }

    int n() const { return n_; }
    int r() const { return r_; }
    bool is_enhanced() const { return enhanced_; }
    /// Size of the one-slot alphabet: n + 1 when enhanced, n otherwise.
    int letters() const { return n_ + (enhanced_ ? 1 : 0); }
    /// letters()^r.
    std::size_t dim() const { return dim_; }
    int eta() const { return n_ + 1; }

    /// Mixed-radix id with the first entry fastest.
    std::size_t encode(const MultiIndex& j) const;
    MultiIndex decode(std::size_t id) const;
    bool valid(const MultiIndex& j) const;

    std::vector<MultiIndex> basis() const;

private:
    int n_;
    int r_;
    bool enhanced_;
    std::size_t dim_;
};

/// Number of entries <= n.
int rank(const MultiIndex& j, int n);
/// Sorted 1-based positions k with j_k <= n.
std::vector<int> support(const MultiIndex& j, int n);

/// All rank-l indices of the enhanced space, in id order.
std::vector<MultiIndex> stratum_basis(int n, int r, int l);
/// Indices with support exactly I (sorted 1-based positions), in id order.
std::vector<MultiIndex> subspace_basis(const std::vector<int>& positions, int n, int r);

std::string to_string(const MultiIndex& j);
/// Inverse of to_string: "[2,1]", spaces allowed; throws std::invalid_argument.
MultiIndex parse_multi_index(const std::string& text);

/// "c1*[j1] + c2*[j2]" in lexicographic order of the indices, unit
/// coefficients omitted, "0" for the zero vector.
template <class F>
std::string format_vector(const SparseVector<F>& v, const TensorSpace& space, const F& one) {
    if (v.is_zero()) return "0";
    std::vector<std::pair<MultiIndex, const F*>> terms;
    for (const auto& [id, c] : v.entries()) terms.emplace_back(space.decode(id), &c);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [j, c] : terms) {
        if (!out.empty()) out += " + ";
        if (*c == -one)
            out += "-";
        else if (!(*c == one))
            out += to_string(*c) + "*";
        out += to_string(j);
    }
    return out;
}

/// Coordinate projector onto the span of the listed basis ids.
template <class F>
SparseOperator<F> coordinate_projector(std::size_t dim, const std::vector<std::size_t>& ids, const F& one) {
    SparseOperator<F> p(dim);
    for (std::size_t id : ids) p.column(id).push_back(id, one);
    return p;
}

/// Projector onto the stratum of rank l.
SparseOperator<RationalFunction> stratum_projector(const TensorSpace& space, int l);
/// Projector onto V̄_I.
SparseOperator<RationalFunction> subspace_projector(const TensorSpace& space, const std::vector<int>& positions);

}  // namespace dhecke

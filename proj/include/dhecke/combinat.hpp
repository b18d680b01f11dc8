#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhecke {

/// A permutation of {1..m} in one-line notation.
///
/// Products compose left to right: (u * v)(x) = v(u(x)). Under this
/// convention the reduced word (i1, ..., ik) of w satisfies
/// w = s_{i1} * ... * s_{ik}, and right-multiplying by s_i swaps the values
/// i and i+1 in the one-line notation. A tensor M_f acted on by T_w moves
/// the letter in slot p to slot w(p) whenever every step is length-adding.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless the entries are a bijection of 1..m.
    explicit Permutation(std::vector<int> one_line);
    Permutation(std::initializer_list<int> one_line) : Permutation(std::vector<int>(one_line)) {}

    static Permutation identity(int m);
    /// Simple transposition s_i = (i, i+1) in S_m.
    static Permutation simple(int i, int m);
    static Permutation from_word(const std::vector<int>& word, int m);

    int size() const { return static_cast<int>(w_.size()); }
    /// Image of x, 1-based.
    int operator()(int x) const { return w_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const;
    bool is_identity() const;
    /// Product u * v (apply u first).
    friend Permutation operator*(const Permutation& u, const Permutation& v);
    /// w * s_i without building s_i.
    Permutation times_simple(int i) const;
    /// s_i * w.
    Permutation simple_times(int i) const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.w_ < b.w_; }

    std::string to_string() const;

private:
    std::vector<int> w_;
};

/// Inversion count.
int length(const Permutation& w);
/// ℓ(w * s_i) > ℓ(w).
bool right_ascent(const Permutation& w, int i);
/// ℓ(s_i * w) > ℓ(w).
bool left_ascent(const Permutation& w, int i);
/// A reduced word (i1, ..., ik) with w = s_{i1} * ... * s_{ik}.
std::vector<int> reduced_word(const Permutation& w);

/// All of S_m in lexicographic one-line order.
std::vector<Permutation> all_permutations(int m);

using Composition = std::vector<int>;
using Partition = std::vector<int>;

inline int weight(const std::vector<int>& parts) {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

/// Λ(n, r): n-part compositions of r, lexicographically decreasing.
std::vector<Composition> enumerate_compositions(int n, int r);
/// P(n, l): partitions of l with at most n nonzero parts, padded to length n
/// (a length-0 vector when n = 0), in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int l);

/// Row blocks R_i of a composition: block index (0-based) of each position 1..weight.
std::vector<int> block_of_positions(const Composition& lambda);
/// S_λ: permutations stabilizing every block R_i.
std::vector<Permutation> young_subgroup(const Composition& lambda);
/// Minimal-length representatives d of the cosets S_λ d, i.e. those with
/// ℓ(w d) = ℓ(w) + ℓ(d) for all w in S_λ. Found by exhaustive search over S_m.
std::vector<Permutation> min_coset_reps(const Composition& lambda);
bool is_min_coset_rep(const Composition& lambda, const Permutation& d);

/// Strip trailing zero parts.
Partition trimmed(const Partition& lambda);
/// Standard Young tableaux of shape λ (hook length formula).
std::uint64_t syt_count(const Partition& lambda);
/// Semistandard tableaux of shape λ with entries <= n; throws
/// std::domain_error when λ has more than n nonzero parts.
std::uint64_t ssyt_count(const Partition& lambda, int n);

std::uint64_t factorial(int k);
std::uint64_t binomial(int n, int k);

/// The order-preserving shortest d with d({1..l}) = I, I given as sorted
/// 1-based positions in {1..r}.
Permutation min_mover(const std::vector<int>& positions, int r);

}  // namespace dhecke

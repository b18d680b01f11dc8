#include "dhecke/combinat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace dhecke {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (int x : w_) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("Permutation: one-line notation is not a bijection of 1..m");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    Permutation p;
    p.w_ = std::move(w);
    return p;
}

Permutation Permutation::simple(int i, int m) {
    if (i < 1 || i >= m) throw std::invalid_argument("Permutation::simple: index out of range");
    Permutation p = identity(m);
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::from_word(const std::vector<int>& word, int m) {
    Permutation p = identity(m);
    for (int i : word) p = p.times_simple(i);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p = *this;
    for (int x = 1; x <= size(); ++x) p.w_[static_cast<std::size_t>((*this)(x) - 1)] = x;
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= size(); ++x)
        if ((*this)(x) != x) return false;
    return true;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("Permutation product: size mismatch");
    Permutation p = u;
    for (int x = 1; x <= u.size(); ++x) p.w_[static_cast<std::size_t>(x - 1)] = v(u(x));
    return p;
}

Permutation Permutation::times_simple(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("Permutation::times_simple: index out of range");
    Permutation p = *this;
    for (int& x : p.w_) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return p;
}

Permutation Permutation::simple_times(int i) const {
    if (i < 1 || i >= size()) throw std::invalid_argument("Permutation::simple_times: index out of range");
    Permutation p = *this;
    std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
    return p;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < w_.size(); ++k) os << (k ? "," : "") << w_[k];
    os << ']';
    return os.str();
}

int length(const Permutation& w) {
    int inv = 0;
    const auto& v = w.one_line();
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a] > v[b]) ++inv;
    return inv;
}

bool right_ascent(const Permutation& w, int i) {
    const Permutation inv = w.inverse();
    return inv(i) < inv(i + 1);
}

bool left_ascent(const Permutation& w, int i) { return w(i) < w(i + 1); }

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation cur = w;
    while (!cur.is_identity()) {
        const Permutation inv = cur.inverse();
        int i = 1;
        while (inv(i) < inv(i + 1)) ++i;
        cur = cur.times_simple(i);
        word.push_back(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

void compositions_rec(int parts_left, int remaining, Composition& cur, std::vector<Composition>& out) {
    if (parts_left == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = remaining; first >= 0; --first) {
        cur.push_back(first);
        compositions_rec(parts_left - 1, remaining - first, cur, out);
        cur.pop_back();
    }
}

void partitions_rec(int parts_left, int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 0; --first) {
        // The remaining parts cannot exceed `first`.
        if (static_cast<long>(first) * parts_left < remaining) break;
        cur.push_back(first);
        partitions_rec(parts_left - 1, remaining - first, first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int r) {
    if (n < 0 || r < 0) throw std::invalid_argument("enumerate_compositions: negative argument");
    std::vector<Composition> out;
    if (n == 0) {
        if (r == 0) out.emplace_back();
        return out;
    }
    Composition cur;
    compositions_rec(n, r, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int n, int l) {
    if (n < 0 || l < 0) throw std::invalid_argument("enumerate_partitions: negative argument");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, l, l, cur, out);
    return out;
}

std::vector<int> block_of_positions(const Composition& lambda) {
    std::vector<int> block;
    for (std::size_t b = 0; b < lambda.size(); ++b)
        for (int k = 0; k < lambda[b]; ++k) block.push_back(static_cast<int>(b));
    return block;
}

std::vector<Permutation> young_subgroup(const Composition& lambda) {
    const std::vector<int> block = block_of_positions(lambda);
    const int m = static_cast<int>(block.size());
    std::vector<Permutation> out;
    for (const auto& w : all_permutations(m)) {
        bool stabilizes = true;
        for (int x = 1; x <= m && stabilizes; ++x)
            stabilizes = block[static_cast<std::size_t>(x - 1)] == block[static_cast<std::size_t>(w(x) - 1)];
        if (stabilizes) out.push_back(w);
    }
    return out;
}

std::vector<Permutation> min_coset_reps(const Composition& lambda) {
    // w * d permutes the one-line entries of d inside each position block, so
    // the coset S_λ d is labelled by the sorted entries of d on each block.
    const std::vector<int> block = block_of_positions(lambda);
    const int m = static_cast<int>(block.size());
    std::map<std::vector<std::vector<int>>, Permutation> best;
    for (const auto& d : all_permutations(m)) {
        std::vector<std::vector<int>> key(lambda.size());
        for (int x = 1; x <= m; ++x) key[static_cast<std::size_t>(block[static_cast<std::size_t>(x - 1)])].push_back(d(x));
        for (auto& part : key) std::sort(part.begin(), part.end());
        auto it = best.find(key);
        if (it == best.end())
            best.emplace(std::move(key), d);
        else if (length(d) < length(it->second))
            it->second = d;
    }
    std::vector<Permutation> out;
    out.reserve(best.size());
    for (auto& [key, d] : best) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_min_coset_rep(const Composition& lambda, const Permutation& d) {
    const std::vector<int> block = block_of_positions(lambda);
    if (static_cast<int>(block.size()) != d.size()) return false;
    for (int x = 1; x < d.size(); ++x)
        if (block[static_cast<std::size_t>(x - 1)] == block[static_cast<std::size_t>(x)] && d(x) > d(x + 1)) return false;
    return true;
}

Partition trimmed(const Partition& lambda) {
    Partition out = lambda;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return b;
}

std::uint64_t syt_count(const Partition& lambda_in) {
    const Partition lambda = trimmed(lambda_in);
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("syt_count: parts must be weakly decreasing");
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            int below = 0;
            for (std::size_t k = i + 1; k < lambda.size() && lambda[k] > j; ++k) ++below;
            hooks *= lambda[i] - j - 1 + below + 1;
        }
    }
    mpz_class total;
    mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(weight(lambda)));
    mpz_class result = total / hooks;
    return result.get_ui();
}

std::uint64_t ssyt_count(const Partition& lambda_in, int n) {
    const Partition lambda = trimmed(lambda_in);
    if (static_cast<int>(lambda.size()) > n) throw std::domain_error("ssyt_count: partition has more than n parts");
    for (std::size_t i = 1; i < lambda.size(); ++i)
        if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("ssyt_count: parts must be weakly decreasing");
    std::vector<long> parts(static_cast<std::size_t>(n), 0);
    std::copy(lambda.begin(), lambda.end(), parts.begin());
    mpz_class num = 1;
    mpz_class den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= parts[static_cast<std::size_t>(i)] - parts[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    mpz_class result = num / den;
    return result.get_ui();
}

Permutation min_mover(const std::vector<int>& positions, int r) {
    std::vector<bool> in_set(static_cast<std::size_t>(r) + 1, false);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        const int p = positions[k];
        if (p < 1 || p > r || in_set[static_cast<std::size_t>(p)] || (k > 0 && positions[k - 1] >= p))
            throw std::invalid_argument("min_mover: positions must be strictly increasing within 1..r");
        in_set[static_cast<std::size_t>(p)] = true;
    }
    std::vector<int> one_line(positions);
    for (int p = 1; p <= r; ++p)
        if (!in_set[static_cast<std::size_t>(p)]) one_line.push_back(p);
    return Permutation(std::move(one_line));
}

}  // namespace dhecke

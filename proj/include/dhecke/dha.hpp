#pragma once

#include "dhecke/combinat.hpp"
#include "dhecke/report.hpp"
#include "dhecke/tensorspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dhecke {

/// Generator of the doubled Hecke algebra: T(i) = T_{s_i}, or X(l, σ) = x_σ^{(l)}
/// with σ in S_l (σ is the empty permutation when l = 0).
struct DHGenerator {
    enum class Kind { T, X };
    Kind kind;
    int index = 0;  // i for T, l for X
    Permutation sigma;

    static DHGenerator T(int i) { return {Kind::T, i, {}}; }
    static DHGenerator X(int l, Permutation sigma) { return {Kind::X, l, std::move(sigma)}; }
    static DHGenerator X(int l) { return {Kind::X, l, Permutation::identity(l)}; }

    /// "T1", "x2:[2,1]", "x0"; identity σ prints as "x<l>".
    std::string name() const;
    /// Throws std::invalid_argument unless the generator exists for this r.
    void check(int r) const;
};

using DHWord = std::vector<DHGenerator>;

/// Thrown by parse_word with the offending character offset.
class WordParseError : public std::invalid_argument {
public:
    WordParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Whitespace-separated tokens "T<i>", "x<l>", "x<l>:[one-line σ]".
DHWord parse_word(const std::string& text);

/// Ψ^V_l(σ) ⊗ id on V̄_{l̄} = V^{⊗l} ⊗ η^{⊗ r-l}, zero on every other basis vector.
/// Built directly from the Hecke action on V^{⊗l}.
SparseOperator<RationalFunction> psi_leading(const Permutation& sigma, int l, const TensorSpace& space);

/// ψ_σ^I: ψ_σ moved onto V̄_I by Ψ(T_{d_I}), d_I = min_mover(I), and zero off V̄_I:
/// Ψ(T_{d_I}) ∘ ψ_σ ∘ Ψ(T_{d_I})^{-1} ∘ P_I. An explicit reduced word for d_I
/// may be supplied.
SparseOperator<RationalFunction> psi_conjugated(const Permutation& sigma, const std::vector<int>& positions,
                                                const TensorSpace& space,
                                                const std::optional<std::vector<int>>& mover_word = std::nullopt);

/// Ξ(g) on the enhanced tensor space. x_σ^{(l)} is assembled from the
/// leading-stratum projector and Hecke generators, x_σ = P_{l̄} ∘ Ψ(T_σ).
SparseOperator<RationalFunction> xi_generator(const DHGenerator& g, const TensorSpace& space);

/// Ξ(g1 g2 ⋯ gk) = Ξ(gk) ∘ ⋯ ∘ Ξ(g1) (right-action convention).
SparseOperator<RationalFunction> evaluate_word(const DHWord& word, const TensorSpace& space);

/// T(1..r-1) together with X(l, id) for l = 0..r.
std::vector<DHGenerator> dha_generating_set(int r);
/// T(1..r-1) together with every X(l, σ).
std::vector<DHGenerator> dha_all_generators(int r);

/// Every instance of the doubled Hecke relations under Ξ, plus stratum
/// discipline and commutation with the Levi generators.
RelationReport verify_dha_relations(const TensorSpace& space);

}  // namespace dhecke

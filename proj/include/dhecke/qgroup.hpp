#pragma once

#include "dhecke/report.hpp"
#include "dhecke/tensorspace.hpp"

#include <string>
#include <vector>

namespace dhecke {

/// Generator of U_q(gl_m). K(i) stands for H(i) H(i+1)^{-1}.
struct QGenerator {
    enum class Kind { E, F, H, Hinv, K, Kinv };
    Kind kind;
    int index;

    static QGenerator E(int i) { return {Kind::E, i}; }
    static QGenerator F(int i) { return {Kind::F, i}; }
    static QGenerator H(int a) { return {Kind::H, a}; }
    static QGenerator Hinv(int a) { return {Kind::Hinv, a}; }
    static QGenerator K(int i) { return {Kind::K, i}; }
    static QGenerator Kinv(int i) { return {Kind::Kinv, i}; }

    /// "E1", "F2", "H3", "H3inv", "K1", "K1inv".
    std::string name() const;
    /// Inverse of name(); throws std::invalid_argument.
    static QGenerator parse(const std::string& text);

    friend bool operator==(const QGenerator& a, const QGenerator& b) { return a.kind == b.kind && a.index == b.index; }
};

using GeneratorWord = std::vector<QGenerator>;

/// Throws std::out_of_range unless g is a generator of U_q(gl_m).
void check_generator(const QGenerator& g, int m);

/// Matrix of g on the natural module of U_q(gl_m), basis v_1..v_m.
SparseOperator<RationalFunction> natural_action(const QGenerator& g, int m);

/// Δ^r(g) acting on the tensor space, as an element of U_q(gl_{letters}).
SparseOperator<RationalFunction> phi_operator(const QGenerator& g, const TensorSpace& space);
/// Φ of a word: Φ(g1 g2 ⋯ gk) = Φ(g1) ∘ Φ(g2) ∘ ⋯ ∘ Φ(gk).
SparseOperator<RationalFunction> phi_word(const GeneratorWord& word, const TensorSpace& space);

/// E_i, F_i (1 <= i < m), H_a and H_a^{-1} (1 <= a <= m).
std::vector<QGenerator> full_generators(int m);
/// Generators of the Levi subalgebra of U_q(gl_{n+1}): everything except E_n, F_n.
std::vector<QGenerator> levi_generators(int n);

/// Every defining relation of U_q(gl_m), m = space.letters(), as exact
/// operator identities on the tensor space.
RelationReport verify_qgroup_relations(const TensorSpace& space);

/// Φ(g) Ψ(T_{s_i}) = Ψ(T_{s_i}) Φ(g) for every generator g and every i.
RelationReport verify_commuting_actions(const TensorSpace& space);

}  // namespace dhecke

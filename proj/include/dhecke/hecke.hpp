#pragma once

#include "dhecke/combinat.hpp"
#include "dhecke/rational_function.hpp"
#include "dhecke/report.hpp"
#include "dhecke/tensorspace.hpp"

#include "json.hpp"

#include <map>
#include <vector>

namespace dhecke {

/// The coefficient q^{-1} - q of the quadratic relation
/// T_s^2 = 1 + (q^{-1} - q) T_s.
RationalFunction hecke_c();

/// Element of H_q(S_r) in the T_w basis.
class HeckeElement {
public:
    explicit HeckeElement(int r) : r_(r) {}

    static HeckeElement unit(int r);
    static HeckeElement basis(const Permutation& w, const RationalFunction& c = 1);
    static HeckeElement generator(int i, int r);

    int r() const { return r_; }
    const std::map<Permutation, RationalFunction>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RationalFunction coeff(const Permutation& w) const;

    HeckeElement& add_term(const Permutation& w, const RationalFunction& c);
    HeckeElement& operator+=(const HeckeElement& b);
    HeckeElement& operator-=(const HeckeElement& b);
    HeckeElement& operator*=(const RationalFunction& c);

    /// Right multiplication by T_{s_i}.
    HeckeElement times_generator(int i) const;

    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(HeckeElement a, const RationalFunction& c) { return a *= c; }
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.r_ == b.r_ && a.terms_ == b.terms_;
    }

    /// JSON map from one-line permutation text to canonical scalar text.
    nlohmann::json to_json() const;

private:
    int r_;
    std::map<Permutation, RationalFunction> terms_;
};

/// Product in H_q(S_r): bilinear extension of T_w T_s = T_{ws} when
/// ℓ(ws) > ℓ(w), else T_{ws} + (q^{-1} - q) T_w.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/// Matrix of right multiplication by T_{s_i} on the tensor space.
SparseOperator<RationalFunction> psi_generator(int i, const TensorSpace& space);

/// Ψ(T_{s_{i1}} ⋯ T_{s_{ik}}) = Ψ(T_{s_{ik}}) ∘ ⋯ ∘ Ψ(T_{s_{i1}}).
SparseOperator<RationalFunction> psi_word(const std::vector<int>& word, const TensorSpace& space);

/// Ψ(T_s)^{-1} = Ψ(T_s) + (q - q^{-1}).
SparseOperator<RationalFunction> psi_generator_inverse(int i, const TensorSpace& space);

/// Linear extension of w -> Ψ(T_w); satisfies Ψ(ab) = Ψ(b) ∘ Ψ(a).
SparseOperator<RationalFunction> psi_element(const HeckeElement& h, const TensorSpace& space);

/// x_λ = Σ_{w ∈ S_λ} q^{-ℓ(w)} T_w.
HeckeElement q_symmetrizer(const Composition& lambda);

/// (x_λ T_d) T_{s_i} by the three-case permutation-module formula; throws
/// std::domain_error when d is not a minimal coset representative.
HeckeElement permutation_module_action(const Composition& lambda, const Permutation& d, int i);

/// Quadratic, braid and commuting relations of the Ψ(T_i), the inverse formula,
/// and Ψ(T_w T_s) = Ψ(T_s) ∘ Ψ(T_w) for every w in S_r and simple s.
RelationReport verify_hecke_relations(const TensorSpace& space);

}  // namespace dhecke

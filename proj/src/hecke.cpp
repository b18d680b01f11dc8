#include "dhecke/hecke.hpp"

#include <stdexcept>

namespace dhecke {

RationalFunction hecke_c() { return RationalFunction::q_pow(-1) - RationalFunction::q(); }

HeckeElement HeckeElement::unit(int r) { return basis(Permutation::identity(r)); }

HeckeElement HeckeElement::basis(const Permutation& w, const RationalFunction& c) {
    HeckeElement h(w.size());
    h.add_term(w, c);
    return h;
}

HeckeElement HeckeElement::generator(int i, int r) { return basis(Permutation::simple(i, r)); }

RationalFunction HeckeElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction{} : it->second;
}

HeckeElement& HeckeElement::add_term(const Permutation& w, const RationalFunction& c) {
    if (w.size() != r_) throw std::invalid_argument("HeckeElement: permutation size differs from r");
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& b) {
    if (b.r_ != r_) throw std::invalid_argument("HeckeElement: rank mismatch");
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& b) {
    if (b.r_ != r_) throw std::invalid_argument("HeckeElement: rank mismatch");
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

HeckeElement HeckeElement::times_generator(int i) const {
    const RationalFunction c = hecke_c();
    HeckeElement out(r_);
    for (const auto& [w, v] : terms_) {
        out.add_term(w.times_simple(i), v);
        if (!right_ascent(w, i)) out.add_term(w, v * c);
    }
    return out;
}

nlohmann::json HeckeElement::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, c] : terms_) j[w.to_string()] = c.to_string();
    return j;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.r() != b.r()) throw std::invalid_argument("hecke_mul: rank mismatch");
    HeckeElement out(a.r());
    for (const auto& [w, c] : b.terms()) {
        HeckeElement partial = a;
        for (int i : reduced_word(w)) partial = partial.times_generator(i);
        partial *= c;
        out += partial;
    }
    return out;
}

SparseOperator<RationalFunction> psi_generator(int i, const TensorSpace& space) {
    if (i < 1 || i >= space.r()) throw std::invalid_argument("psi_generator: index out of range");
    const RationalFunction c = hecke_c();
    const RationalFunction qinv = RationalFunction::q_pow(-1);
    SparseOperator<RationalFunction> op(space.dim());
    for (std::size_t id = 0; id < space.dim(); ++id) {
        MultiIndex f = space.decode(id);
        const int a = f[static_cast<std::size_t>(i - 1)];
        const int b = f[static_cast<std::size_t>(i)];
        auto& col = op.column(id);
        if (a == b) {
            col.add_at(id, qinv);
            continue;
        }
        MultiIndex swapped = f;
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        col.add_at(space.encode(swapped), 1);
        if (a > b) col.add_at(id, c);
    }
    return op;
}

SparseOperator<RationalFunction> psi_word(const std::vector<int>& word, const TensorSpace& space) {
    auto op = SparseOperator<RationalFunction>::identity(space.dim(), 1);
    for (int i : word) op = psi_generator(i, space).compose(op);
    return op;
}

SparseOperator<RationalFunction> psi_generator_inverse(int i, const TensorSpace& space) {
    auto op = psi_generator(i, space);
    op.add_scaled(SparseOperator<RationalFunction>::identity(space.dim(), 1), -hecke_c());
    return op;
}

SparseOperator<RationalFunction> psi_element(const HeckeElement& h, const TensorSpace& space) {
    if (h.r() != space.r()) throw std::invalid_argument("psi_element: rank mismatch");
    SparseOperator<RationalFunction> op(space.dim());
    for (const auto& [w, c] : h.terms()) op.add_scaled(psi_word(reduced_word(w), space), c);
    return op;
}

HeckeElement q_symmetrizer(const Composition& lambda) {
    HeckeElement x(weight(lambda));
    for (const auto& w : young_subgroup(lambda)) x.add_term(w, RationalFunction::q_pow(-length(w)));
    return x;
}

HeckeElement permutation_module_action(const Composition& lambda, const Permutation& d, int i) {
    if (!is_min_coset_rep(lambda, d)) throw std::domain_error("permutation_module_action: d is not a minimal coset representative");
    if (i < 1 || i >= d.size()) throw std::invalid_argument("permutation_module_action: index out of range");
    const HeckeElement x = q_symmetrizer(lambda);
    const Permutation ds = d.times_simple(i);
    auto x_times = [&](const Permutation& w) { return hecke_mul(x, HeckeElement::basis(w)); };
    if (length(ds) == length(d) + 1) {
        if (is_min_coset_rep(lambda, ds)) return x_times(ds);
        return x_times(d) * RationalFunction::q_pow(-1);
    }
    return x_times(d) * hecke_c() + x_times(ds);
}

RelationReport verify_hecke_relations(const TensorSpace& space) {
    using Op = SparseOperator<RationalFunction>;
    const int r = space.r();
    RelationReport report;
    report.subject = "Psi(Hecke algebra) on " + std::string(space.is_enhanced() ? "enhanced" : "classical") +
                     " tensor power n=" + std::to_string(space.n()) + " r=" + std::to_string(r);
    const Op id = Op::identity(space.dim(), 1);
    std::vector<Op> t{Op{}};
    for (int i = 1; i < r; ++i) t.push_back(psi_generator(i, space));
    for (int i = 1; i < r; ++i) {
        const std::string ti = "T" + std::to_string(i);
        report.family("quadratic T_i^2 = 1 + (q^-1 - q) T_i").check(t[i] * t[i] == id + scaled(t[i], hecke_c()), ti);
        report.family("inverse T_i^-1 = T_i + (q - q^-1)").check(t[i] * psi_generator_inverse(i, space) == id, ti);
        for (int j = i + 1; j < r; ++j) {
            const std::string tij = ti + ",T" + std::to_string(j);
            if (j - i > 1)
                report.family("commuting T_i T_j = T_j T_i, |i-j|>1").check(t[i] * t[j] == t[j] * t[i], tij);
            else
                report.family("braid T_i T_j T_i = T_j T_i T_j").check(t[i] * t[j] * t[i] == t[j] * t[i] * t[j], tij);
        }
    }
    if (r <= 4) {
        for (const auto& w : all_permutations(r)) {
            const Op tw = psi_word(reduced_word(w), space);
            for (int i = 1; i < r; ++i) {
                const HeckeElement prod = hecke_mul(HeckeElement::basis(w), HeckeElement::generator(i, r));
                report.family("Psi(T_w T_s) = Psi(T_s) Psi(T_w)")
                    .check(psi_element(prod, space) == t[i] * tw, w.to_string() + ",s" + std::to_string(i));
            }
        }
    }
    return report;
}

}  // namespace dhecke

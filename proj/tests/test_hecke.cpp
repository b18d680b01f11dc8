#include "dhecke/hecke.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace dhecke;

using Op = SparseOperator<RationalFunction>;

namespace {

const RationalFunction q = RationalFunction::q();
const RationalFunction qinv = RationalFunction::q_pow(-1);

SparseVector<RationalFunction> basis_vector(const TensorSpace& space, const MultiIndex& j) {
    return SparseVector<RationalFunction>::unit(space.dim(), space.encode(j), 1);
}

// Independent product of basis elements: T_w T_v by expanding T_v along a
// reduced word and applying the quadratic rule with explicit inversion counts.
HeckeElement slow_product(const Permutation& w, const Permutation& v) {
    std::map<std::vector<int>, RationalFunction> acc{{w.one_line(), 1}};
    for (int i : reduced_word(v)) {
        std::map<std::vector<int>, RationalFunction> next;
        for (const auto& [u, c] : acc) {
            const auto us = oracle::compose(u, oracle::simple(i, w.size()));
            next[us] += c;
            if (oracle::inversions(us) < oracle::inversions(u)) next[u] += c * hecke_c();
        }
        acc = std::move(next);
    }
    HeckeElement out(w.size());
    for (const auto& [u, c] : acc) out.add_term(Permutation(u), c);
    return out;
}

HeckeElement random_element(int r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<long> value(-3, 3);
    HeckeElement h(r);
    for (const auto& w : all_permutations(r))
        if (coin(rng) == 0) h.add_term(w, RationalFunction(value(rng)) + RationalFunction(value(rng)) * q);
    return h;
}

}  // namespace

TEST_CASE("quadratic and braid relations in the algebra") {
    const auto t1 = HeckeElement::generator(1, 3), t2 = HeckeElement::generator(2, 3);
    CHECK(hecke_mul(t1, t1) == HeckeElement::unit(3) + t1 * hecke_c());
    CHECK(hecke_mul(hecke_mul(t1, t2), t1) == hecke_mul(hecke_mul(t2, t1), t2));
    std::mt19937_64 rng(3);
    const auto a = random_element(3, rng);
    CHECK(hecke_mul(HeckeElement::unit(3), a) == a);
    CHECK(hecke_mul(a, HeckeElement::unit(3)) == a);
}

TEST_CASE("hecke_mul agrees with the word expansion oracle") {
    for (int r = 1; r <= 4; ++r)
        for (const auto& w : all_permutations(r))
            for (const auto& v : all_permutations(r))
                if (r < 4 || length(v) <= 2) CHECK(hecke_mul(HeckeElement::basis(w), HeckeElement::basis(v)) == slow_product(w, v));
}

TEST_CASE("hecke_mul is associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_element(3, rng), b = random_element(3, rng), c = random_element(3, rng);
        CHECK(hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c)));
    }
}

TEST_CASE("three cases of the right action") {
    const auto space = TensorSpace::classical(2, 2);
    const Op t = psi_generator(1, space);
    CHECK(t.apply(basis_vector(space, {1, 2})) == basis_vector(space, {2, 1}));
    auto expected = basis_vector(space, {1, 2});
    expected.add_scaled(basis_vector(space, {2, 1}), hecke_c());
    CHECK(t.apply(basis_vector(space, {2, 1})) == expected);
    auto scaled_11 = basis_vector(space, {1, 1});
    scaled_11 *= qinv;
    CHECK(t.apply(basis_vector(space, {1, 1})) == scaled_11);
}

TEST_CASE("eta is the largest letter") {
    const auto space = TensorSpace::enhanced(2, 2);
    const Op t = psi_generator(1, space);
    CHECK(t.apply(basis_vector(space, {1, 3})) == basis_vector(space, {3, 1}));
    auto scaled_33 = basis_vector(space, {3, 3});
    scaled_33 *= qinv;
    CHECK(t.apply(basis_vector(space, {3, 3})) == scaled_33);
}

TEST_CASE("psi_element") {
    const auto space = TensorSpace::classical(2, 3);
    const Op id = Op::identity(space.dim(), 1);
    CHECK(psi_element(HeckeElement::unit(3), space) == id);
    const Op t1 = psi_generator(1, space);
    const auto t1t1 = hecke_mul(HeckeElement::generator(1, 3), HeckeElement::generator(1, 3));
    CHECK(psi_element(t1t1, space) == t1 * t1);
    CHECK(t1 * t1 == id + scaled(t1, hecke_c()));
    HeckeElement inv = HeckeElement::generator(1, 3);
    inv.add_term(Permutation::identity(3), q - qinv);
    CHECK(psi_element(inv, space) * t1 == id);
    CHECK(psi_generator_inverse(1, space) == psi_element(inv, space));
}

TEST_CASE("psi is an anti-homomorphism on random pairs") {
    std::mt19937_64 rng(17);
    const auto space = TensorSpace::enhanced(1, 3);
    for (int trial = 0; trial < 8; ++trial) {
        const auto a = random_element(3, rng), b = random_element(3, rng);
        CHECK(psi_element(hecke_mul(a, b), space) == psi_element(b, space) * psi_element(a, space));
    }
}

TEST_CASE("relations of the generators for r up to 4") {
    for (int r = 1; r <= 4; ++r)
        for (int n : {1, 2}) {
            CHECK(verify_hecke_relations(TensorSpace::classical(n, r)).all_passed());
            if (r <= 3) CHECK(verify_hecke_relations(TensorSpace::enhanced(n, r)).all_passed());
        }
}

TEST_CASE("T_w does not depend on the reduced word") {
    const auto space = TensorSpace::enhanced(1, 3);
    CHECK(psi_word({1, 2, 1}, space) == psi_word({2, 1, 2}, space));
    const auto space4 = TensorSpace::classical(2, 4);
    CHECK(psi_word({1, 3}, space4) == psi_word({3, 1}, space4));
}

TEST_CASE("q-symmetrizer") {
    CHECK(q_symmetrizer({2, 1}) == HeckeElement::unit(3) + HeckeElement::generator(1, 3) * qinv);
    CHECK(q_symmetrizer({1, 1, 1}) == HeckeElement::unit(3));
    const auto x = q_symmetrizer({2, 1});
    CHECK(hecke_mul(x, HeckeElement::generator(1, 3)) == x * qinv);
    // The unweighted sum fails the same identity.
    const auto plain = HeckeElement::unit(3) + HeckeElement::generator(1, 3);
    CHECK_FALSE(hecke_mul(plain, HeckeElement::generator(1, 3)) == plain * qinv);
}

TEST_CASE("permutation module action") {
    const auto x = q_symmetrizer({2, 1});
    CHECK(permutation_module_action({2, 1}, Permutation::identity(3), 1) == x * qinv);
    CHECK(permutation_module_action({1, 1, 1}, Permutation::identity(3), 1) == HeckeElement::generator(1, 3));
    CHECK_THROWS_AS(permutation_module_action({2, 1}, Permutation{2, 1, 3}, 1), std::domain_error);
    for (int m = 1; m <= 4; ++m)
        for (int parts = 1; parts <= 3; ++parts)
            for (const auto& lambda : enumerate_compositions(parts, m))
                for (const auto& d : min_coset_reps(lambda))
                    for (int i = 1; i < m; ++i) {
                        const auto direct = hecke_mul(hecke_mul(q_symmetrizer(lambda), HeckeElement::basis(d)),
                                                      HeckeElement::generator(i, m));
                        CHECK(permutation_module_action(lambda, d, i) == direct);
                    }
}

TEST_CASE("x_lambda T_d is a free family") {
    for (const Composition& lambda : {Composition{2, 1}, Composition{2, 2}, Composition{1, 2, 1}, Composition{3, 1}}) {
        const int m = weight(lambda);
        const auto perms = all_permutations(m);
        const RationalField f{mpq_class(5, 3)};
        std::vector<std::vector<mpq_class>> rows;
        for (const auto& d : min_coset_reps(lambda)) {
            const auto e = hecke_mul(q_symmetrizer(lambda), HeckeElement::basis(d));
            std::vector<mpq_class> row;
            for (const auto& w : perms) row.push_back(f.lift(e.coeff(w)));
            rows.push_back(row);
        }
        std::uint64_t denom = 1;
        for (int p : lambda) denom *= factorial(p);
        CHECK(oracle::rank(rows) == factorial(m) / denom);
    }
}

TEST_CASE("movers act cleanly on the leading stratum") {
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}}) {
        const auto space = TensorSpace::enhanced(n, r);
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> positions;
            for (int k = 0; k < r; ++k)
                if (mask & (1 << k)) positions.push_back(k + 1);
            const int l = static_cast<int>(positions.size());
            std::vector<int> lead(static_cast<std::size_t>(l));
            std::iota(lead.begin(), lead.end(), 1);
            const Op mover = psi_word(reduced_word(min_mover(positions, r)), space);
            std::set<MultiIndex> images;
            for (const auto& j : subspace_basis(lead, n, r)) {
                const auto image = mover.apply(basis_vector(space, j));
                REQUIRE(image.nnz() == 1);
                CHECK(image.entries().front().second == 1);
                const MultiIndex target = space.decode(image.entries().front().first);
                CHECK(support(target, n) == positions);
                images.insert(target);
            }
            CHECK(images.size() == subspace_basis(positions, n, r).size());
        }
    }
}

TEST_CASE("json form") {
    const auto j = (HeckeElement::unit(2) + HeckeElement::generator(1, 2) * qinv).to_json();
    CHECK(j.size() == 2);
    CHECK(j["[2,1]"] == "(1)/(q)");
}

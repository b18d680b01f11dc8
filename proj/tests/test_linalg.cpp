#include "dhecke/dha.hpp"
#include "dhecke/hecke.hpp"
#include "dhecke/linalg.hpp"
#include "dhecke/qgroup.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace dhecke;

using Q = mpq_class;
using Op = SparseOperator<Q>;

namespace {

const RationalField field{Q(5, 2)};

std::vector<Op> levi_ops(int n, int r) {
    const auto space = TensorSpace::enhanced(n, r);
    std::vector<Op> out;
    for (const auto& g : levi_generators(n)) out.push_back(lift(phi_operator(g, space), field));
    return out;
}

std::vector<Op> dha_ops(int n, int r) {
    const auto space = TensorSpace::enhanced(n, r);
    std::vector<Op> out;
    for (const auto& g : dha_generating_set(r)) out.push_back(lift(xi_generator(g, space), field));
    return out;
}

std::vector<Op> matrix_units(std::size_t d) {
    std::vector<Op> out;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Op u(d);
            u.column(j).push_back(i, Q(1));
            out.push_back(u);
        }
    return out;
}

std::vector<oracle::Dense> dense_all(const std::vector<Op>& ops) {
    std::vector<oracle::Dense> out;
    for (const auto& a : ops) out.push_back(oracle::dense(a));
    return out;
}

}  // namespace

TEST_CASE("span_insert") {
    SpanBasis<Q> span(16);
    CHECK_FALSE(span_insert(span, Op(4)));
    CHECK(span.dimension() == 0);
    CHECK(span_insert(span, Op::identity(4, Q(1))));
    CHECK(span.dimension() == 1);
    Op a(4);
    a.column(1).push_back(2, Q(3));
    a.column(3).push_back(0, Q(-1));
    CHECK(span_insert(span, a));
    CHECK_FALSE(span_insert(span, scaled(a, Q(5))));
    CHECK(span.dimension() == 2);
    CHECK_THROWS_AS(span_insert(span, Op(3)), DimensionMismatch);
}

TEST_CASE("echelon form invariants") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> coin(0, 3);
    std::uniform_int_distribution<long> value(-4, 4);
    SpanBasis<Q> span(12);
    std::vector<std::vector<Q>> inserted;
    for (int k = 0; k < 10; ++k) {
        SparseVector<Q> v(12);
        std::vector<Q> dense(12, 0);
        for (std::size_t i = 0; i < 12; ++i)
            if (coin(rng) == 0) {
                dense[i] = value(rng);
                v.add_at(i, dense[i]);
            }
        inserted.push_back(dense);
        span.insert(v);
    }
    CHECK(span.dimension() == oracle::rank(inserted));
    for (std::size_t k = 0; k < span.dimension(); ++k) {
        const auto& row = span.rows()[k];
        CHECK(row.entries().front().first == span.pivots()[k]);
        CHECK(row.entries().front().second == 1);
        for (std::size_t other = 0; other < span.dimension(); ++other)
            if (other != k) CHECK(span.rows()[other].find(span.pivots()[k]) == nullptr);
    }
    for (const auto& v : span.nullspace(Q(1)))
        for (const auto& row : span.rows()) {
            Q dot = 0;
            for (const auto& [i, c] : row.entries())
                if (const Q* x = v.find(i)) dot += c * *x;
            CHECK(dot == 0);
        }
    CHECK(span.nullspace(Q(1)).size() + span.dimension() == 12);
}

TEST_CASE("closure") {
    CHECK(algebra_closure(std::vector<Op>{Op::identity(3, Q(1))}, 3, Q(1)).dimension() == 1);
    const auto space = TensorSpace::classical(2, 2);
    const std::vector<Op> t{lift(psi_generator(1, space), field)};
    CHECK(algebra_closure(t, 4, Q(1)).dimension() == 2);
    CHECK(algebra_closure(matrix_units(3), 3, Q(1)).dimension() == 9);
}

TEST_CASE("commutant") {
    CHECK(commutant(std::vector<Op>{Op::identity(3, Q(1))}, 3, Q(1)).dimension() == 9);
    CHECK(commutant(matrix_units(3), 3, Q(1)).dimension() == 1);
    CHECK(commutant(levi_ops(1, 2), 4, Q(1)).dimension() == 6);
    CHECK(oracle::commutant_dimension(dense_all(levi_ops(1, 2)), 4) == 6);
}

TEST_CASE("closure and commutant agree with the dense oracles") {
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
        const std::size_t d = TensorSpace::enhanced(n, r).dim();
        for (const auto& gens : {levi_ops(n, r), dha_ops(n, r)}) {
            const auto dense = dense_all(gens);
            CHECK(algebra_closure(gens, d, Q(1)).dimension() == oracle::closure_dimension(dense, d));
            CHECK(commutant(gens, d, Q(1)).dimension() == oracle::commutant_dimension(dense, d));
        }
    }
}

TEST_CASE("invariance under reordering and redundant generators") {
    const std::size_t d = 9;
    auto gens = dha_ops(2, 2);
    const auto base_closure = algebra_closure(gens, d, Q(1));
    const auto base_comm = commutant(gens, d, Q(1));
    std::reverse(gens.begin(), gens.end());
    CHECK(span_equal(algebra_closure(gens, d, Q(1)), base_closure));
    CHECK(span_equal(commutant(gens, d, Q(1)), base_comm));
    gens.push_back(gens[0] * gens[1]);
    gens.push_back(gens[2] * gens[2] * gens[0]);
    CHECK(span_equal(algebra_closure(gens, d, Q(1)), base_closure));
    CHECK(span_equal(commutant(gens, d, Q(1)), base_comm));
    // The commutant only sees the generated algebra.
    CHECK(span_equal(commutant(base_closure, d, Q(1)), base_comm));
}

TEST_CASE("span equality") {
    const auto a = algebra_closure(levi_ops(2, 2), 9, Q(1));
    CHECK(span_equal(a, a));
    SpanBasis<Q> one(4), two(4);
    span_insert(one, Op::identity(2, Q(1)));
    span_insert(two, Op::identity(2, Q(2)));
    CHECK(span_equal(one, two));
    CHECK(span_equal(a, commutant(dha_ops(2, 2), 9, Q(1))));
    CHECK_FALSE(span_equal(a, commutant(levi_ops(2, 2), 9, Q(1))));
}

TEST_CASE("parallel constraint generation gives the same basis") {
    const auto gens = levi_ops(2, 2);
    const auto one = commutant(gens, 9, Q(1), 1);
    const auto many = commutant(gens, 9, Q(1), 4);
    CHECK(one.pivots() == many.pivots());
    CHECK(one.rows() == many.rows());
}

TEST_CASE("exact Q(q) elimination matches specializations") {
    const auto space = TensorSpace::enhanced(1, 2);
    std::vector<SparseOperator<RationalFunction>> gens;
    for (const auto& g : dha_generating_set(2)) gens.push_back(xi_generator(g, space));
    const auto exact = commutant(gens, 4, RationalFunction(1));
    CHECK(exact.dimension() == commutant(lift_all(gens, field), 4, Q(1)).dimension());
    CHECK(exact.dimension() == 3);
}

#include "dhecke/hecke.hpp"
#include "dhecke/qgroup.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>

using namespace dhecke;

using Op = SparseOperator<RationalFunction>;
using Vec = SparseVector<RationalFunction>;

namespace {

const RationalFunction q = RationalFunction::q();

Vec e(const TensorSpace& space, const MultiIndex& j, const RationalFunction& c = 1) {
    Vec v(space.dim());
    v.add_at(space.encode(j), c);
    return v;
}

Vec sum(Vec a, const Vec& b) {
    a.add_scaled(b, 1);
    return a;
}

std::vector<std::vector<int>> all_subsets(int r) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> s;
        for (int k = 0; k < r; ++k)
            if (mask & (1 << k)) s.push_back(k + 1);
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("natural module") {
    auto v = [](int k) { return SparseVector<RationalFunction>::unit(3, static_cast<std::size_t>(k - 1), 1); };
    auto qv = [](int k) {
        SparseVector<RationalFunction> x(3);
        x.add_at(static_cast<std::size_t>(k - 1), RationalFunction::q());
        return x;
    };
    CHECK(natural_action(QGenerator::H(1), 3).apply(v(1)) == qv(1));
    CHECK(natural_action(QGenerator::H(1), 3).apply(v(2)) == v(2));
    CHECK(natural_action(QGenerator::F(1), 3).apply(v(1)) == v(2));
    CHECK(natural_action(QGenerator::F(1), 3).apply(v(2)).is_zero());
    CHECK(natural_action(QGenerator::E(1), 3).apply(v(2)) == v(1));
    CHECK(natural_action(QGenerator::E(1), 3).apply(v(1)).is_zero());
    CHECK_THROWS_AS(natural_action(QGenerator::E(3), 3), std::out_of_range);
}

TEST_CASE("coproduct by hand") {
    for (const auto& space : {TensorSpace::classical(2, 2), TensorSpace::enhanced(2, 2)}) {
        CHECK(phi_operator(QGenerator::E(1), space).apply(e(space, {2, 2})) == sum(e(space, {2, 1}), e(space, {1, 2}, q)));
        CHECK(phi_operator(QGenerator::F(1), space).apply(e(space, {1, 1})) == sum(e(space, {2, 1}), e(space, {1, 2}, q)));
    }
}

TEST_CASE("H is diagonal with q to the letter count") {
    const auto space = TensorSpace::enhanced(2, 3);
    for (int a = 1; a <= 3; ++a) {
        const Op h = phi_operator(QGenerator::H(a), space);
        for (std::size_t id = 0; id < space.dim(); ++id) {
            const MultiIndex j = space.decode(id);
            const long count = std::count(j.begin(), j.end(), a);
            CHECK(h.column(id) == e(space, j, RationalFunction::q_pow(count)));
        }
        CHECK(h * phi_operator(QGenerator::Hinv(a), space) == Op::identity(space.dim(), 1));
    }
}

TEST_CASE("K_i is H_i H_{i+1}^-1") {
    const auto space = TensorSpace::enhanced(2, 2);
    CHECK(phi_operator(QGenerator::K(1), space) ==
          phi_operator(QGenerator::H(1), space) * phi_operator(QGenerator::Hinv(2), space));
    CHECK(phi_word({QGenerator::H(1), QGenerator::Hinv(2)}, space) == phi_operator(QGenerator::K(1), space));
}

TEST_CASE("generator names") {
    for (const auto& g : full_generators(3)) CHECK(QGenerator::parse(g.name()) == g);
    CHECK(QGenerator::parse("K1inv") == QGenerator::Kinv(1));
    CHECK(QGenerator::H(3).name() == "H3");
    CHECK_THROWS_AS(QGenerator::parse("Z1"), std::invalid_argument);
}

TEST_CASE("Levi generators") {
    auto names = [](const std::vector<QGenerator>& gs) {
        std::set<std::string> s;
        for (const auto& g : gs) s.insert(g.name());
        return s;
    };
    CHECK(names(levi_generators(2)) ==
          std::set<std::string>{"E1", "F1", "H1", "H2", "H3", "H1inv", "H2inv", "H3inv"});
    CHECK(names(levi_generators(1)) == std::set<std::string>{"H1", "H2", "H1inv", "H2inv"});
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> diff;
        const auto levi = names(levi_generators(n));
        for (const auto& s : names(full_generators(n + 1)))
            if (!levi.count(s)) diff.insert(s);
        CHECK(diff == std::set<std::string>{"E" + std::to_string(n), "F" + std::to_string(n)});
    }
}

TEST_CASE("EF relation and Serre relation at n=2, r=2") {
    const auto space = TensorSpace::enhanced(2, 2);
    auto phi = [&](QGenerator g) { return phi_operator(g, space); };
    const RationalFunction denom = (q - RationalFunction::q_pow(-1)).inverse();
    const Op ef = phi(QGenerator::E(1)) * phi(QGenerator::F(1)) - phi(QGenerator::F(1)) * phi(QGenerator::E(1));
    CHECK(ef == scaled(phi(QGenerator::K(1)) - phi(QGenerator::Kinv(1)), denom));
    const Op e1 = phi(QGenerator::E(1)), e2 = phi(QGenerator::E(2));
    const Op serre = e1 * e1 * e2 - scaled(e1 * e2 * e1, q + RationalFunction::q_pow(-1)) + e2 * e1 * e1;
    CHECK(serre.is_zero());
}

TEST_CASE("all relations hold on the representation") {
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}}) {
        const auto report = verify_qgroup_relations(TensorSpace::enhanced(n, r));
        CHECK_MESSAGE(report.all_passed(), report.to_text());
        CHECK(report.total_instances() > 0);
        CHECK(verify_commuting_actions(TensorSpace::enhanced(n, r)).all_passed());
    }
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}})
        CHECK(verify_qgroup_relations(TensorSpace::classical(n, r)).all_passed());
}

TEST_CASE("Levi operators preserve strata and every V_I") {
    for (const auto& [n, r] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}}) {
        const auto space = TensorSpace::enhanced(n, r);
        for (const auto& g : levi_generators(n)) {
            const Op phi = phi_operator(g, space);
            for (const auto& positions : all_subsets(r)) {
                const Op p = subspace_projector(space, positions);
                CHECK(phi * p == p * phi * p);
            }
        }
        // E_n leaves the Levi blocks.
        const Op en = phi_operator(QGenerator::E(n), space);
        CHECK_FALSE(en * stratum_projector(space, r - 1) == stratum_projector(space, r - 1) * en);
    }
}

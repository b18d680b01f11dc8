#include "dhecke/dha.hpp"

#include "dhecke/hecke.hpp"
#include "dhecke/qgroup.hpp"

#include <cctype>
#include <map>
#include <numeric>

namespace dhecke {

namespace {

using Op = SparseOperator<RationalFunction>;

std::vector<int> leading_positions(int l) {
    std::vector<int> positions(static_cast<std::size_t>(l));
    std::iota(positions.begin(), positions.end(), 1);
    return positions;
}

void require_enhanced(const TensorSpace& space, const char* who) {
    if (!space.is_enhanced()) throw std::invalid_argument(std::string(who) + ": needs the enhanced tensor space");
}

}  // namespace

std::string DHGenerator::name() const {
    if (kind == Kind::T) return "T" + std::to_string(index);
    std::string s = "x" + std::to_string(index);
    if (!sigma.is_identity()) s += ":" + sigma.to_string();
    return s;
}

void DHGenerator::check(int r) const {
    if (kind == Kind::T) {
        if (index < 1 || index >= r) throw std::invalid_argument("generator " + name() + " needs 1 <= i <= r-1");
        return;
    }
    if (index < 0 || index > r) throw std::invalid_argument("generator " + name() + " needs 0 <= l <= r");
    if (sigma.size() != index) throw std::invalid_argument("generator " + name() + ": permutation is not in S_l");
}

DHWord parse_word(const std::string& text) {
    DHWord word;
    std::size_t pos = 0;
    auto read_int = [&](const char* what) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw WordParseError(std::string("expected ") + what, start);
        return std::stoi(text.substr(start, pos - start));
    };
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        const std::size_t token_start = pos;
        const char head = text[pos++];
        if (head == 'T') {
            word.push_back(DHGenerator::T(read_int("generator index")));
        } else if (head == 'x') {
            const int l = read_int("level");
            if (pos < text.size() && text[pos] == ':') {
                ++pos;
                if (pos >= text.size() || text[pos] != '[') throw WordParseError("expected '['", pos);
                ++pos;
                std::vector<int> one_line;
                while (true) {
                    while (pos < text.size() && text[pos] == ' ') ++pos;
                    if (pos < text.size() && text[pos] == ']' && one_line.empty()) break;
                    one_line.push_back(read_int("permutation entry"));
                    while (pos < text.size() && text[pos] == ' ') ++pos;
                    if (pos < text.size() && text[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    if (pos < text.size() && text[pos] == ']') break;
                    throw WordParseError("expected ',' or ']'", pos);
                }
                ++pos;
                try {
                    word.push_back(DHGenerator::X(l, Permutation(one_line)));
                } catch (const std::invalid_argument& e) {
                    throw WordParseError(e.what(), token_start);
                }
                if (static_cast<int>(one_line.size()) != l) throw WordParseError("permutation is not in S_l", token_start);
            } else {
                word.push_back(DHGenerator::X(l));
            }
        } else {
            throw WordParseError(std::string("unexpected character '") + head + "'", token_start);
        }
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
            throw WordParseError("expected whitespace between tokens", pos);
    }
    return word;
}

SparseOperator<RationalFunction> psi_leading(const Permutation& sigma, int l, const TensorSpace& space) {
    require_enhanced(space, "psi_leading");
    if (l < 0 || l > space.r() || sigma.size() != l) throw std::invalid_argument("psi_leading: need sigma in S_l, l <= r");
    const TensorSpace head = TensorSpace::classical(space.n(), l);
    const Op local = psi_word(reduced_word(sigma), head);
    const std::vector<int> lead = leading_positions(l);
    Op out(space.dim());
    for (std::size_t id = 0; id < space.dim(); ++id) {
        const MultiIndex j = space.decode(id);
        if (support(j, space.n()) != lead) continue;
        const MultiIndex j_head(j.begin(), j.begin() + l);
        for (const auto& [row, c] : local.column(head.encode(j_head)).entries()) {
            MultiIndex target = head.decode(row);
            target.resize(static_cast<std::size_t>(space.r()), space.eta());
            out.column(id).add_at(space.encode(target), c);
        }
    }
    return out;
}

SparseOperator<RationalFunction> psi_conjugated(const Permutation& sigma, const std::vector<int>& positions,
                                                const TensorSpace& space, const std::optional<std::vector<int>>& mover_word) {
    require_enhanced(space, "psi_conjugated");
    const int l = static_cast<int>(positions.size());
    const Permutation d = min_mover(positions, space.r());
    const std::vector<int> word = mover_word ? *mover_word : reduced_word(d);
    if (Permutation::from_word(word, space.r()) != d || static_cast<int>(word.size()) != length(d))
        throw std::invalid_argument("psi_conjugated: supplied word is not a reduced word of the mover");
    const Op mover = psi_word(word, space);
    Op mover_inv = Op::identity(space.dim(), 1);
    for (int i : word) mover_inv = mover_inv.compose(psi_generator_inverse(i, space));
    return mover * psi_leading(sigma, l, space) * mover_inv * subspace_projector(space, positions);
}

SparseOperator<RationalFunction> xi_generator(const DHGenerator& g, const TensorSpace& space) {
    require_enhanced(space, "xi_generator");
    g.check(space.r());
    if (g.kind == DHGenerator::Kind::T) return psi_generator(g.index, space);
    const Op projector = subspace_projector(space, leading_positions(g.index));
    return projector * psi_word(reduced_word(g.sigma), space);
}

SparseOperator<RationalFunction> evaluate_word(const DHWord& word, const TensorSpace& space) {
    Op op = Op::identity(space.dim(), 1);
    for (const auto& g : word) op = xi_generator(g, space) * op;
    return op;
}

std::vector<DHGenerator> dha_generating_set(int r) {
    std::vector<DHGenerator> out;
    for (int i = 1; i < r; ++i) out.push_back(DHGenerator::T(i));
    for (int l = 0; l <= r; ++l) out.push_back(DHGenerator::X(l));
    return out;
}

std::vector<DHGenerator> dha_all_generators(int r) {
    std::vector<DHGenerator> out;
    for (int i = 1; i < r; ++i) out.push_back(DHGenerator::T(i));
    for (int l = 0; l <= r; ++l)
        for (auto& sigma : all_permutations(l)) out.push_back(DHGenerator::X(l, std::move(sigma)));
    return out;
}

RelationReport verify_dha_relations(const TensorSpace& space) {
    require_enhanced(space, "verify_dha_relations");
    const int r = space.r();
    RelationReport report;
    report.subject = "Xi(doubled Hecke algebra) on enhanced tensor power n=" + std::to_string(space.n()) +
                     " r=" + std::to_string(r);
    for (const char* name : {"(qha1) (T_i + q)(T_i - q^-1) = 0", "(qha2) T_i T_j = T_j T_i, |i-j|>1",
                             "(qha3) T_i T_j T_i = T_j T_i T_j, |i-j|=1", "(qha4) x_sigma x_si", "(qha5) x_si x_sigma",
                             "(qha6) T_i x_sigma, i<l", "(qha7) x_sigma T_i, i<l",
                             "(qha8) T_i x_sigma = q^-1 x_sigma = x_sigma T_i, i>l",
                             "(qha9) x_sigma^(l) x_gamma^(k) = 0, k != l"})
        report.family(name);
    const Op id = Op::identity(space.dim(), 1);
    const RationalFunction c = hecke_c();
    const RationalFunction qinv = RationalFunction::q_pow(-1);

    std::vector<Op> T{Op{}};
    for (int i = 1; i < r; ++i) T.push_back(xi_generator(DHGenerator::T(i), space));
    std::map<std::pair<int, Permutation>, Op> xs;
    auto x = [&](int l, const Permutation& sigma) -> const Op& {
        auto key = std::make_pair(l, sigma);
        auto it = xs.find(key);
        if (it == xs.end()) it = xs.emplace(key, xi_generator(DHGenerator::X(l, sigma), space)).first;
        return it->second;
    };
    auto xname = [](int l, const Permutation& sigma) { return DHGenerator::X(l, sigma).name(); };
    // Operator of the algebra product a·b under the right-action convention.
    auto prod = [](const Op& a, const Op& b) { return b * a; };

    for (int i = 1; i < r; ++i) {
        const std::string ti = "T" + std::to_string(i);
        report.family("(qha1) (T_i + q)(T_i - q^-1) = 0").check(prod(T[i], T[i]) == id + scaled(T[i], c), ti);
        for (int j = i + 1; j < r; ++j) {
            const std::string tij = ti + ",T" + std::to_string(j);
            if (j - i > 1)
                report.family("(qha2) T_i T_j = T_j T_i, |i-j|>1").check(prod(T[i], T[j]) == prod(T[j], T[i]), tij);
            else
                report.family("(qha3) T_i T_j T_i = T_j T_i T_j, |i-j|=1")
                    .check(prod(prod(T[i], T[j]), T[i]) == prod(prod(T[j], T[i]), T[j]), tij);
        }
    }

    std::vector<std::vector<Permutation>> perms;
    for (int l = 0; l <= r; ++l) perms.push_back(all_permutations(l));

    for (int l = 0; l <= r; ++l) {
        for (const auto& sigma : perms[static_cast<std::size_t>(l)]) {
            const Op& xs_op = x(l, sigma);
            const std::string xsn = xname(l, sigma);
            for (int i = 1; i < l; ++i) {
                const Permutation si = Permutation::simple(i, l);
                const Op& xsi = x(l, si);
                const std::string label = xsn + ",i=" + std::to_string(i);

                const Permutation right = sigma.times_simple(i);
                Op expect_right = x(l, right);
                if (!right_ascent(sigma, i)) expect_right.add_scaled(xs_op, c);
                report.family("(qha4) x_sigma x_si").check(prod(xs_op, xsi) == expect_right, label);
                report.family("(qha7) x_sigma T_i, i<l").check(prod(xs_op, T[i]) == expect_right, label);

                const Permutation left = sigma.simple_times(i);
                Op expect_left = x(l, left);
                if (!left_ascent(sigma, i)) expect_left.add_scaled(xs_op, c);
                report.family("(qha5) x_si x_sigma").check(prod(xsi, xs_op) == expect_left, label);
                report.family("(qha6) T_i x_sigma, i<l").check(prod(T[i], xs_op) == expect_left, label);
            }
            for (int i = l + 1; i < r; ++i) {
                const Op expect = scaled(xs_op, qinv);
                report.family("(qha8) T_i x_sigma = q^-1 x_sigma = x_sigma T_i, i>l")
                    .check(prod(T[i], xs_op) == expect && prod(xs_op, T[i]) == expect, xsn + ",i=" + std::to_string(i));
            }
            for (int k = 0; k <= r; ++k) {
                if (k == l) continue;
                for (const auto& gamma : perms[static_cast<std::size_t>(k)])
                    report.family("(qha9) x_sigma^(l) x_gamma^(k) = 0, k != l")
                        .check(prod(xs_op, x(k, gamma)).is_zero(), xsn + "," + xname(k, gamma));
            }
            report.family("x_sigma equals the direct leading-stratum construction")
                .check(xs_op == psi_leading(sigma, l, space), xsn);
        }
        const Op& xl = x(l, Permutation::identity(l));
        report.family("x_id^(l) is idempotent").check(prod(xl, xl) == xl, xname(l, Permutation::identity(l)));
    }

    std::vector<Op> strata;
    for (int k = 0; k <= r; ++k) strata.push_back(stratum_projector(space, k));
    for (int l = 0; l <= r; ++l) {
        const Op& xl = x(l, Permutation::identity(l));
        for (int k = 0; k <= r; ++k) {
            if (k == l) continue;
            const Op& pk = strata[static_cast<std::size_t>(k)];
            report.family("Xi(x^(l)) vanishes on stratum k != l")
                .check((xl * pk).is_zero() && (pk * xl).is_zero(), "l=" + std::to_string(l) + ",k=" + std::to_string(k));
        }
    }
    for (int i = 1; i < r; ++i)
        for (int k = 0; k <= r; ++k) {
            const Op& pk = strata[static_cast<std::size_t>(k)];
            report.family("Xi(T_i) preserves each stratum")
                .check(T[i] * pk == pk * T[i], "T" + std::to_string(i) + ",k=" + std::to_string(k));
        }

    for (const auto& g : levi_generators(space.n())) {
        const Op phi = phi_operator(g, space);
        for (const auto& h : dha_all_generators(r)) {
            const Op xi = h.kind == DHGenerator::Kind::T ? T[static_cast<std::size_t>(h.index)] : x(h.index, h.sigma);
            report.family("Levi Phi(g) commutes with Xi(h)").check(phi * xi == xi * phi, g.name() + "," + h.name());
        }
    }
    return report;
}

}  // namespace dhecke

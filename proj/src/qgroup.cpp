#include "dhecke/qgroup.hpp"

#include "dhecke/hecke.hpp"

#include <stdexcept>

namespace dhecke {

namespace {

using Op = SparseOperator<RationalFunction>;

Op kron(const std::vector<const Op*>& factors, const TensorSpace& space) {
    const auto letters = static_cast<std::size_t>(space.letters());
    Op out(space.dim());
    for (std::size_t id = 0; id < space.dim(); ++id) {
        const MultiIndex f = space.decode(id);
        std::vector<std::pair<std::size_t, RationalFunction>> partial{{0, RationalFunction(1)}};
        std::size_t stride = 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            const auto& col = factors[k]->column(static_cast<std::size_t>(f[k] - 1));
            std::vector<std::pair<std::size_t, RationalFunction>> next;
            for (const auto& [pid, pc] : partial)
                for (const auto& [row, v] : col.entries()) next.emplace_back(pid + row * stride, pc * v);
            partial = std::move(next);
            stride *= letters;
        }
        for (const auto& [target, c] : partial) out.column(id).add_at(target, c);
    }
    return out;
}

int cartan(int i, int j) {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
}

}  // namespace

std::string QGenerator::name() const {
    switch (kind) {
        case Kind::E:
            return "E" + std::to_string(index);
        case Kind::F:
            return "F" + std::to_string(index);
        case Kind::H:
            return "H" + std::to_string(index);
        case Kind::Hinv:
            return "H" + std::to_string(index) + "inv";
        case Kind::K:
            return "K" + std::to_string(index);
        case Kind::Kinv:
            return "K" + std::to_string(index) + "inv";
    }
    return "?";
}

QGenerator QGenerator::parse(const std::string& text) {
    if (text.size() < 2) throw std::invalid_argument("QGenerator::parse: '" + text + "'");
    std::string body = text.substr(1);
    bool inverse = false;
    if (body.size() > 3 && body.compare(body.size() - 3, 3, "inv") == 0) {
        inverse = true;
        body.resize(body.size() - 3);
    }
    std::size_t used = 0;
    int index = 0;
    try {
        index = std::stoi(body, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != body.size()) throw std::invalid_argument("QGenerator::parse: '" + text + "'");
    switch (text[0]) {
        case 'E':
            if (!inverse) return E(index);
            break;
        case 'F':
            if (!inverse) return F(index);
            break;
        case 'H':
            return inverse ? Hinv(index) : H(index);
        case 'K':
            return inverse ? Kinv(index) : K(index);
        default:
            break;
    }
    throw std::invalid_argument("QGenerator::parse: '" + text + "'");
}

void check_generator(const QGenerator& g, int m) {
    const bool diagonal_h = g.kind == QGenerator::Kind::H || g.kind == QGenerator::Kind::Hinv;
    const int hi = diagonal_h ? m : m - 1;
    if (g.index < 1 || g.index > hi) throw std::out_of_range("generator " + g.name() + " outside U_q(gl_" + std::to_string(m) + ")");
}

SparseOperator<RationalFunction> natural_action(const QGenerator& g, int m) {
    check_generator(g, m);
    const auto mm = static_cast<std::size_t>(m);
    const auto i = static_cast<std::size_t>(g.index);  // 1-based
    std::vector<RationalFunction> diag(mm, RationalFunction(1));
    switch (g.kind) {
        case QGenerator::Kind::E: {
            Op op(mm);
            op.column(i).push_back(i - 1, 1);  // v_{i+1} -> v_i
            return op;
        }
        case QGenerator::Kind::F: {
            Op op(mm);
            op.column(i - 1).push_back(i, 1);  // v_i -> v_{i+1}
            return op;
        }
        case QGenerator::Kind::H:
            diag[i - 1] = RationalFunction::q();
            break;
        case QGenerator::Kind::Hinv:
            diag[i - 1] = RationalFunction::q_pow(-1);
            break;
        case QGenerator::Kind::K:
            diag[i - 1] = RationalFunction::q();
            diag[i] = RationalFunction::q_pow(-1);
            break;
        case QGenerator::Kind::Kinv:
            diag[i - 1] = RationalFunction::q_pow(-1);
            diag[i] = RationalFunction::q();
            break;
    }
    return Op::diagonal(diag);
}

SparseOperator<RationalFunction> phi_operator(const QGenerator& g, const TensorSpace& space) {
    const int m = space.letters();
    check_generator(g, m);
    const Op one = Op::identity(static_cast<std::size_t>(m), 1);
    const Op x = natural_action(g, m);
    const auto r = static_cast<std::size_t>(space.r());
    switch (g.kind) {
        case QGenerator::Kind::E: {
            // Σ_j 1^{⊗ j-1} ⊗ E_i ⊗ (K_i^{-1})^{⊗ r-j}
            const Op kinv = natural_action(QGenerator::Kinv(g.index), m);
            Op out(space.dim());
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<const Op*> factors(r, &one);
                factors[j] = &x;
                for (std::size_t k = j + 1; k < r; ++k) factors[k] = &kinv;
                out.add_scaled(kron(factors, space), 1);
            }
            return out;
        }
        case QGenerator::Kind::F: {
            // Σ_j K_i^{⊗ r-j} ⊗ F_i ⊗ 1^{⊗ j-1}
            const Op k = natural_action(QGenerator::K(g.index), m);
            Op out(space.dim());
            for (std::size_t p = 0; p < r; ++p) {
                std::vector<const Op*> factors(r, &one);
                for (std::size_t s = 0; s < p; ++s) factors[s] = &k;
                factors[p] = &x;
                out.add_scaled(kron(factors, space), 1);
            }
            return out;
        }
        default:
            // Grouplike: g ↦ g ⊗ ⋯ ⊗ g.
            return kron(std::vector<const Op*>(r, &x), space);
    }
}

SparseOperator<RationalFunction> phi_word(const GeneratorWord& word, const TensorSpace& space) {
    Op op = Op::identity(space.dim(), 1);
    for (const auto& g : word) op = op.compose(phi_operator(g, space));
    return op;
}

std::vector<QGenerator> full_generators(int m) {
    std::vector<QGenerator> out;
    for (int i = 1; i < m; ++i) out.push_back(QGenerator::E(i));
    for (int i = 1; i < m; ++i) out.push_back(QGenerator::F(i));
    for (int a = 1; a <= m; ++a) out.push_back(QGenerator::H(a));
    for (int a = 1; a <= m; ++a) out.push_back(QGenerator::Hinv(a));
    return out;
}

std::vector<QGenerator> levi_generators(int n) {
    if (n < 1) throw std::invalid_argument("levi_generators: n must be positive");
    std::vector<QGenerator> out;
    for (int i = 1; i < n; ++i) out.push_back(QGenerator::E(i));
    for (int i = 1; i < n; ++i) out.push_back(QGenerator::F(i));
    for (int a = 1; a <= n + 1; ++a) out.push_back(QGenerator::H(a));
    for (int a = 1; a <= n + 1; ++a) out.push_back(QGenerator::Hinv(a));
    return out;
}

RelationReport verify_qgroup_relations(const TensorSpace& space) {
    const int m = space.letters();
    RelationReport report;
    report.subject = "U_q(gl_" + std::to_string(m) + ") on tensor power r=" + std::to_string(space.r());
    const Op id = Op::identity(space.dim(), 1);
    const RationalFunction q = RationalFunction::q();
    const RationalFunction qinv = RationalFunction::q_pow(-1);

    std::vector<Op> E, F, K, Kinv, H, Hinv;
    for (int i = 1; i < m; ++i) {
        E.push_back(phi_operator(QGenerator::E(i), space));
        F.push_back(phi_operator(QGenerator::F(i), space));
        K.push_back(phi_operator(QGenerator::K(i), space));
        Kinv.push_back(phi_operator(QGenerator::Kinv(i), space));
    }
    for (int a = 1; a <= m; ++a) {
        H.push_back(phi_operator(QGenerator::H(a), space));
        Hinv.push_back(phi_operator(QGenerator::Hinv(a), space));
    }
    auto at = [](const std::vector<Op>& v, int one_based) -> const Op& { return v[static_cast<std::size_t>(one_based - 1)]; };
    auto tag = [](const std::string& s, int i, int j = 0) {
        return s + "(" + std::to_string(i) + (j ? "," + std::to_string(j) : "") + ")";
    };

    for (int a = 1; a <= m; ++a) {
        auto& fam = report.family("H_a H_a^-1 = 1 = H_a^-1 H_a");
        fam.check(at(H, a) * at(Hinv, a) == id && at(Hinv, a) * at(H, a) == id, tag("H", a));
        for (int b = a + 1; b <= m; ++b)
            report.family("H_a H_b = H_b H_a").check(at(H, a) * at(H, b) == at(H, b) * at(H, a), tag("H", a, b));
    }
    for (int i = 1; i < m; ++i) {
        report.family("K_i = H_i H_{i+1}^-1").check(at(K, i) == at(H, i) * at(Hinv, i + 1), tag("K", i));
        report.family("K_i K_i^-1 = 1 = K_i^-1 K_i")
            .check(at(K, i) * at(Kinv, i) == id && at(Kinv, i) * at(K, i) == id, tag("K", i));
        for (int j = 1; j < m; ++j) {
            if (j > i) report.family("K_i K_j = K_j K_i").check(at(K, i) * at(K, j) == at(K, j) * at(K, i), tag("K", i, j));
            const RationalFunction qc = RationalFunction::q_pow(cartan(i, j));
            const RationalFunction qmc = RationalFunction::q_pow(-cartan(i, j));
            report.family("K_i E_j K_i^-1 = q^c_ij E_j")
                .check(at(K, i) * at(E, j) * at(Kinv, i) == scaled(at(E, j), qc), tag("KEK", i, j));
            report.family("K_i F_j K_i^-1 = q^-c_ij F_j")
                .check(at(K, i) * at(F, j) * at(Kinv, i) == scaled(at(F, j), qmc), tag("KFK", i, j));

            Op rhs(space.dim());
            if (i == j) rhs = scaled(at(K, i) - at(Kinv, i), (q - qinv).inverse());
            report.family("E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(q - q^-1)")
                .check(at(E, i) * at(F, j) - at(F, j) * at(E, i) == rhs, tag("EF", i, j));

            if (j <= i) continue;
            if (cartan(i, j) == 0) {
                report.family("E_i E_j = E_j E_i (c_ij = 0)").check(at(E, i) * at(E, j) == at(E, j) * at(E, i), tag("EE", i, j));
                report.family("F_i F_j = F_j F_i (c_ij = 0)").check(at(F, i) * at(F, j) == at(F, j) * at(F, i), tag("FF", i, j));
            } else {
                const RationalFunction qq = q + qinv;
                for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
                    const Op& ex = at(E, x);
                    const Op& ey = at(E, y);
                    Op serre_e = ex * ex * ey - scaled(ex * ey * ex, qq) + ey * ex * ex;
                    report.family("Serre E (c_ij = -1)").check(serre_e.is_zero(), tag("E", x, y));
                    const Op& fx = at(F, x);
                    const Op& fy = at(F, y);
                    Op serre_f = fx * fx * fy - scaled(fx * fy * fx, qq) + fy * fx * fx;
                    report.family("Serre F (c_ij = -1)").check(serre_f.is_zero(), tag("F", x, y));
                }
            }
        }
    }
    for (int a = 1; a <= m; ++a) {
        for (int i = 1; i < m; ++i) {
            const int e = (a == i ? 1 : 0) - (a == i + 1 ? 1 : 0);
            report.family("H_a E_i H_a^-1 = q^(d_ai - d_a,i+1) E_i")
                .check(at(H, a) * at(E, i) * at(Hinv, a) == scaled(at(E, i), RationalFunction::q_pow(e)), tag("HEH", a, i));
            report.family("H_a F_i H_a^-1 = q^(d_a,i+1 - d_ai) F_i")
                .check(at(H, a) * at(F, i) * at(Hinv, a) == scaled(at(F, i), RationalFunction::q_pow(-e)), tag("HFH", a, i));
        }
    }
    return report;
}

RelationReport verify_commuting_actions(const TensorSpace& space) {
    RelationReport report;
    report.subject = "Phi(U_q(gl_" + std::to_string(space.letters()) + ")) commutes with Psi(H(S_" + std::to_string(space.r()) + "))";
    std::vector<Op> psis;
    for (int i = 1; i < space.r(); ++i) psis.push_back(psi_generator(i, space));
    for (const auto& g : full_generators(space.letters())) {
        const Op phi = phi_operator(g, space);
        for (std::size_t i = 0; i < psis.size(); ++i)
            report.family("Phi(g) Psi(T_i) = Psi(T_i) Phi(g)")
                .check(phi * psis[i] == psis[i] * phi, g.name() + ",T" + std::to_string(i + 1));
    }
    return report;
}

}  // namespace dhecke

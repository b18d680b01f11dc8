#include "dhecke/dha.hpp"
#include "dhecke/duality.hpp"
#include "dhecke/hecke.hpp"
#include "dhecke/qgroup.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <random>

using namespace dhecke;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRetry = 3;
constexpr int kRetries = 3;

struct Options {
    int n = 2;
    int r = 2;
    std::optional<std::string> scalar;
    std::uint64_t seed = 20240601;
    int threads = default_threads();
    bool json = false;
    bool classical = false;
    std::string word;
    std::string on;
};

FieldConfig scalar_config(const Options& opt, std::mt19937_64& rng, std::size_t dim) {
    if (!opt.scalar) return default_config(dim, rng);
    return parse_scalar(*opt.scalar, rng);
}

std::uint64_t ambient(int n, int r, bool enhanced) {
    std::uint64_t d = 1;
    for (int k = 0; k < r; ++k) {
        d *= static_cast<std::uint64_t>(n + (enhanced ? 1 : 0));
        if (d > (std::uint64_t{1} << 32)) break;
    }
    return d;
}

void check_nr(const Options& opt) {
    if (opt.n < 1) throw ConfigError("--n must be at least 1");
    if (opt.r < 1) throw ConfigError("--r must be at least 1");
}

int cmd_relations(const Options& opt) {
    check_nr(opt);
    std::mt19937_64 rng(opt.seed);
    const FieldConfig cfg = opt.scalar ? parse_scalar(*opt.scalar, rng) : FieldConfig::exact();
    if (cfg.mode != FieldConfig::Mode::Exact) throw ConfigError("relations are certified in exact mode only (--scalar exact)");
    check_exact_cap(ambient(opt.n, opt.r, true), cfg);

    const TensorSpace classical = TensorSpace::classical(opt.n, opt.r);
    const TensorSpace enhanced = TensorSpace::enhanced(opt.n, opt.r);
    std::vector<RelationReport> reports{verify_qgroup_relations(classical), verify_hecke_relations(classical),
                                        verify_commuting_actions(classical), verify_qgroup_relations(enhanced),
                                        verify_hecke_relations(enhanced), verify_commuting_actions(enhanced),
                                        verify_dha_relations(enhanced)};
    bool ok = true;
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rep : reports) {
        ok = ok && rep.all_passed();
        if (opt.json)
            out.push_back(rep.to_json());
        else
            std::cout << rep.to_text();
    }
    if (opt.json) std::cout << nlohmann::json{{"n", opt.n}, {"r", opt.r}, {"passed", ok}, {"reports", out}}.dump(2) << '\n';
    if (!ok) {
        for (const auto& rep : reports) {
            try {
                rep.ensure_passed();
            } catch (const RelationFailure& e) {
                std::cerr << "error: " << e.what() << '\n';
                break;
            }
        }
        return kExitFailure;
    }
    if (!opt.json) std::cout << "all relations hold\n";
    return kExitPass;
}

int cmd_duality(const Options& opt) {
    check_nr(opt);
    std::mt19937_64 rng(opt.seed);
    const std::uint64_t dim = ambient(opt.n, opt.r, !opt.classical);
    FieldConfig cfg = scalar_config(opt, rng, dim);
    check_exact_cap(dim, cfg);
    const DualityReport report = with_specialization_retry(cfg, rng, kRetries, [&](const FieldConfig& c) {
        return opt.classical ? verify_q_schur(opt.n, opt.r, c, opt.threads) : verify_main_theorem(opt.n, opt.r, c, opt.threads);
    });
    if (opt.json)
        std::cout << report.to_json().dump(2) << '\n';
    else
        std::cout << report.to_text();
    return report.double_centralizer ? kExitPass : kExitFailure;
}

int cmd_dims(const Options& opt) {
    if (opt.n < 1) throw ConfigError("--n must be at least 1");
    if (opt.r < 0) throw ConfigError("--r must be non-negative");
    const DecompositionAudit audit = decomposition_audit(opt.n, opt.r);
    if (opt.json)
        std::cout << audit.to_json().dump(2) << '\n';
    else
        std::cout << audit.to_text();
    return audit.consistent() ? kExitPass : kExitFailure;
}

int cmd_act(const Options& opt, bool r_given) {
    if (opt.n < 1) throw ConfigError("--n must be at least 1");
    MultiIndex j;
    DHWord word;
    try {
        j = parse_multi_index(opt.on);
        word = parse_word(opt.word);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const int r = static_cast<int>(j.size());
    if (r_given && r != opt.r) throw ConfigError("--on has " + std::to_string(r) + " entries but --r is " + std::to_string(opt.r));
    const TensorSpace space = TensorSpace::enhanced(opt.n, r);
    if (!space.valid(j)) throw ConfigError("basis index " + to_string(j) + " has entries outside 1.." + std::to_string(space.eta()));
    for (const auto& g : word) {
        try {
            g.check(r);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    std::mt19937_64 rng(opt.seed);
    const FieldConfig cfg = opt.scalar ? parse_scalar(*opt.scalar, rng) : FieldConfig::exact();
    check_exact_cap(space.dim(), cfg);
    const auto op = evaluate_word(word, space);
    const SparseVector<RationalFunction> v = op.apply(SparseVector<RationalFunction>::unit(space.dim(), space.encode(j), 1));
    const std::string text = with_specialization_retry(cfg, rng, kRetries, [&](const FieldConfig& c) {
        return with_field(c, [&](const auto& field) {
            using F = typename std::decay_t<decltype(field)>::value_type;
            SparseVector<F> w(space.dim());
            for (const auto& [id, coeff] : v.entries()) {
                F x = field.lift(coeff);
                if (!is_zero(x)) w.push_back(id, x);
            }
            return format_vector(w, space, field.one());
        });
    });
    if (opt.json)
        std::cout << nlohmann::json{{"n", opt.n}, {"r", r}, {"scalar", cfg.name()}, {"word", opt.word}, {"on", j}, {"result", text}}.dump(2)
                  << '\n';
    else
        std::cout << text << '\n';
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double centralizer certification for Levi quantum groups and doubled Hecke algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "rank n of V (letters 1..n, eta is n+1)");
        sub->add_option("--r", opt.r, "tensor power r");
        sub->add_option("--seed", opt.seed, "seed for random specializations");
        sub->add_option("--threads", opt.threads, "worker threads (default: DHECKE_THREADS or 1)");
        sub->add_flag("--json", opt.json, "JSON output");
    };
    auto add_scalar = [&](CLI::App* sub) {
        sub->add_option("--scalar", opt.scalar, "exact | qnum:<rational> | fp[:<prime>]");
    };

    auto* relations = app.add_subcommand("relations", "verify every defining relation as exact operator identities");
    add_common(relations);
    add_scalar(relations);
    auto* duality = app.add_subcommand("duality", "certify the double centralizer property");
    add_common(duality);
    add_scalar(duality);
    duality->add_flag("--classical", opt.classical, "q-Schur duality on V^{(x)r} instead");
    auto* dims = app.add_subcommand("dims", "decomposition table from tableau counts only");
    add_common(dims);
    auto* act = app.add_subcommand("act", "apply a doubled Hecke word to a basis vector of the enhanced space");
    add_common(act);
    add_scalar(act);
    act->add_option("--word", opt.word, "e.g. \"T1 x2:[2,1] x0\"; empty for the identity");
    act->add_option("--on", opt.on, "basis index, e.g. [2,1]; eta is n+1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (relations->parsed()) return cmd_relations(opt);
        if (duality->parsed()) return cmd_duality(opt);
        if (dims->parsed()) return cmd_dims(opt);
        if (act->parsed()) return cmd_act(opt, act->count("--r") > 0);
    } catch (const RetryExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRetry;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitConfig;
}

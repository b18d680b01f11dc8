#include "dhecke/duality.hpp"

#include "dhecke/dha.hpp"
#include "dhecke/hecke.hpp"
#include "dhecke/linalg.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace dhecke {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t power(std::uint64_t base, int e) {
    std::uint64_t x = 1;
    for (int k = 0; k < e; ++k) x *= base;
    return x;
}

std::string partition_text(const Partition& lambda) {
    const Partition t = trimmed(lambda);
    if (t.empty()) return "()";
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
    return s + ")";
}

template <class F>
std::string describe(const SparseOperator<F>& a) {
    std::ostringstream os;
    os << "operator with " << a.nnz() << " nonzero entries";
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (!a.column(j).entries().empty()) {
            const auto& [i, v] = a.column(j).entries().front();
            os << ", first entry (" << i << "," << j << ") = " << to_string(v);
            break;
        }
    return os.str();
}

// Fills the span/commutant fields of the report from the two generator sets.
template <class Field>
void compare_algebras(const std::vector<SparseOperator<RationalFunction>>& group_gens,
                      const std::vector<SparseOperator<RationalFunction>>& hecke_gens, std::size_t dim,
                      const Field& field, int threads, DualityReport& report) {
    using F = typename Field::value_type;
    const F one = field.one();
    auto t0 = Clock::now();
    const auto group_lifted = lift_all(group_gens, field);
    const auto hecke_lifted = lift_all(hecke_gens, field);
    report.timings_ms["specialize"] = ms_since(t0);

    t0 = Clock::now();
    const SpanBasis<F> group = algebra_closure(group_lifted, dim, one);
    report.timings_ms["closure_group"] = ms_since(t0);
    t0 = Clock::now();
    const SpanBasis<F> hecke = algebra_closure(hecke_lifted, dim, one);
    report.timings_ms["closure_hecke"] = ms_since(t0);

    t0 = Clock::now();
    const SpanBasis<F> comm_group = commutant(group_lifted, dim, one, threads);
    report.timings_ms["commutant_group"] = ms_since(t0);
    t0 = Clock::now();
    const SpanBasis<F> comm_hecke = commutant(hecke_lifted, dim, one, threads);
    report.timings_ms["commutant_hecke"] = ms_since(t0);

    report.dim_group_span = group.dimension();
    report.dim_hecke_span = hecke.dimension();
    report.dim_commutant_group = comm_group.dimension();
    report.dim_commutant_hecke = comm_hecke.dimension();

    t0 = Clock::now();
    auto check = [&](const SpanBasis<F>& a, const SpanBasis<F>& b, const std::string& a_name, const std::string& b_name) {
        if (const long k = first_outside(a, b); k >= 0) {
            if (report.witness.empty())
                report.witness = a_name + " basis element " + std::to_string(k) + " is not in " + b_name + ": " +
                                 describe(SparseOperator<F>::from_vector(a.rows()[static_cast<std::size_t>(k)], dim));
            return false;
        }
        return true;
    };
    const bool g_in = check(group, comm_hecke, "span(group)", "commutant(hecke)");
    const bool g_out = check(comm_hecke, group, "commutant(hecke)", "span(group)");
    const bool h_in = check(hecke, comm_group, "span(hecke)", "commutant(group)");
    const bool h_out = check(comm_group, hecke, "commutant(group)", "span(hecke)");
    report.group_is_commutant_of_hecke = g_in && g_out;
    report.hecke_is_commutant_of_group = h_in && h_out;
    report.timings_ms["compare"] = ms_since(t0);
}

void finish(DualityReport& report) {
    report.dims_match_prediction = report.dim_group_span == report.predicted_group &&
                                   report.dim_hecke_span == report.predicted_hecke;
    if (!report.dims_match_prediction && report.witness.empty())
        report.witness = "computed span dimensions (" + std::to_string(report.dim_group_span) + ", " +
                         std::to_string(report.dim_hecke_span) + ") differ from predicted (" +
                         std::to_string(report.predicted_group) + ", " + std::to_string(report.predicted_hecke) + ")";
    report.double_centralizer =
        report.group_is_commutant_of_hecke && report.hecke_is_commutant_of_group && report.dims_match_prediction;
}

void check_ranks(int n, int r) {
    if (n < 1) throw ConfigError("n must be at least 1");
    if (r < 1) throw ConfigError("r must be at least 1");
}

}  // namespace

void check_exact_cap(std::size_t dim, const FieldConfig& cfg) {
    if (cfg.mode == FieldConfig::Mode::Exact && dim > kExactDimCap)
        throw ConfigError("exact mode is limited to ambient dimension " + std::to_string(kExactDimCap) + " (got " +
                          std::to_string(dim) + "); use --scalar qnum:<rational> or --scalar fp");
}

FieldConfig rerandomized(const FieldConfig& cfg, std::mt19937_64& rng) {
    switch (cfg.mode) {
        case FieldConfig::Mode::Prime:
            return FieldConfig::random_prime_field(rng, cfg.prime);
        case FieldConfig::Mode::Rational:
            return FieldConfig::random_rational(rng);
        case FieldConfig::Mode::Exact:
            break;
    }
    return cfg;
}

FieldConfig default_config(std::size_t dim, std::mt19937_64& rng) {
    if (dim <= 9) return FieldConfig::exact();
    if (dim <= 27) return FieldConfig::random_rational(rng);
    return FieldConfig::random_prime_field(rng);
}

std::uint64_t predicted_levi_dim(int n, int r) {
    std::uint64_t total = 0;
    for (int l = 0; l <= r; ++l)
        for (const auto& lambda : enumerate_partitions(n, l)) {
            const std::uint64_t s = ssyt_count(lambda, n);
            total += s * s;
        }
    return total;
}

std::uint64_t predicted_dha_dim(int n, int r) {
    std::uint64_t total = 0;
    for (int l = 0; l <= r; ++l)
        for (const auto& lambda : enumerate_partitions(n, l)) {
            const std::uint64_t m = binomial(r, l) * syt_count(lambda);
            total += m * m;
        }
    return total;
}

std::uint64_t predicted_q_schur_dim(int n, int r) {
    std::uint64_t total = 0;
    for (const auto& lambda : enumerate_partitions(n, r)) {
        const std::uint64_t s = ssyt_count(lambda, n);
        total += s * s;
    }
    return total;
}

std::uint64_t predicted_hecke_image_dim(int n, int r) {
    std::uint64_t total = 0;
    for (const auto& lambda : enumerate_partitions(n, r)) {
        const std::uint64_t s = syt_count(lambda);
        total += s * s;
    }
    return total;
}

DualityReport verify_q_schur(int n, int r, const FieldConfig& cfg, int threads) {
    check_ranks(n, r);
    if (n > 3 || r > 4) throw ConfigError("q-Schur verification supports n <= 3 and r <= 4");
    const auto t0 = Clock::now();
    const TensorSpace space = TensorSpace::classical(n, r);
    check_exact_cap(space.dim(), cfg);
    DualityReport report;
    report.theorem = "q-schur";
    report.n = n;
    report.r = r;
    report.scalar = cfg.name();
    report.dim_ambient = space.dim();
    report.predicted_group = predicted_q_schur_dim(n, r);
    report.predicted_hecke = predicted_hecke_image_dim(n, r);

    auto t1 = Clock::now();
    std::vector<SparseOperator<RationalFunction>> group_gens, hecke_gens;
    for (const auto& g : full_generators(n)) group_gens.push_back(phi_operator(g, space));
    for (int i = 1; i < r; ++i) hecke_gens.push_back(psi_generator(i, space));
    report.timings_ms["generators"] = ms_since(t1);

    with_field(cfg, [&](const auto& field) { compare_algebras(group_gens, hecke_gens, space.dim(), field, threads, report); });
    finish(report);
    report.timings_ms["total"] = ms_since(t0);
    return report;
}

DualityReport verify_main_theorem(int n, int r, const FieldConfig& cfg, int threads) {
    check_ranks(n, r);
    const auto t0 = Clock::now();
    const TensorSpace space = TensorSpace::enhanced(n, r);
    check_exact_cap(space.dim(), cfg);
    DualityReport report;
    report.theorem = "main";
    report.n = n;
    report.r = r;
    report.scalar = cfg.name();
    report.dim_ambient = space.dim();
    report.predicted_group = predicted_levi_dim(n, r);
    report.predicted_hecke = predicted_dha_dim(n, r);

    auto t1 = Clock::now();
    std::vector<SparseOperator<RationalFunction>> group_gens, hecke_gens;
    for (const auto& g : levi_generators(n)) group_gens.push_back(phi_operator(g, space));
    for (const auto& g : dha_generating_set(r)) hecke_gens.push_back(xi_generator(g, space));
    report.timings_ms["generators"] = ms_since(t1);

    with_field(cfg, [&](const auto& field) { compare_algebras(group_gens, hecke_gens, space.dim(), field, threads, report); });
    finish(report);
    report.timings_ms["total"] = ms_since(t0);
    return report;
}

nlohmann::json DualityReport::to_json(bool with_timings) const {
    const bool classical = theorem == "q-schur";
    const std::string g = classical ? "u" : "levi";
    const std::string h = classical ? "hecke" : "dha";
    nlohmann::json j;
    j["theorem"] = theorem;
    j["n"] = n;
    j["r"] = r;
    j["scalar"] = scalar;
    j["dim_ambient"] = dim_ambient;
    j["dim_" + g + "_span"] = dim_group_span;
    j["dim_" + h + "_span"] = dim_hecke_span;
    j["dim_commutant_" + g] = dim_commutant_group;
    j["dim_commutant_" + h] = dim_commutant_hecke;
    j["predicted_" + g] = predicted_group;
    j["predicted_" + h] = predicted_hecke;
    j[g + "_span_is_commutant_of_" + h] = group_is_commutant_of_hecke;
    j[h + "_span_is_commutant_of_" + g] = hecke_is_commutant_of_group;
    j["dims_match_prediction"] = dims_match_prediction;
    j["double_centralizer"] = double_centralizer;
    if (!witness.empty()) j["witness"] = witness;
    if (with_timings) j["timings_ms"] = timings_ms;
    return j;
}

std::string DualityReport::to_text() const {
    const bool classical = theorem == "q-schur";
    const std::string g = classical ? "Phi(U_q(gl_n))" : "Phi(L_q(gl_{n+1}))";
    const std::string h = classical ? "Psi(H_q(S_r))" : "D(n,r)";
    std::ostringstream os;
    os << (classical ? "q-Schur duality" : "Levi / doubled Hecke double centralizer") << "  n=" << n << " r=" << r
       << "  scalar=" << scalar << "  ambient=" << dim_ambient << '\n';
    os << "  dim span " << g << " = " << dim_group_span << " (predicted " << predicted_group << ")\n";
    os << "  dim span " << h << " = " << dim_hecke_span << " (predicted " << predicted_hecke << ")\n";
    os << "  dim commutant of " << g << " = " << dim_commutant_group << '\n';
    os << "  dim commutant of " << h << " = " << dim_commutant_hecke << '\n';
    os << "  " << (group_is_commutant_of_hecke ? "PASS" : "FAIL") << "  span " << g << " = End_" << h << '\n';
    os << "  " << (hecke_is_commutant_of_group ? "PASS" : "FAIL") << "  span " << h << " = End_" << g << '\n';
    os << "  " << (dims_match_prediction ? "PASS" : "FAIL") << "  dimensions match the tableau counts\n";
    if (!witness.empty()) os << "  witness: " << witness << '\n';
    os << "  verdict: " << (double_centralizer ? "double centralizer" : "FAILED") << '\n';
    auto total = timings_ms.find("total");
    if (total != timings_ms.end()) os << "  time: " << static_cast<long>(total->second) << " ms\n";
    return os.str();
}

DecompositionAudit decomposition_audit(int n, int r) {
    if (n < 1 || r < 0) throw ConfigError("decomposition_audit needs n >= 1 and r >= 0");
    DecompositionAudit audit;
    audit.n = n;
    audit.r = r;
    audit.ambient = power(static_cast<std::uint64_t>(n) + 1, r);
    for (int l = 0; l <= r; ++l)
        for (const auto& lambda : enumerate_partitions(n, l)) {
            AuditRow row{l, trimmed(lambda), binomial(r, l) * syt_count(lambda), ssyt_count(lambda, n)};
            audit.sum_mult_dim += row.mult * row.dim;
            audit.sum_mult_sq += row.mult * row.mult;
            audit.sum_dim_sq += row.dim * row.dim;
            audit.rows.push_back(std::move(row));
        }
    return audit;
}

nlohmann::json DecompositionAudit::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows)
        j["rows"].push_back({{"l", row.l}, {"lambda", row.lambda}, {"mult", row.mult}, {"dim", row.dim}});
    j["ambient"] = ambient;
    j["sum_mult_dim"] = sum_mult_dim;
    j["predicted_dha"] = sum_mult_sq;
    j["predicted_levi"] = sum_dim_sq;
    j["consistent"] = consistent();
    return j;
}

std::string DecompositionAudit::to_text() const {
    std::ostringstream os;
    os << "decomposition  n=" << n << " r=" << r << '\n';
    os << "   l  lambda        mult    dim\n";
    for (const auto& row : rows)
        os << std::setw(4) << row.l << "  " << std::left << std::setw(12) << partition_text(row.lambda) << std::right
           << std::setw(6) << row.mult << std::setw(7) << row.dim << '\n';
    os << "  sum mult*dim = " << sum_mult_dim << " (ambient " << ambient << ")\n";
    os << "  sum mult^2   = " << sum_mult_sq << "  (dim D(n,r))\n";
    os << "  sum dim^2    = " << sum_dim_sq << "  (dim Levi span)\n";
    return os.str();
}

}  // namespace dhecke

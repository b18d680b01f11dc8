#pragma once

#include "dhecke/combinat.hpp"
#include "dhecke/field.hpp"
#include "dhecke/parallel.hpp"
#include "dhecke/qgroup.hpp"
#include "dhecke/tensorspace.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhecke {

/// Largest ambient dimension accepted in exact Q(q) mode.
inline constexpr std::size_t kExactDimCap = 144;

/// Raised for a configuration that is refused up front (cap, ranges).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when every specialization attempt hit a pole.
class RetryExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ConfigError when cfg is exact and dim exceeds kExactDimCap.
void check_exact_cap(std::size_t dim, const FieldConfig& cfg);

/// Same mode with a fresh random q0 (exact mode is returned unchanged).
FieldConfig rerandomized(const FieldConfig& cfg, std::mt19937_64& rng);

/// Default scalar mode for an instance: exact up to ambient 9, a random
/// rational q0 up to 27, a random prime field beyond.
FieldConfig default_config(std::size_t dim, std::mt19937_64& rng);

/// Runs fn(cfg); on PoleError re-randomizes q0 and tries again, at most
/// `retries` more times.
template <class Fn>
auto with_specialization_retry(FieldConfig cfg, std::mt19937_64& rng, int retries, Fn&& fn) {
    for (int attempt = 0;; ++attempt) {
        try {
            return fn(cfg);
        } catch (const PoleError& e) {
            if (cfg.mode == FieldConfig::Mode::Exact || attempt >= retries)
                throw RetryExhausted(std::string("specialization retries exhausted: ") + e.what());
            cfg = rerandomized(cfg, rng);
        }
    }
}

/// Witness of a double-centralizer check. The "group" side is the span of
/// Φ(U_q(gl_n)) or Φ(L_q(gl_{n+1})); the "hecke" side is Ψ(H_q(S_r)) or D(n,r).
struct DualityReport {
    std::string theorem;  // "main" or "q-schur"
    int n = 0;
    int r = 0;
    std::string scalar;
    std::size_t dim_ambient = 0;
    std::size_t dim_group_span = 0;
    std::size_t dim_hecke_span = 0;
    std::size_t dim_commutant_group = 0;
    std::size_t dim_commutant_hecke = 0;
    std::uint64_t predicted_group = 0;
    std::uint64_t predicted_hecke = 0;
    bool group_is_commutant_of_hecke = false;
    bool hecke_is_commutant_of_group = false;
    bool dims_match_prediction = false;
    bool double_centralizer = false;
    std::string witness;  // first offending operator when a check fails
    std::map<std::string, double> timings_ms;

    nlohmann::json to_json(bool with_timings = true) const;
    std::string to_text() const;
};

std::uint64_t predicted_levi_dim(int n, int r);
std::uint64_t predicted_dha_dim(int n, int r);
/// Σ_{λ ∈ P(n,r)} ssyt(λ, n)² and Σ_{λ ∈ P(n,r)} syt(λ)².
std::uint64_t predicted_q_schur_dim(int n, int r);
std::uint64_t predicted_hecke_image_dim(int n, int r);

/// Commutant of Ψ(H_q(S_r)) against the span of Φ(U_q(gl_n)) on V^{⊗r}, both ways.
DualityReport verify_q_schur(int n, int r, const FieldConfig& cfg, int threads = default_threads());

/// Commutant of D(n,r) against the span of Φ(L_q(gl_{n+1})) on the enhanced
/// tensor space, both ways, plus the predicted dimensions.
DualityReport verify_main_theorem(int n, int r, const FieldConfig& cfg, int threads = default_threads());

/// Φ(G_l): Lagrange interpolation in Φ(H_{n+1}), whose eigenvalue on the rank-k
/// stratum is q^{r-k}, at the node q^{r-l}. Computed in the target field; a
/// vanishing node difference throws PoleError.
template <class Field>
SparseOperator<typename Field::value_type> g_projector(int l, const TensorSpace& space, const Field& field) {
    using F = typename Field::value_type;
    if (!space.is_enhanced()) throw std::invalid_argument("g_projector: needs the enhanced tensor space");
    if (l < 0 || l > space.r()) throw std::invalid_argument("g_projector: need 0 <= l <= r");
    const std::size_t d = space.dim();
    const SparseOperator<F> h = lift(phi_operator(QGenerator::H(space.n() + 1), space), field);
    const F one = field.one();
    const F q = field.lift(RationalFunction::q());
    auto q_power = [&](int e) {
        F x = one;
        for (int k = 0; k < e; ++k) x *= q;
        return x;
    };
    const F node = q_power(space.r() - l);
    SparseOperator<F> g = SparseOperator<F>::identity(d, one);
    for (int k = 0; k <= space.r(); ++k) {
        if (k == l) continue;
        const F other = q_power(space.r() - k);
        F gap = node - other;
        if (is_zero(gap)) throw PoleError("g_projector: interpolation nodes coincide at this q0");
        F inv = one / gap;
        SparseOperator<F> factor = h;
        F neg = -other;
        factor.add_scaled(SparseOperator<F>::identity(d, one), neg);
        factor *= inv;
        g = g * factor;
    }
    return g;
}

/// One line of the decomposition table: D_l^λ of dimension mult = C(r,l)·syt(λ)
/// paired with L_q(λ) of dimension dim = ssyt(λ, n).
struct AuditRow {
    int l = 0;
    Partition lambda;
    std::uint64_t mult = 0;
    std::uint64_t dim = 0;
};

struct DecompositionAudit {
    int n = 0;
    int r = 0;
    std::vector<AuditRow> rows;
    std::uint64_t ambient = 0;       // (n+1)^r
    std::uint64_t sum_mult_dim = 0;  // Σ mult·dim
    std::uint64_t sum_mult_sq = 0;   // Σ mult², the D(n,r) dimension
    std::uint64_t sum_dim_sq = 0;    // Σ dim², the Levi span dimension

    bool consistent() const { return sum_mult_dim == ambient; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Pure integer arithmetic; no matrices.
DecompositionAudit decomposition_audit(int n, int r);

}  // namespace dhecke

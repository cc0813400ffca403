#pragma once

#include "twozero/bigint.hpp"
#include "twozero/codes.hpp"
#include "twozero/errors.hpp"
#include "twozero/params.hpp"
#include "twozero/sw.hpp"
#include "twozero/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace twozero::verify {

using codes::Role;
using params::TwoZeroParams;
using weights::DualLowWeight;
using weights::ExecPolicy;
using weights::WeightDistribution;

enum class WolfmannCheck { Inapplicable, Ok, Violated };

inline const char* wolfmann_name(WolfmannCheck w) {
    switch (w) {
        case WolfmannCheck::Inapplicable: return "inapplicable";
        case WolfmannCheck::Ok: return "ok";
        case WolfmannCheck::Violated: return "violated";
    }
    return "?";
}

/// Everything the workbench establishes about one tuple.
struct ScanRecord {
    TwoZeroParams prm;

    int dim_C = 0, dim_Cd = 0, dim_CD = 0;
    bool coset_ok = false;        // both defining cosets have size k
    bool check_degree_ok = false; // deg h = 2k
    bool check_divides = false;   // h | x^n - 1

    std::vector<std::int64_t> weights_C;  // sorted nonzero weights
    std::int64_t num_weights = 0;

    DualLowWeight dual;     // role C
    DualLowWeight cd_dual;  // role Cd

    bool projective = false;       // B1 = B2 = 0
    bool moments_ok = false;       // identities (1)-(3), brute B-values
    bool transform_b2_ok = false;  // transform index 1,2 match brute
    bool scaling_ok = false;
    bool paper_b2_agrees = false;  // closed form vs brute, role C
    bool corrected_ok = false;     // shift-complete form vs brute, both roles

    bool thm_nonprojective_ok = false;   // headline claim 1
    bool thm_not_two_weight_ok = false;  // headline claim 2

    WolfmannCheck wolfmann = WolfmannCheck::Inapplicable;
    std::optional<BigRat> key_eq_residual_brute, key_eq_residual_paper;

    sw::Classification cd_class;
    // set iff the subcode is one-weight: does the weight match mu*q^{k-1}?
    std::optional<bool> one_weight_ok_cd, one_weight_ok_CD;

    std::uint64_t cost = 0;
};

/// LHS - RHS of the two-weight key equation with B2 as an input:
/// nq(w1+w2) - (q^{2k}-1) w1 w2 / ((q-1) q^{2k-2})
///   - [n^2(q-1) + n + 2 B2/(q-1)].
inline BigRat two_weight_residual(std::int64_t n, std::int64_t q,
                                  std::int64_t k, std::int64_t w1,
                                  std::int64_t w2, const BigInt& b2) {
    const BigInt q2k = big_pow(q, static_cast<std::uint64_t>(2 * k));
    const BigInt q2k2 = big_pow(q, static_cast<std::uint64_t>(2 * k - 2));
    const BigRat lhs = BigRat(BigInt(n) * q * (w1 + w2)) -
                       BigRat((q2k - 1) * w1 * w2, (q - 1) * q2k2);
    const BigRat rhs = BigRat(BigInt(n) * n * (q - 1) + n) +
                       BigRat(2 * b2, q - 1);
    return lhs - rhs;
}

/// Expected unique weight of a one-weight subcode: mu * q^{k-1}.
inline std::int64_t one_weight_expected(const TwoZeroParams& prm) {
    std::int64_t qk1 = 1;
    for (std::int64_t i = 0; i < prm.k - 1; ++i) qk1 *= prm.q;
    return prm.mu * qk1;
}

inline ScanRecord analyze_tuple(const TwoZeroParams& prm,
                                const ExecPolicy& pol = {}) {
    ScanRecord rec;
    rec.prm = prm;

    const auto tower =
        gf::FieldTower::build(prm.p, prm.t, prm.k, pol.field_cap);
    const auto cp = codes::check_poly(prm, tower);
    rec.coset_ok =
        (static_cast<std::int64_t>(cp.coset_d.size()) == prm.k &&
         static_cast<std::int64_t>(cp.coset_D.size()) == prm.k);
    rec.check_degree_ok = cp.degree_ok;
    rec.check_divides = cp.divides;

    const auto spec_C = codes::make_code_spec(Role::C, prm, tower);
    const auto spec_Cd = codes::make_code_spec(Role::Cd, prm, tower);
    const auto spec_CD = codes::make_code_spec(Role::CD, prm, tower);
    rec.dim_C = codes::generator_rank(spec_C);
    rec.dim_Cd = codes::generator_rank(spec_Cd);
    rec.dim_CD = codes::generator_rank(spec_CD);

    const auto dist_C = weights::weight_distribution(spec_C, pol);
    const auto dist_Cd = weights::weight_distribution(spec_Cd, pol);
    const auto dist_CD = weights::weight_distribution(spec_CD, pol);
    rec.cost = dist_C.cost + dist_Cd.cost + dist_CD.cost;

    rec.weights_C = dist_C.nonzero_weights();
    rec.num_weights = static_cast<std::int64_t>(rec.weights_C.size());

    rec.dual = weights::dual_low_weight(spec_C, prm);
    rec.cd_dual = weights::dual_low_weight(spec_Cd, prm);
    rec.projective = (rec.dual.b1 == 0 && rec.dual.b2_brute == 0);
    rec.paper_b2_agrees =
        (rec.dual.b2_paper >= 0 &&
         static_cast<std::uint64_t>(rec.dual.b2_paper) == rec.dual.b2_brute);
    rec.corrected_ok =
        (rec.dual.b2_corrected == rec.dual.b2_brute &&
         rec.cd_dual.b2_corrected == rec.cd_dual.b2_brute);

    rec.moments_ok = weights::power_moment_check(dist_C, BigInt(rec.dual.b1),
                                                 BigInt(rec.dual.b2_brute))
                         .all_ok();
    const auto low = weights::transform_low_terms(dist_C, 2);
    rec.transform_b2_ok =
        (low[1] == rec.dual.b1 && low[2] == rec.dual.b2_brute);

    const auto chain = weights::scaling_chain_check(prm, tower, pol, &dist_Cd);
    rec.scaling_ok = chain.all_ok();
    rec.cost += chain.cost;

    rec.thm_nonprojective_ok = !rec.projective;
    rec.thm_not_two_weight_ok = (rec.num_weights != 2);

    if (rec.num_weights == 2) {
        rec.key_eq_residual_brute = two_weight_residual(
            prm.n, prm.q, prm.k, rec.weights_C[0], rec.weights_C[1],
            BigInt(rec.dual.b2_brute));
        rec.key_eq_residual_paper = two_weight_residual(
            prm.n, prm.q, prm.k, rec.weights_C[0], rec.weights_C[1],
            BigInt(rec.dual.b2_paper));
    }

    rec.cd_class = sw::classify_irreducible(prm, dist_Cd);

    const std::int64_t expected = one_weight_expected(prm);
    const auto cd_weights = dist_Cd.nonzero_weights();
    if (cd_weights.size() == 1)
        rec.one_weight_ok_cd = (cd_weights[0] == expected);
    const auto CD_weights = dist_CD.nonzero_weights();
    if (CD_weights.size() == 1)
        rec.one_weight_ok_CD = (CD_weights[0] == expected);

    // Structure theorem for projective two-weight reducible cyclic codes:
    // both irreducible subcodes must be one-weight of the same weight.
    const bool reducible = cp.cosets_disjoint;
    if (rec.projective && rec.num_weights == 2 && reducible) {
        const bool ok = cd_weights.size() == 1 && CD_weights.size() == 1 &&
                        cd_weights[0] == CD_weights[0];
        rec.wolfmann = ok ? WolfmannCheck::Ok : WolfmannCheck::Violated;
    } else {
        rec.wolfmann = WolfmannCheck::Inapplicable;
    }
    return rec;
}

/// Any disagreement between a stated closed form and brute-force ground
/// truth, or an internal-consistency failure that should never happen.
inline bool has_discrepancy(const ScanRecord& r) {
    if (!r.paper_b2_agrees) return true;
    if (!r.moments_ok || !r.transform_b2_ok) return true;
    if (!r.scaling_ok || !r.corrected_ok) return true;
    if (r.wolfmann == WolfmannCheck::Violated) return true;
    if (r.cd_dual.paper_applicable &&
        static_cast<std::uint64_t>(r.cd_dual.b2_paper) != r.cd_dual.b2_brute)
        return true;
    if (r.one_weight_ok_cd && !*r.one_weight_ok_cd) return true;
    if (r.one_weight_ok_CD && !*r.one_weight_ok_CD) return true;
    if (r.cd_class.kind == sw::ClassKind::TwoWeight && !r.cd_class.sw_match)
        return true;
    if (r.key_eq_residual_brute && *r.key_eq_residual_brute != 0) return true;
    return false;
}

struct ScanBudgets {
    std::int64_t max_q = 9;
    std::uint64_t max_msgs = 1ull << 24;
    std::int64_t max_n = 768;
    ExecPolicy policy;
};

struct ScanSummary {
    std::uint64_t tuples = 0;
    std::uint64_t theorem_conforming = 0;
    std::uint64_t b2_agreements = 0;
    std::uint64_t discrepancy_count = 0;
    std::uint64_t records_written = 0;
    std::uint64_t sink_errors = 0;
};

/// Runs analyze_tuple over the admissible space in enumeration order,
/// streaming each record to the sink.  A sink failure is counted and the
/// scan continues.
inline ScanSummary scan(const ScanBudgets& budgets,
                        const std::function<void(const ScanRecord&)>& sink) {
    ScanSummary summary;
    const auto tuples = params::enumerate_tuples(
        budgets.max_q, budgets.max_msgs, budgets.max_n);
    for (const auto& prm : tuples) {
        const ScanRecord rec = analyze_tuple(prm, budgets.policy);
        ++summary.tuples;
        if (rec.thm_nonprojective_ok && rec.thm_not_two_weight_ok)
            ++summary.theorem_conforming;
        if (rec.paper_b2_agrees) ++summary.b2_agreements;
        if (has_discrepancy(rec)) ++summary.discrepancy_count;
        try {
            sink(rec);
            ++summary.records_written;
        } catch (const IoError&) {
            ++summary.sink_errors;
        }
    }
    return summary;
}

}  // namespace twozero::verify

#pragma once

#include "twozero/bigint.hpp"
#include "twozero/errors.hpp"
#include "twozero/params.hpp"
#include "twozero/weights.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

namespace twozero::sw {

using params::TwoZeroParams;
using weights::WeightDistribution;

/// Sum of the base-p digits of x.
inline std::int64_t digit_sum(BigInt x, std::int64_t p) {
    if (x < 0) throw ConstraintViolated("digit_sum of negative");
    std::int64_t s = 0;
    while (x > 0) {
        s += static_cast<std::int64_t>(x % p);
        x /= p;
    }
    return s;
}

inline void check_sw_inputs(std::int64_t g, std::int64_t p) {
    if (!gf::is_prime(p)) throw NotPrimeError(p);
    if (g < 2) throw ConstraintViolated("g>1");
    if (std::gcd(g, p) != 1) throw NotCoprimeError(g, p);
}

/// theta(g, p) = min_j S_p(j (p^h - 1)/g) / (p - 1) with h = ord_g(p).
inline BigRat theta(std::int64_t g, std::int64_t p) {
    check_sw_inputs(g, p);
    const std::int64_t h = params::ord_mod(p, g);
    const BigInt unit = (big_pow(p, static_cast<std::uint64_t>(h)) - 1) / g;
    std::int64_t best = -1;
    for (std::int64_t j = 1; j <= g - 1; ++j) {
        const std::int64_t s = digit_sum(unit * j, p);
        if (best < 0 || s < best) best = s;
    }
    return BigRat(best, p - 1);
}

struct SWSolution {
    std::int64_t m = 0;
    int epsilon = 0;  // +1 or -1
    friend bool operator==(const SWSolution&, const SWSolution&) = default;
};

/// All (m, epsilon) satisfying the three conditions at exponent s.
/// When s*theta or s*(h - 2 theta) is not a nonnegative integer the
/// system is unsatisfiable and the result is empty.
inline std::vector<SWSolution> sw_search(std::int64_t g, std::int64_t p,
                                         std::int64_t s) {
    check_sw_inputs(g, p);
    if (s < 1) throw ConstraintViolated("s>=1");
    const std::int64_t h = params::ord_mod(p, g);
    const BigRat th = theta(g, p);
    const BigRat s_theta = BigRat(s) * th;
    const BigRat s_h2t = BigRat(s) * (BigRat(h) - 2 * th);
    if (denominator(s_theta) != 1 || denominator(s_h2t) != 1 || s_h2t < 0)
        return {};
    const std::int64_t st = static_cast<std::int64_t>(numerator(s_theta));
    const std::uint64_t sh2t =
        static_cast<std::uint64_t>(numerator(s_h2t));
    const BigInt rhs = BigInt(g - 1) * big_pow(p, sh2t);
    std::int64_t p_st_mod = 1;
    {
        BigInt pm = big_pow(p, static_cast<std::uint64_t>(st)) % g;
        p_st_mod = static_cast<std::int64_t>(pm);
    }
    std::vector<SWSolution> sols;
    for (std::int64_t m = 1; m <= g - 1; ++m) {
        if ((g - 1) % m != 0) continue;                     // (i)
        if (BigInt(m) * (g - m) != rhs) continue;           // (iii)
        // (ii); for g = 2 the residues of +1 and -1 coincide and both
        // signs are listed.
        const std::int64_t r = (m % g) * p_st_mod % g;
        if (r == 1 % g) sols.push_back({m, +1});
        if (r == (g - 1) % g) sols.push_back({m, -1});
    }
    return sols;
}

struct WeightPair {
    BigRat w1, w2;
    bool degenerate = false;  // one of the weights is zero
};

/// The two candidate weights of eq-style scaling: requires s*theta
/// integral (guard inherited from sw_search).
inline WeightPair candidate_weights(std::int64_t lambda, std::int64_t d,
                                    std::int64_t q, std::int64_t p,
                                    std::int64_t s, std::int64_t h,
                                    const BigRat& th, std::int64_t g,
                                    std::int64_t m, int epsilon) {
    const BigRat s_theta = BigRat(s) * th;
    if (denominator(s_theta) != 1)
        throw NonIntegralThetaError("s*theta is not an integer");
    const std::int64_t st = static_cast<std::int64_t>(numerator(s_theta));
    if (st < 0 || s * h - st < 0)
        throw NonIntegralThetaError("negative exponent");
    const BigInt p_st = big_pow(p, static_cast<std::uint64_t>(st));
    const BigInt p_sht =
        big_pow(p, static_cast<std::uint64_t>(s * h - st));
    const BigInt core1 = p_sht - epsilon * m;
    const BigInt core2 = core1 + epsilon * g;
    const BigRat scale =
        BigRat(BigInt(lambda) * (q - 1) * p_st, BigInt(d) * q);
    WeightPair out;
    out.w1 = scale * BigRat(core1);
    out.w2 = scale * BigRat(core2);
    out.degenerate = (out.w1 == 0 || out.w2 == 0);
    return out;
}

/// Standalone analysis of a (g, p, s) triple; candidate weight pairs are
/// produced only when the (lambda, d, q) scaling context is given.
struct SWAnalysis {
    std::int64_t g = 0, p = 0, s = 0, h = 0;
    BigRat theta_val;
    std::vector<SWSolution> solutions;
    std::vector<WeightPair> candidates;
};

inline SWAnalysis analyze(
    std::int64_t g, std::int64_t p, std::int64_t s,
    std::optional<std::tuple<std::int64_t, std::int64_t, std::int64_t>>
        context = std::nullopt) {
    SWAnalysis a;
    a.g = g;
    a.p = p;
    a.s = s;
    a.h = params::ord_mod(p, g);
    a.theta_val = theta(g, p);
    a.solutions = sw_search(g, p, s);
    if (context) {
        const auto [lambda, d, q] = *context;
        for (const auto& sol : a.solutions)
            a.candidates.push_back(candidate_weights(
                lambda, d, q, p, s, a.h, a.theta_val, g, sol.m, sol.epsilon));
    }
    return a;
}

// ---------------------------------------------------------------------
// Classification of an irreducible family member against the candidates.

enum class ClassKind { OneWeight, TwoWeight, Many };

struct Classification {
    ClassKind kind = ClassKind::Many;
    std::vector<std::int64_t> weights;  // sorted nonzero weights
    bool sw_match = false;              // meaningful for TwoWeight
    std::vector<WeightPair> candidates;
};

/// Classifies wt(Cd) from its brute-force distribution.  For a
/// two-weight outcome the observed set is compared against every
/// candidate pair from the (g, p, s = kt/h) condition system.
inline Classification classify_irreducible(const TwoZeroParams& prm,
                                           const WeightDistribution& cd_dist) {
    Classification c;
    c.weights = cd_dist.nonzero_weights();
    if (c.weights.size() == 1) {
        c.kind = ClassKind::OneWeight;
        return c;
    }
    if (c.weights.size() != 2) {
        c.kind = ClassKind::Many;
        return c;
    }
    c.kind = ClassKind::TwoWeight;
    if (prm.g < 2) return c;  // no condition system; any two-weight outcome
                              // is an unexplained discrepancy
    const std::int64_t h = params::ord_mod(prm.p, prm.g);
    if ((prm.k * prm.t) % h != 0)
        throw InternalError("ord_g(p) does not divide kt");
    const std::int64_t s = prm.k * prm.t / h;
    const BigRat th = theta(prm.g, prm.p);
    for (const auto& sol : sw_search(prm.g, prm.p, s)) {
        const auto pair = candidate_weights(prm.lambda, prm.d, prm.q, prm.p, s,
                                            h, th, prm.g, sol.m, sol.epsilon);
        c.candidates.push_back(pair);
        const BigRat lo(std::min(c.weights[0], c.weights[1]));
        const BigRat hi(std::max(c.weights[0], c.weights[1]));
        const BigRat cand_lo = std::min(pair.w1, pair.w2);
        const BigRat cand_hi = std::max(pair.w1, pair.w2);
        if (lo == cand_lo && hi == cand_hi) c.sw_match = true;
    }
    return c;
}

}  // namespace twozero::sw

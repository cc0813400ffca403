#pragma once

#include "twozero/bigint.hpp"
#include "twozero/codes.hpp"
#include "twozero/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <thread>
#include <vector>

namespace twozero::weights {

using codes::CodeSpec;
using codes::Role;
using gf::Element;
using gf::FieldTower;
using params::TwoZeroParams;

struct ExecPolicy {
    std::uint64_t budget = 1ull << 31;  // coordinate evaluations per distribution
    int threads = 0;                    // 0 = hardware concurrency
    bool force = false;                 // bypass the budget check
    std::uint64_t field_cap = gf::FieldTower::kDefaultCap;
};

/// Exact weight -> word-count map.  dimension is log_alphabet of the
/// word count; kernel_size is the number of messages per word (1 when
/// the trace representation is faithful).
struct WeightDistribution {
    std::int64_t length = 0;
    std::int64_t alphabet = 0;
    std::int64_t dimension = 0;
    std::map<std::int64_t, BigInt> counts;
    std::uint64_t kernel_size = 1;
    std::uint64_t cost = 0;

    std::vector<std::int64_t> nonzero_weights() const {
        std::vector<std::int64_t> w;
        for (const auto& [weight, cnt] : counts)
            if (weight > 0) w.push_back(weight);
        return w;
    }
};

namespace detail {

inline void count_chunk(const CodeSpec& spec, std::uint64_t begin,
                        std::uint64_t end, std::vector<std::uint64_t>& local) {
    const FieldTower& T = *spec.tower;
    const std::int64_t N = T.big_order;
    const std::uint64_t field = static_cast<std::uint64_t>(N) + 1;
    const std::int32_t* e1 = spec.exp1.data();
    const std::int32_t* e2 = spec.msg_rank == 2 ? spec.exp2.data() : nullptr;
    const std::int32_t* zech = T.zech.data();
    const std::uint8_t* trnz =
        spec.to_prime ? T.trace_p_nonzero.data() : T.trace_q_nonzero.data();
    const std::int64_t len = spec.length;

    auto single = [&](std::int64_t ue, const std::int32_t* exps) {
        std::int64_t w = 0;
        for (std::int64_t j = 0; j < len; ++j) {
            std::int64_t xe = ue + exps[j];
            if (xe >= N) xe -= N;
            w += trnz[xe];
        }
        return w;
    };

    if (spec.msg_rank == 1) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx == 0) {
                ++local[0];
                continue;
            }
            ++local[single(static_cast<std::int64_t>(idx) - 1, e1)];
        }
        return;
    }

    for (std::uint64_t idx = begin; idx < end; ++idx) {
        const std::uint64_t uc = idx / field;
        const std::uint64_t vc = idx % field;
        if (uc == 0 && vc == 0) {
            ++local[0];
            continue;
        }
        if (uc == 0) {
            ++local[single(static_cast<std::int64_t>(vc) - 1, e2)];
            continue;
        }
        if (vc == 0) {
            ++local[single(static_cast<std::int64_t>(uc) - 1, e1)];
            continue;
        }
        const std::int64_t ue = static_cast<std::int64_t>(uc) - 1;
        const std::int64_t ve = static_cast<std::int64_t>(vc) - 1;
        std::int64_t w = 0;
        for (std::int64_t j = 0; j < len; ++j) {
            std::int64_t xe = ue + e1[j];
            if (xe >= N) xe -= N;
            std::int64_t ye = ve + e2[j];
            if (ye >= N) ye -= N;
            std::int64_t diff = ye - xe;
            if (diff < 0) diff += N;
            const std::int64_t z = zech[diff];
            if (z != N) {
                std::int64_t s = xe + z;
                if (s >= N) s -= N;
                w += trnz[s];
            }
        }
        ++local[w];
    }
}

}  // namespace detail

/// Exact weight distribution by full message-space enumeration.  The
/// message space is split into contiguous chunks; each worker fills a
/// private histogram and the merge is plain addition, so the result is
/// independent of the worker count.
inline WeightDistribution weight_distribution(const CodeSpec& spec,
                                              const ExecPolicy& pol = {}) {
    const FieldTower& T = *spec.tower;
    const std::uint64_t field = static_cast<std::uint64_t>(T.big_order) + 1;
    std::uint64_t messages = field;
    if (spec.msg_rank == 2) messages *= field;
    const __int128 cost128 =
        static_cast<__int128>(messages) * spec.length;
    if (!pol.force && cost128 > static_cast<__int128>(pol.budget))
        throw BudgetExceededError(
            static_cast<std::uint64_t>(
                cost128 > static_cast<__int128>(UINT64_MAX)
                    ? UINT64_MAX
                    : static_cast<std::uint64_t>(cost128)),
            pol.budget);

    int workers = pol.threads > 0
                      ? pol.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > messages)
        workers = static_cast<int>(messages);

    std::vector<std::vector<std::uint64_t>> hists(
        workers, std::vector<std::uint64_t>(spec.length + 1, 0));
    if (workers == 1) {
        detail::count_chunk(spec, 0, messages, hists[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (messages + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t b = chunk * w;
            const std::uint64_t e = std::min(messages, b + chunk);
            pool.emplace_back([&, w, b, e] {
                detail::count_chunk(spec, b, e, hists[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> total(spec.length + 1, 0);
    for (const auto& h : hists)
        for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];

    // The trace map is linear, so every word has the same number of
    // preimages: the count of messages mapping to the zero word.
    const std::uint64_t kernel = total[0];
    if (kernel == 0) throw InternalError("zero word missing");
    WeightDistribution dist;
    dist.length = spec.length;
    dist.alphabet = spec.alphabet;
    dist.kernel_size = kernel;
    dist.cost = static_cast<std::uint64_t>(cost128);
    std::uint64_t words = 0;
    for (std::size_t w = 0; w < total.size(); ++w) {
        if (total[w] == 0) continue;
        if (total[w] % kernel != 0)
            throw InternalError("message counts not kernel-periodic");
        const std::uint64_t c = total[w] / kernel;
        dist.counts[static_cast<std::int64_t>(w)] = c;
        words += c;
    }
    std::uint64_t acc = 1;
    std::int64_t dim = 0;
    while (acc < words) {
        acc *= static_cast<std::uint64_t>(spec.alphabet);
        ++dim;
    }
    if (acc != words) throw InternalError("word count not a power of alphabet");
    dist.dimension = dim;
    return dist;
}

// ---------------------------------------------------------------------
// MacWilliams power moments (v = 0, 1, 2) and the full identity.

struct MomentReport {
    std::array<bool, 3> ok{false, false, false};
    std::array<BigRat, 3> residual{};
    bool all_ok() const { return ok[0] && ok[1] && ok[2]; }
};

inline BigRat rat_pow(std::int64_t base, std::int64_t e) {
    if (e >= 0) return BigRat(big_pow(base, static_cast<std::uint64_t>(e)));
    return BigRat(1) / BigRat(big_pow(base, static_cast<std::uint64_t>(-e)));
}

/// Identities (1)-(3) relating the distribution to the dual's B_1, B_2.
inline MomentReport power_moment_check(const WeightDistribution& dist,
                                       const BigInt& b1, const BigInt& b2) {
    const std::int64_t n = dist.length;
    const std::int64_t q = dist.alphabet;
    const std::int64_t m = dist.dimension;
    BigInt sum_a = 0, sum_wa = 0, sum_w2a = 0;
    for (const auto& [w, cnt] : dist.counts) {
        if (w == 0) continue;
        sum_a += cnt;
        sum_wa += cnt * w;
        sum_w2a += cnt * w * w;
    }
    MomentReport rep;
    rep.residual[0] = BigRat(sum_a) - (rat_pow(q, m) - 1);
    rep.residual[1] =
        BigRat(sum_wa) -
        (BigRat(BigInt(n) * (q - 1) - b1)) * rat_pow(q, m - 1);
    const BigInt nq1 = BigInt(n) * (q - 1);
    const BigInt bracket =
        nq1 * nq1 + nq1 - b1 * (BigInt(q) + 2 * (n - 1) * (q - 1)) + 2 * b2;
    rep.residual[2] = BigRat(sum_w2a) - BigRat(bracket) * rat_pow(q, m - 2);
    for (int i = 0; i < 3; ++i) rep.ok[i] = (rep.residual[i] == 0);
    return rep;
}

struct FullMomentReport {
    bool all_ok = true;
    int first_failed = -1;
    std::vector<BigRat> residuals;
};

/// The binomial-moment identity for every v in [0, n-1].
inline FullMomentReport full_moment_check(const WeightDistribution& dist,
                                          const WeightDistribution& dual) {
    const std::int64_t n = dist.length;
    const std::int64_t q = dist.alphabet;
    const std::int64_t m = dist.dimension;
    if (dual.length != n || dual.dimension != n - m)
        throw ConstraintViolated("dual dimension");
    FullMomentReport rep;
    for (std::int64_t v = 0; v < n; ++v) {
        BigInt lhs = 0;
        for (const auto& [i, cnt] : dist.counts) lhs += cnt * binomial(n - i, v);
        BigInt rhs_sum = 0;
        for (const auto& [i, cnt] : dual.counts)
            rhs_sum += cnt * binomial(n - i, n - v);
        const BigRat residual = BigRat(lhs) - rat_pow(q, m - v) * rhs_sum;
        rep.residuals.push_back(residual);
        if (residual != 0 && rep.all_ok) {
            rep.all_ok = false;
            rep.first_failed = static_cast<int>(v);
        }
    }
    return rep;
}

inline BigInt krawtchouk(std::int64_t n, std::int64_t q, std::int64_t j,
                         std::int64_t i) {
    BigInt acc = 0;
    const std::int64_t lo = std::max<std::int64_t>(0, j - (n - i));
    const std::int64_t hi = std::min(i, j);
    for (std::int64_t s = lo; s <= hi; ++s) {
        const BigInt term = binomial(i, s) * binomial(n - i, j - s) *
                            big_pow(q - 1, static_cast<std::uint64_t>(j - s));
        if (s % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

/// B_0..B_jmax of the dual distribution via the Krawtchouk expansion.
inline std::vector<BigInt> transform_low_terms(const WeightDistribution& dist,
                                               std::int64_t jmax) {
    const std::int64_t n = dist.length;
    const std::int64_t q = dist.alphabet;
    const BigInt qm = big_pow(q, static_cast<std::uint64_t>(dist.dimension));
    std::vector<BigInt> out;
    for (std::int64_t j = 0; j <= jmax; ++j) {
        BigInt s = 0;
        for (const auto& [i, cnt] : dist.counts)
            s += cnt * krawtchouk(n, q, j, i);
        if (s < 0 || s % qm != 0)
            throw NonIntegerCountError("transform produced a non-integer at " +
                                       std::to_string(j));
        out.push_back(s / qm);
    }
    return out;
}

/// Full dual distribution via the weight-enumerator substitution
/// W_dual(x, y) = q^{-m} W(x + (q-1)y, x - y), exact integers.
inline WeightDistribution macwilliams_transform(
    const WeightDistribution& dist) {
    const auto terms = transform_low_terms(dist, dist.length);
    WeightDistribution dual;
    dual.length = dist.length;
    dual.alphabet = dist.alphabet;
    dual.dimension = dist.length - dist.dimension;
    dual.kernel_size = 1;
    BigInt sum = 0;
    for (std::int64_t j = 0; j <= dist.length; ++j) {
        if (terms[j] != 0) dual.counts[j] = terms[j];
        sum += terms[j];
    }
    if (dual.counts.count(0) == 0 || dual.counts.at(0) != 1 ||
        sum != big_pow(dist.alphabet,
                       static_cast<std::uint64_t>(dual.dimension)))
        throw NonIntegerCountError("transform output is not a distribution");
    return dual;
}

// ---------------------------------------------------------------------
// Low-weight words of the dual code, three ways.

struct DualLowWeight {
    std::uint64_t b1 = 0;
    std::uint64_t b2_brute = 0;
    bool paper_applicable = false;
    std::int64_t b2_paper = 0;  // meaningful iff paper_applicable
    std::uint64_t b2_corrected = 0;
};

/// Counts weight-1 and weight-2 words of the dual by direct support
/// enumeration, and evaluates the two closed forms alongside.
/// Roles C and Cd only.
inline DualLowWeight dual_low_weight(const CodeSpec& spec,
                                     const TwoZeroParams& prm) {
    if (spec.role != Role::C && spec.role != Role::Cd)
        throw ConstraintViolated("dual_low_weight role");
    const FieldTower& T = *spec.tower;
    const std::int64_t n = spec.length;
    const std::int64_t q = prm.q;
    DualLowWeight out;

    // Weight 1: a * x^i with a != 0 evaluating to zero at a unit. Never
    // happens; counted literally all the same.
    for (std::int64_t i = 0; i < n; ++i) {
        const Element at1 = T.from_exponent(-spec.stride1 * i);
        if (T.is_zero(at1)) ++out.b1;
    }

    // Weight 2: support {i, j}, values (a, b) in F_q* x F_q*, both
    // defining zeros annihilated.  Solve the first evaluation equation
    // for b, then verify both by evaluation.
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = i + 1; j < n; ++j) {
            const Element p1i = T.from_exponent(-spec.stride1 * i);
            const Element p1j = T.from_exponent(-spec.stride1 * j);
            for (std::int64_t ac = 1; ac < q; ++ac) {
                const Element a = T.decode_q(ac);
                const Element b = T.neg(T.mul(T.mul(a, p1i), T.inv(p1j)));
                if (!T.in_subfield_q(b) || T.is_zero(b)) continue;
                if (!T.is_zero(T.add(T.mul(a, p1i), T.mul(b, p1j)))) continue;
                if (spec.msg_rank == 2) {
                    const Element p2i = T.from_exponent(-spec.stride2 * i);
                    const Element p2j = T.from_exponent(-spec.stride2 * j);
                    if (!T.is_zero(T.add(T.mul(a, p2i), T.mul(b, p2j))))
                        continue;
                }
                ++out.b2_brute;
            }
        }
    }

    std::int64_t shift_count = 0;  // N in the closed forms
    if (spec.role == Role::C) {
        shift_count = prm.lambda * prm.f * (q - 1) / (prm.d * prm.e) - 1;
        out.paper_applicable = true;
        out.b2_paper = shift_count * (q - 1);
    } else {
        shift_count = prm.lambda * (q - 1) * prm.g / prm.d - 1;
        out.paper_applicable =
            (prm.d * prm.e == q - 1 && prm.lambda == 1 && prm.f == 1);
        if (out.paper_applicable)
            out.b2_paper = ((q - 1) / prm.d - 1) * (q - 1);
    }
    const std::int64_t corrected = (q - 1) * n * shift_count;
    if (corrected % 2 != 0) throw InternalError("corrected count not even");
    out.b2_corrected = static_cast<std::uint64_t>(corrected / 2);
    return out;
}

// ---------------------------------------------------------------------
// Weight-set scaling chain across the derived codes.

struct ScalingChainReport {
    bool cd_vs_prime = false;     // wt(Cd) = lambda * wt(C'd)
    bool dprime_vs_prime = false; // wt(C''d) = (d/g) * wt(C'd)
    bool bar_vs_dprime = false;   // wt(BarCd) = q(p-1)/(p(q-1)) * wt(C''d)
    bool composite = false;       // wt(Cd) = lambda*g*p*(q-1)/(d*q*(p-1)) * wt(BarCd)
    std::set<std::int64_t> wt_cd, wt_prime, wt_dprime, wt_bar;
    std::uint64_t cost = 0;
    bool all_ok() const {
        return cd_vs_prime && dprime_vs_prime && bar_vs_dprime && composite;
    }
};

/// {num*a/den : a in A} == B, with every scaled weight an exact integer.
inline bool scaled_set_equal(const std::set<std::int64_t>& a_set,
                             std::int64_t num, std::int64_t den,
                             const std::set<std::int64_t>& b_set) {
    if (a_set.size() != b_set.size()) return false;
    for (std::int64_t a : a_set) {
        const std::int64_t scaled = a * num;
        if (scaled % den != 0) return false;
        if (b_set.count(scaled / den) == 0) return false;
    }
    return true;
}

inline std::set<std::int64_t> weight_set(const WeightDistribution& d) {
    std::set<std::int64_t> s;
    for (const auto& [w, cnt] : d.counts)
        if (w > 0) s.insert(w);
    return s;
}

inline ScalingChainReport scaling_chain_check(
    const TwoZeroParams& prm, const FieldTower& T, const ExecPolicy& pol = {},
    const WeightDistribution* cd_precomputed = nullptr) {
    ScalingChainReport rep;
    WeightDistribution cd_local;
    if (cd_precomputed == nullptr) {
        cd_local =
            weight_distribution(codes::make_code_spec(Role::Cd, prm, T), pol);
        cd_precomputed = &cd_local;
        rep.cost += cd_local.cost;
    }
    const auto prime = weight_distribution(
        codes::make_code_spec(Role::CdPrime, prm, T), pol);
    const auto dprime = weight_distribution(
        codes::make_code_spec(Role::CdDoublePrime, prm, T), pol);
    const auto bar =
        weight_distribution(codes::make_code_spec(Role::BarCd, prm, T), pol);
    rep.cost += prime.cost + dprime.cost + bar.cost;

    rep.wt_cd = weight_set(*cd_precomputed);
    rep.wt_prime = weight_set(prime);
    rep.wt_dprime = weight_set(dprime);
    rep.wt_bar = weight_set(bar);

    rep.cd_vs_prime = scaled_set_equal(rep.wt_prime, prm.lambda, 1, rep.wt_cd);
    rep.dprime_vs_prime =
        scaled_set_equal(rep.wt_prime, prm.d, prm.g, rep.wt_dprime);
    rep.bar_vs_dprime =
        scaled_set_equal(rep.wt_dprime, prm.q * (prm.p - 1),
                         prm.p * (prm.q - 1), rep.wt_bar);
    rep.composite = scaled_set_equal(
        rep.wt_bar, prm.lambda * prm.g * prm.p * (prm.q - 1),
        prm.d * prm.q * (prm.p - 1), rep.wt_cd);
    return rep;
}

}  // namespace twozero::weights

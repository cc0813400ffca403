#pragma once

#include "twozero/bigint.hpp"
#include "twozero/errors.hpp"
#include "twozero/gf.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace twozero::params {

/// One admissible tuple of the two-zero family plus every derived scalar.
struct TwoZeroParams {
    std::int64_t p = 0, t = 0, k = 0, q = 0;
    std::int64_t d = 0, e = 0, D = 0, lambda = 0;
    std::int64_t n = 0;        // code length, lambda*(q^k-1)/d
    std::int64_t f = 0;        // gcd((q^k-1)/(q-1), d*e)
    std::int64_t g = 0;        // gcd((q^k-1)/(q-1), d)
    std::int64_t f_prime = 0;  // f/g
    std::int64_t n1 = 0;       // (q^k-1)/d
    std::int64_t n2 = 0;       // n1*(q-1)/gcd(q-1, n1)
    std::int64_t mu = 0;       // lambda*(q-1)/d
    BigInt msg_space;          // q^{2k}
};

/// Multiplicative order of q mod n.  Requires gcd(q, n) = 1, n >= 2.
inline std::int64_t ord_mod(std::int64_t q, std::int64_t n) {
    std::int64_t acc = q % n;
    for (std::int64_t j = 1; j <= n; ++j) {
        if (acc == 1) return j;
        acc = static_cast<std::int64_t>(
            (static_cast<__int128>(acc) * (q % n)) % n);
    }
    throw InternalError("order computation did not terminate");
}

inline TwoZeroParams derive(std::int64_t p, std::int64_t t, std::int64_t k,
                            std::int64_t d, std::int64_t e,
                            std::int64_t lambda) {
    if (!gf::is_prime(p)) throw ConstraintViolated("p prime");
    if (t < 1 || k < 1 || d < 1 || lambda < 1)
        throw ConstraintViolated("t,k,d,lambda >= 1");
    if (e < 2) throw ConstraintViolated("e>1");

    TwoZeroParams r;
    r.p = p;
    r.t = t;
    r.k = k;
    r.d = d;
    r.e = e;
    r.lambda = lambda;

    __int128 q128 = 1;
    for (std::int64_t i = 0; i < t; ++i) {
        q128 *= p;
        if (q128 > (static_cast<__int128>(1) << 31))
            throw ConstraintViolated("q too large");
    }
    r.q = static_cast<std::int64_t>(q128);
    __int128 big = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        big *= r.q;
        if (big > (static_cast<__int128>(1) << 62))
            throw ConstraintViolated("q^k too large");
    }
    const std::int64_t order = static_cast<std::int64_t>(big) - 1;

    if ((r.q - 1) % (d * e) != 0) throw ConstraintViolated("de|(q-1)");
    r.D = order / e;  // e | q-1 | q^k-1
    if (d % lambda != 0) throw ConstraintViolated("lambda|d");
    r.n = order / (d / lambda);
    if (r.n < 3) throw ConstraintViolated("n>=3");
    if (std::gcd(r.n, r.q) != 1) throw ConstraintViolated("gcd(n,q)=1");
    if (ord_mod(r.q, r.n) != k) throw ConstraintViolated("ord_n(q)=k");

    const std::int64_t step = order / (r.q - 1);
    r.f = std::gcd(step, d * e);
    r.g = std::gcd(step, d);
    if (r.f % r.g != 0) throw InternalError("g does not divide f");
    r.f_prime = r.f / r.g;
    r.n1 = order / d;
    r.n2 = r.n1 * ((r.q - 1) / std::gcd(r.q - 1, r.n1));
    if (r.n2 != order / r.g) throw ConstraintViolated("n2 identity");
    r.mu = lambda * (r.q - 1) / d;
    if ((r.q - 1) % r.mu != 0) throw ConstraintViolated("mu|(q-1)");
    r.msg_space = big_pow(r.q, static_cast<std::uint64_t>(2 * k));
    return r;
}

/// Writes q as p^t for prime p, or nothing if q is not a prime power.
inline std::optional<std::pair<std::int64_t, std::int64_t>> prime_power(
    std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = q;
    for (std::int64_t c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    std::int64_t t = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++t;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, t);
}

/// Every admissible tuple with q <= max_q, q^{2k} <= max_msgs and
/// n <= max_n, in lexicographic order of (q, k, d, e, lambda).
inline std::vector<TwoZeroParams> enumerate_tuples(std::int64_t max_q,
                                                   std::uint64_t max_msgs,
                                                   std::int64_t max_n) {
    std::vector<TwoZeroParams> out;
    for (std::int64_t q = 3; q <= max_q; ++q) {
        const auto pt = prime_power(q);
        if (!pt) continue;
        const auto [p, t] = *pt;
        for (std::int64_t k = 1;; ++k) {
            __int128 msgs = 1;
            bool over = false;
            for (std::int64_t i = 0; i < 2 * k && !over; ++i) {
                msgs *= q;
                over = msgs > static_cast<__int128>(max_msgs);
            }
            if (over) break;
            for (std::int64_t d = 1; d < q; ++d) {
                if ((q - 1) % d != 0) continue;
                for (std::int64_t e = 2; e <= (q - 1) / d; ++e) {
                    if (((q - 1) / d) % e != 0) continue;
                    for (std::int64_t lambda = 1; lambda <= d; ++lambda) {
                        if (d % lambda != 0) continue;
                        try {
                            auto prm = derive(p, t, k, d, e, lambda);
                            if (prm.n <= max_n) out.push_back(std::move(prm));
                        } catch (const ConstraintViolated&) {
                            // inadmissible combination; skip
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace twozero::params

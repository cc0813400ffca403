#pragma once

#include "twozero/errors.hpp"

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace twozero::gf {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Field element in discrete-log form: `rep` is an exponent of the
/// primitive element in [0, q^k-2], or big_order as the zero sentinel.
struct Element {
    std::int64_t rep = 0;
    friend bool operator==(const Element&, const Element&) = default;
};

/// The tower F_p <= F_q <= F_{q^k} with q = p^t, realized as
/// F_p[x]/(modulus) for a fixed primitive modulus.  gamma is the class
/// of x.  All arithmetic reduces to exponent arithmetic plus one Zech
/// table lookup per addition; traces are precomputed per element.
///
/// Immutable after construction; safe to share across threads.
class FieldTower {
public:
    std::int64_t p = 0, t = 0, k = 0, q = 0;
    std::int64_t big_order = 0;      // q^k - 1
    std::int64_t subfield_step = 0;  // (q^k-1)/(q-1); F_q* = <gamma^step>
    std::int64_t prime_step = 0;     // (q^k-1)/(p-1)
    std::vector<int> modulus;        // degree t*k, low-degree first, monic

    // zech[i] = log(1 + gamma^i), or big_order when 1 + gamma^i = 0.
    std::vector<std::int32_t> zech;
    // Element code of the trace, indexed by rep (index big_order = zero).
    std::vector<std::int32_t> trace_q_tbl, trace_p_tbl;
    std::vector<std::uint8_t> trace_q_nonzero, trace_p_nonzero;
    // gamma^i packed base-p (constant digit lowest), for dumps/tests.
    std::vector<std::int32_t> power_code;

    static constexpr std::uint64_t kDefaultCap = 1ull << 22;

    static FieldTower build(std::int64_t p, std::int64_t t, std::int64_t k,
                            std::uint64_t cap = kDefaultCap) {
        auto mod = smallest_primitive_modulus(p, t, k, cap);
        return build_with_modulus(p, t, k, mod, cap);
    }

    /// Builds with an explicit modulus (must be primitive of degree t*k).
    static FieldTower build_with_modulus(std::int64_t p, std::int64_t t,
                                         std::int64_t k, std::vector<int> mod,
                                         std::uint64_t cap = kDefaultCap) {
        validate_shape(p, t, k, cap);
        FieldTower T;
        T.p = p;
        T.t = t;
        T.k = k;
        T.q = 1;
        for (std::int64_t i = 0; i < t; ++i) T.q *= p;
        std::int64_t size = 1;
        for (std::int64_t i = 0; i < t * k; ++i) size *= p;
        T.big_order = size - 1;
        T.subfield_step = T.big_order / (T.q - 1);
        T.prime_step = T.big_order / (p - 1);
        T.modulus = std::move(mod);
        T.populate_tables();
        T.verify_tables();
        return T;
    }

    // -- element constructors ------------------------------------------

    Element zero() const { return {big_order}; }
    Element one() const { return {0}; }
    Element gamma() const { return {big_order == 1 ? 0 : 1}; }
    bool is_zero(Element a) const { return a.rep == big_order; }

    Element from_exponent(std::int64_t e) const {
        e %= big_order;
        if (e < 0) e += big_order;
        return {e};
    }

    // -- arithmetic -----------------------------------------------------

    Element add(Element a, Element b) const {
        const std::int64_t n = big_order;
        if (a.rep == n) return b;
        if (b.rep == n) return a;
        std::int64_t diff = b.rep - a.rep;
        if (diff < 0) diff += n;
        const std::int64_t z = zech[diff];
        if (z == n) return {n};
        std::int64_t s = a.rep + z;
        if (s >= n) s -= n;
        return {s};
    }

    Element neg(Element a) const {
        if (p == 2 || a.rep == big_order) return a;
        std::int64_t s = a.rep + big_order / 2;
        if (s >= big_order) s -= big_order;
        return {s};
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const {
        if (a.rep == big_order || b.rep == big_order) return {big_order};
        std::int64_t s = a.rep + b.rep;
        if (s >= big_order) s -= big_order;
        return {s};
    }

    Element inv(Element a) const {
        if (a.rep == big_order) throw DivisionByZeroError{};
        return {a.rep == 0 ? 0 : big_order - a.rep};
    }

    Element pow(Element a, std::int64_t e) const {
        if (a.rep == big_order) {
            if (e == 0) return one();
            if (e < 0) throw DivisionByZeroError{};
            return a;
        }
        const __int128 prod = static_cast<__int128>(a.rep) * (e % big_order);
        std::int64_t r = static_cast<std::int64_t>(prod % big_order);
        if (r < 0) r += big_order;
        return {r};
    }

    // -- traces and orders ----------------------------------------------

    Element trace_to_q(Element a) const { return {trace_q_tbl[a.rep]}; }
    Element trace_to_p(Element a) const { return {trace_p_tbl[a.rep]}; }

    std::int64_t mult_order(Element a) const {
        if (a.rep == big_order) throw DivisionByZeroError{};
        return big_order / std::gcd(big_order, a.rep);
    }

    // -- subfield membership and coordinate encoding ---------------------

    bool in_subfield_q(Element a) const {
        return a.rep == big_order || a.rep % subfield_step == 0;
    }
    bool in_subfield_p(Element a) const {
        return a.rep == big_order || a.rep % prime_step == 0;
    }

    /// Fixed enumeration of F_q: 0 -> 0, gamma^{i*step} -> i+1.
    std::int64_t encode_q(Element a) const {
        if (a.rep == big_order) return 0;
        if (a.rep % subfield_step != 0)
            throw InternalError("element not in F_q");
        return a.rep / subfield_step + 1;
    }
    std::int64_t encode_p(Element a) const {
        if (a.rep == big_order) return 0;
        if (a.rep % prime_step != 0)
            throw InternalError("element not in F_p");
        return a.rep / prime_step + 1;
    }
    Element decode_q(std::int64_t c) const {
        if (c == 0) return zero();
        return {(c - 1) * subfield_step};
    }

    // -- table checksums (FNV-1a over little-endian int32 entries) -------

    std::uint64_t zech_checksum() const { return fnv1a(zech); }
    std::uint64_t trace_q_checksum() const { return fnv1a(trace_q_tbl); }
    std::uint64_t trace_p_checksum() const { return fnv1a(trace_p_tbl); }

    /// First `count` primitive monic polynomials of degree t*k over F_p in
    /// the canonical order (coefficient vectors compared low-degree-first).
    static std::vector<std::vector<int>> primitive_moduli(
        std::int64_t p, std::int64_t t, std::int64_t k, std::size_t count,
        std::uint64_t cap = kDefaultCap) {
        validate_shape(p, t, k, cap);
        const std::int64_t m = t * k;
        std::int64_t size = 1;
        for (std::int64_t i = 0; i < m; ++i) size *= p;
        std::vector<std::vector<int>> found;
        std::vector<int> digits(m, 0);
        for (std::int64_t code = 0; code < size && found.size() < count;
             ++code) {
            // Lexicographic order on (c_0, ..., c_{m-1}): c_0 is the most
            // significant digit of `code`.
            std::int64_t rest = code;
            for (std::int64_t j = m - 1; j >= 0; --j) {
                digits[j] = static_cast<int>(rest % p);
                rest /= p;
            }
            if (digits[0] == 0) continue;  // x | f(x): never primitive
            std::vector<int> cand(digits.begin(), digits.end());
            cand.push_back(1);  // monic
            if (x_order(p, cand) == size - 1) found.push_back(cand);
        }
        if (found.empty())
            throw NoPrimitivePolynomialError("no primitive polynomial found");
        return found;
    }

private:
    static std::vector<int> smallest_primitive_modulus(std::int64_t p,
                                                       std::int64_t t,
                                                       std::int64_t k,
                                                       std::uint64_t cap) {
        return primitive_moduli(p, t, k, 1, cap).front();
    }

    static void validate_shape(std::int64_t p, std::int64_t t, std::int64_t k,
                               std::uint64_t cap) {
        if (!is_prime(p)) throw NotPrimeError(p);
        if (t < 1 || k < 1) throw ConstraintViolated("t,k >= 1");
        std::uint64_t size = 1;
        for (std::int64_t i = 0; i < t * k; ++i) {
            size *= static_cast<std::uint64_t>(p);
            if (size > cap) throw SizeExceededError(size, cap);
        }
    }

    /// Multiplicative order of x modulo `poly` (monic, f(0) != 0),
    /// computed by iterating multiplication by x.
    static std::int64_t x_order(std::int64_t p, const std::vector<int>& poly) {
        const std::int64_t m = static_cast<std::int64_t>(poly.size()) - 1;
        std::int64_t size = 1;
        for (std::int64_t i = 0; i < m; ++i) size *= p;
        std::vector<int> v(m, 0);
        v[0] = 1;
        for (std::int64_t step = 1; step <= size - 1; ++step) {
            mulx(p, poly, v);
            bool is_one = (v[0] == 1);
            for (std::int64_t j = 1; j < m && is_one; ++j) is_one = (v[j] == 0);
            if (is_one) return step;
        }
        return size;  // never returned to 1: not a unit of full order
    }

    /// v <- v*x reduced mod poly (digit vector of length deg poly).
    static void mulx(std::int64_t p, const std::vector<int>& poly,
                     std::vector<int>& v) {
        const std::int64_t m = static_cast<std::int64_t>(poly.size()) - 1;
        const int top = v[m - 1];
        for (std::int64_t j = m - 1; j >= 1; --j) v[j] = v[j - 1];
        v[0] = 0;
        if (top != 0) {
            // x^m = -(c_{m-1} x^{m-1} + ... + c_0)
            for (std::int64_t j = 0; j < m; ++j) {
                v[j] = static_cast<int>(
                    (v[j] + static_cast<std::int64_t>(p - poly[j]) * top) % p);
            }
        }
    }

    void populate_tables() {
        const std::int64_t m = t * k;
        const std::int64_t n = big_order;
        const std::int64_t size = n + 1;

        // Powers of gamma as packed base-p codes, plus the inverse map.
        power_code.assign(n, 0);
        std::vector<std::int32_t> log_of(size, static_cast<std::int32_t>(n));
        std::vector<int> v(m, 0);
        v[0] = 1;
        std::int64_t pm = 1;
        std::vector<std::int64_t> pw(m);
        for (std::int64_t j = 0; j < m; ++j) {
            pw[j] = pm;
            pm *= p;
        }
        for (std::int64_t i = 0; i < n; ++i) {
            std::int64_t code = 0;
            for (std::int64_t j = 0; j < m; ++j) code += v[j] * pw[j];
            if (code == 0 || log_of[code] != n)
                throw InternalError("modulus is not primitive");
            power_code[i] = static_cast<std::int32_t>(code);
            log_of[code] = static_cast<std::int32_t>(i);
            mulx(p, modulus, v);
        }
        bool back_to_one = (v[0] == 1);
        for (std::int64_t j = 1; j < m && back_to_one; ++j)
            back_to_one = (v[j] == 0);
        if (!back_to_one) throw InternalError("gamma order != q^k - 1");

        // Zech table: z(i) = log(1 + gamma^i).
        zech.assign(n, 0);
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t code = power_code[i];
            const std::int64_t d0 = code % p;
            const std::int64_t bumped = code - d0 + (d0 + 1) % p;
            zech[i] = (bumped == 0) ? static_cast<std::int32_t>(n)
                                    : log_of[bumped];
        }

        trace_q_tbl = make_trace_table(q, k);
        trace_p_tbl = make_trace_table(p, m);
        trace_q_nonzero = nonzero_mask(trace_q_tbl);
        trace_p_nonzero = nonzero_mask(trace_p_tbl);
    }

    /// trace(x) = sum of x^{base^j} for j in [0, levels).
    std::vector<std::int32_t> make_trace_table(std::int64_t base,
                                               std::int64_t levels) const {
        const std::int64_t n = big_order;
        std::vector<std::int32_t> tbl(n + 1, static_cast<std::int32_t>(n));
        for (std::int64_t i = 0; i < n; ++i) {
            Element acc = {n};
            std::int64_t e = i;
            for (std::int64_t j = 0; j < levels; ++j) {
                acc = add(acc, {e});
                e = static_cast<std::int64_t>(
                    (static_cast<__int128>(e) * base) % n);
            }
            tbl[i] = static_cast<std::int32_t>(acc.rep);
        }
        return tbl;
    }

    std::vector<std::uint8_t> nonzero_mask(
        const std::vector<std::int32_t>& tbl) const {
        std::vector<std::uint8_t> mask(tbl.size());
        for (std::size_t i = 0; i < tbl.size(); ++i)
            mask[i] = (tbl[i] != big_order) ? 1 : 0;
        return mask;
    }

    void verify_tables() const {
        const std::int64_t n = big_order;
        // 1 + gamma^i vanishes exactly once: at i = n/2 (odd p) or i = 0
        // (char 2, where 1 + 1 = 0).
        std::int64_t none_count = 0, none_at = -1;
        for (std::int64_t i = 0; i < n; ++i) {
            if (zech[i] == n) {
                ++none_count;
                none_at = i;
            }
        }
        const std::int64_t expect_at = (p == 2) ? 0 : n / 2;
        if (none_count != 1 || none_at != expect_at)
            throw InternalError("zech table inconsistent");

        std::int64_t zq = 0, zp = 0, sq = 1, sp = 1;
        for (std::int64_t i = 0; i < k - 1; ++i) sq *= q;
        for (std::int64_t i = 0; i < t * k - 1; ++i) sp *= p;
        for (std::int64_t i = 0; i <= n; ++i) {
            if (trace_q_tbl[i] == n)
                ++zq;
            else if (trace_q_tbl[i] % subfield_step != 0)
                throw InternalError("trace_q outside F_q");
            if (trace_p_tbl[i] == n)
                ++zp;
            else if (trace_p_tbl[i] % prime_step != 0)
                throw InternalError("trace_p outside F_p");
        }
        if (zq != sq || zp != sp)
            throw InternalError("trace kernel has wrong size");
    }

    static std::uint64_t fnv1a(const std::vector<std::int32_t>& data) {
        std::uint64_t h = 14695981039346656037ull;
        for (std::int32_t w : data) {
            for (int b = 0; b < 4; ++b) {
                h ^= static_cast<std::uint8_t>(w >> (8 * b));
                h *= 1099511628211ull;
            }
        }
        return h;
    }
};

}  // namespace twozero::gf

#pragma once

// Independent polynomial-basis field arithmetic, used only as a test
// oracle against the discrete-log tower.  Deliberately naive: dense
// coefficient vectors, schoolbook products, explicit reduction.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

struct PolyField {
    std::int64_t p;
    int m;
    std::vector<int> modulus;  // low-degree first, monic, degree m

    using Elem = std::vector<int>;  // coefficient vector of length m

    PolyField(std::int64_t p_, std::vector<int> mod)
        : p(p_), m(static_cast<int>(mod.size()) - 1), modulus(std::move(mod)) {}

    Elem zero() const { return Elem(m, 0); }

    Elem one() const {
        Elem e(m, 0);
        e[0] = 1;
        return e;
    }

    /// The class of the indeterminate.
    Elem x() const {
        Elem e(m, 0);
        if (m == 1) {
            e[0] = static_cast<int>((p - modulus[0] % p) % p);
        } else {
            e[1] = 1;
        }
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (int c : a)
            if (c != 0) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(m);
        for (int i = 0; i < m; ++i)
            r[i] = static_cast<int>((a[i] + b[i]) % p);
        return r;
    }

    Elem neg(const Elem& a) const {
        Elem r(m);
        for (int i = 0; i < m; ++i)
            r[i] = static_cast<int>((p - a[i]) % p);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<std::int64_t> prod(2 * m - 1, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p;
        for (int deg = 2 * m - 2; deg >= m; --deg) {
            const std::int64_t c = prod[deg];
            if (c == 0) continue;
            prod[deg] = 0;
            for (int j = 0; j < m; ++j)
                prod[deg - m + j] =
                    (prod[deg - m + j] + (p - modulus[j]) * c) % p;
        }
        Elem r(m);
        for (int i = 0; i < m; ++i) r[i] = static_cast<int>(prod[i]);
        return r;
    }

    Elem pow(Elem a, std::int64_t e) const {
        Elem acc = one();
        while (e > 0) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }

    /// Trace onto the subfield of order p^u: sum of a^{(p^u)^i} over
    /// i < m/u.  Requires u | m.
    Elem trace(const Elem& a, int u) const {
        std::int64_t sub = 1;
        for (int i = 0; i < u; ++i) sub *= p;
        Elem acc = a;
        Elem frob = a;
        for (int i = 1; i < m / u; ++i) {
            frob = pow(frob, sub);
            acc = add(acc, frob);
        }
        return acc;
    }

    /// Multiplicative order; returns 0 for the zero element.
    std::int64_t order(const Elem& a) const {
        if (is_zero(a)) return 0;
        Elem cur = a;
        std::int64_t ord = 1;
        while (!(cur == one())) {
            cur = mul(cur, a);
            ++ord;
        }
        return ord;
    }

    /// All p^m elements, odometer order.
    std::vector<Elem> all_elements() const {
        std::vector<Elem> out;
        Elem cur(m, 0);
        while (true) {
            out.push_back(cur);
            int i = 0;
            while (i < m && ++cur[i] == p) cur[i++] = 0;
            if (i == m) break;
        }
        return out;
    }
};

/// Weight counts of the trace code with coordinate j given by
/// trace(u * beta^{s1 j} [+ v * beta^{s2 j}]) onto the subfield of order
/// p^u, by direct polynomial-basis evaluation over every message.
inline std::map<std::int64_t, std::uint64_t> weight_counts(
    const PolyField& F, std::int64_t length, std::int64_t s1,
    std::optional<std::int64_t> s2, int u) {
    std::int64_t big = 1;
    for (int i = 0; i < F.m; ++i) big *= F.p;
    const std::int64_t order = big - 1;
    const PolyField::Elem beta = F.pow(F.x(), order - 1);  // gamma^{-1}

    std::vector<PolyField::Elem> b1(length), b2;
    for (std::int64_t j = 0; j < length; ++j)
        b1[j] = F.pow(beta, (s1 * j) % order);
    if (s2) {
        b2.resize(length);
        for (std::int64_t j = 0; j < length; ++j)
            b2[j] = F.pow(beta, (*s2 * j) % order);
    }

    std::map<std::int64_t, std::uint64_t> counts;
    const auto elems = F.all_elements();
    for (const auto& uu : elems) {
        if (!s2) {
            std::int64_t w = 0;
            for (std::int64_t j = 0; j < length; ++j)
                if (!F.is_zero(F.trace(F.mul(uu, b1[j]), u))) ++w;
            ++counts[w];
            continue;
        }
        for (const auto& vv : elems) {
            std::int64_t w = 0;
            for (std::int64_t j = 0; j < length; ++j) {
                const auto coord =
                    F.add(F.mul(uu, b1[j]), F.mul(vv, b2[j]));
                if (!F.is_zero(F.trace(coord, u))) ++w;
            }
            ++counts[w];
        }
    }
    return counts;
}

}  // namespace oracle

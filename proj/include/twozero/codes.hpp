#pragma once

#include "twozero/errors.hpp"
#include "twozero/gf.hpp"
#include "twozero/params.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twozero::codes {

using gf::Element;
using gf::FieldTower;
using params::TwoZeroParams;

/// Orbit of `a` under multiplication by `multiplier` mod `modulus`,
/// sorted ascending (minimal representative first).
inline std::vector<std::int64_t> cyclotomic_coset(std::int64_t a,
                                                  std::int64_t modulus,
                                                  std::int64_t multiplier) {
    a %= modulus;
    if (a < 0) a += modulus;
    std::vector<std::int64_t> coset{a};
    std::int64_t cur = static_cast<std::int64_t>(
        (static_cast<__int128>(a) * multiplier) % modulus);
    while (cur != a) {
        coset.push_back(cur);
        cur = static_cast<std::int64_t>(
            (static_cast<__int128>(cur) * multiplier) % modulus);
    }
    std::sort(coset.begin(), coset.end());
    return coset;
}

// ---------------------------------------------------------------------
// Dense polynomials over the tower (coefficients are tower elements).

struct Poly {
    std::vector<Element> c;  // low degree first; zero poly has empty c

    std::int64_t degree() const {
        return static_cast<std::int64_t>(c.size()) - 1;
    }
    bool is_zero() const { return c.empty(); }
};

inline void poly_trim(Poly& a, const FieldTower& T) {
    while (!a.c.empty() && T.is_zero(a.c.back())) a.c.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, const FieldTower& T) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, T.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = T.add(r.c[i + j], T.mul(a.c[i], b.c[j]));
    poly_trim(r, T);
    return r;
}

/// Remainder of a modulo monic b.
inline Poly poly_rem(Poly a, const Poly& b, const FieldTower& T) {
    if (b.is_zero()) throw DivisionByZeroError{};
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Element lead = a.c.back();
        const std::size_t shift = a.c.size() - b.c.size();
        for (std::size_t j = 0; j < b.c.size(); ++j)
            a.c[shift + j] = T.sub(a.c[shift + j], T.mul(lead, b.c[j]));
        poly_trim(a, T);
    }
    return a;
}

inline Element poly_eval(const Poly& a, Element x, const FieldTower& T) {
    Element acc = T.zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        acc = T.add(T.mul(acc, x), *it);
    return acc;
}

inline Poly x_pow_n_minus_one(std::int64_t n, const FieldTower& T) {
    Poly r;
    r.c.assign(n + 1, T.zero());
    r.c[0] = T.neg(T.one());
    r.c[n] = T.one();
    return r;
}

/// Minimal polynomial of gamma^a over F_q: the product of (x - gamma^{a q^i})
/// over the cyclotomic coset of a.  Coefficients are verified to lie in F_q.
inline Poly min_poly(std::int64_t a, const FieldTower& T) {
    const auto coset = cyclotomic_coset(a, T.big_order, T.q);
    Poly r;
    r.c = {T.one()};
    for (std::int64_t expo : coset) {
        Poly factor;
        factor.c = {T.neg(T.from_exponent(expo)), T.one()};
        r = poly_mul(r, factor, T);
    }
    for (const Element& coef : r.c)
        if (!T.in_subfield_q(coef))
            throw InternalError("minimal polynomial coefficient outside F_q");
    return r;
}

struct CheckPolyInfo {
    Poly h, h_d, h_D;
    std::vector<std::int64_t> coset_d, coset_D;
    bool cosets_disjoint = false;
    bool degree_ok = false;  // deg h == 2k
    bool divides = false;    // h | x^n - 1
};

inline CheckPolyInfo check_poly(const TwoZeroParams& prm,
                                const FieldTower& T) {
    CheckPolyInfo info;
    info.coset_d = cyclotomic_coset(prm.d, T.big_order, T.q);
    info.coset_D = cyclotomic_coset(prm.d + prm.D, T.big_order, T.q);
    std::vector<std::int64_t> common;
    std::set_intersection(info.coset_d.begin(), info.coset_d.end(),
                          info.coset_D.begin(), info.coset_D.end(),
                          std::back_inserter(common));
    info.cosets_disjoint = common.empty();
    info.h_d = min_poly(prm.d, T);
    info.h_D = min_poly(prm.d + prm.D, T);
    info.h = poly_mul(info.h_d, info.h_D, T);
    info.degree_ok = (info.h.degree() == 2 * prm.k);
    info.divides = poly_rem(x_pow_n_minus_one(prm.n, T), info.h, T).is_zero();
    return info;
}

// ---------------------------------------------------------------------
// Code family members in trace representation.

enum class Role { C, Cd, CD, CdPrime, CdDoublePrime, BarCd };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::C: return "C";
        case Role::Cd: return "Cd";
        case Role::CD: return "CD";
        case Role::CdPrime: return "CdPrime";
        case Role::CdDoublePrime: return "CdDoublePrime";
        case Role::BarCd: return "BarCd";
    }
    return "?";
}

inline std::optional<Role> role_from_string(std::string_view s) {
    if (s == "C") return Role::C;
    if (s == "Cd") return Role::Cd;
    if (s == "CD") return Role::CD;
    if (s == "CdPrime") return Role::CdPrime;
    if (s == "CdDoublePrime") return Role::CdDoublePrime;
    if (s == "BarCd") return Role::BarCd;
    return std::nullopt;
}

/// One member of the family: coordinate j of a codeword is
/// trace(u * beta^{s1 j} + v * beta^{s2 j}) with beta = gamma^{-1}, the
/// trace taken to F_q (or F_p for BarCd).  exp1/exp2 hold the exponents
/// of beta^{stride * j} so the enumeration loop is pure table lookups.
struct CodeSpec {
    Role role = Role::C;
    const FieldTower* tower = nullptr;
    std::int64_t length = 0;
    std::int64_t alphabet = 0;
    int msg_rank = 1;
    bool to_prime = false;  // trace to F_p instead of F_q
    std::int64_t stride1 = 0, stride2 = 0;
    std::vector<std::int32_t> exp1, exp2;
};

inline std::vector<std::int32_t> beta_exponents(std::int64_t stride,
                                                std::int64_t length,
                                                const FieldTower& T) {
    std::vector<std::int32_t> exps(length);
    const std::int64_t n = T.big_order;
    const std::int64_t s = ((stride % n) + n) % n;
    std::int64_t cur = 0;
    for (std::int64_t j = 0; j < length; ++j) {
        exps[j] = static_cast<std::int32_t>(cur);
        cur -= s;
        if (cur < 0) cur += n;
    }
    return exps;
}

inline CodeSpec make_code_spec(Role role, const TwoZeroParams& prm,
                               const FieldTower& T) {
    CodeSpec spec;
    spec.role = role;
    spec.tower = &T;
    spec.alphabet = prm.q;
    switch (role) {
        case Role::C:
            spec.length = prm.n;
            spec.msg_rank = 2;
            spec.stride1 = prm.d;
            spec.stride2 = prm.d + prm.D;
            break;
        case Role::Cd:
            spec.length = prm.n;
            spec.stride1 = prm.d;
            break;
        case Role::CD:
            spec.length = prm.n;
            spec.stride1 = prm.d + prm.D;
            break;
        case Role::CdPrime:
            spec.length = prm.n1;
            spec.stride1 = prm.d;
            break;
        case Role::CdDoublePrime:
            spec.length = prm.n2;
            spec.stride1 = prm.g;
            break;
        case Role::BarCd:
            spec.length = prm.n2;
            spec.stride1 = prm.g;
            spec.alphabet = prm.p;
            spec.to_prime = true;
            break;
    }
    spec.exp1 = beta_exponents(spec.stride1, spec.length, T);
    if (spec.msg_rank == 2)
        spec.exp2 = beta_exponents(spec.stride2, spec.length, T);
    return spec;
}

/// Standalone irreducible trace code (Tr(u beta^{stride j}))_{j<length};
/// used for codes outside the two-zero family.
inline CodeSpec make_irreducible_spec(const FieldTower& T, std::int64_t stride,
                                      std::int64_t length, bool to_prime) {
    CodeSpec spec;
    spec.role = Role::Cd;
    spec.tower = &T;
    spec.length = length;
    spec.alphabet = to_prime ? T.p : T.q;
    spec.to_prime = to_prime;
    spec.stride1 = stride;
    spec.exp1 = beta_exponents(stride, length, T);
    return spec;
}

inline Element coordinate(const CodeSpec& spec, Element u, Element v,
                          std::int64_t j) {
    const FieldTower& T = *spec.tower;
    Element s = T.mul(u, T.from_exponent(spec.exp1[j]));
    if (spec.msg_rank == 2)
        s = T.add(s, T.mul(v, T.from_exponent(spec.exp2[j])));
    return spec.to_prime ? T.trace_to_p(s) : T.trace_to_q(s);
}

/// Codeword in the fixed coordinate encoding (0 -> 0, gamma^{i*step} -> i+1).
inline std::vector<std::int64_t> codeword(const CodeSpec& spec, Element u,
                                          Element v) {
    const FieldTower& T = *spec.tower;
    std::vector<std::int64_t> word(spec.length);
    for (std::int64_t j = 0; j < spec.length; ++j) {
        const Element tr = coordinate(spec, u, v, j);
        word[j] = spec.to_prime ? T.encode_p(tr) : T.encode_q(tr);
    }
    return word;
}

inline std::vector<std::int64_t> codeword(const CodeSpec& spec, Element u) {
    return codeword(spec, u, spec.tower->zero());
}

/// Rows are codewords of the messages gamma^0, ..., gamma^{r-1} (a basis
/// of the message space over the alphabet field), as tower elements.
inline std::vector<std::vector<Element>> generator_rows(const CodeSpec& spec) {
    const FieldTower& T = *spec.tower;
    const std::int64_t ext = spec.to_prime ? T.t * T.k : T.k;
    std::vector<std::vector<Element>> rows;
    for (int part = 0; part < spec.msg_rank; ++part) {
        for (std::int64_t i = 0; i < ext; ++i) {
            const Element b = T.from_exponent(i);
            const Element u = (part == 0) ? b : T.zero();
            const Element v = (part == 0) ? T.zero() : b;
            std::vector<Element> row(spec.length);
            for (std::int64_t j = 0; j < spec.length; ++j)
                row[j] = coordinate(spec, u, v, j);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::vector<std::vector<std::int64_t>> generator_matrix(
    const CodeSpec& spec) {
    const FieldTower& T = *spec.tower;
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : generator_rows(spec)) {
        std::vector<std::int64_t> enc(row.size());
        for (std::size_t j = 0; j < row.size(); ++j)
            enc[j] = spec.to_prime ? T.encode_p(row[j]) : T.encode_q(row[j]);
        out.push_back(std::move(enc));
    }
    return out;
}

/// Rank of the generator matrix, i.e. the code dimension over the
/// alphabet field.
inline int generator_rank(const CodeSpec& spec) {
    const FieldTower& T = *spec.tower;
    auto rows = generator_rows(spec);
    int rank = 0;
    std::size_t col = 0;
    const std::size_t ncols = spec.length;
    for (; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!T.is_zero(rows[r][col])) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Element inv_p = T.inv(rows[rank][col]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            if (T.is_zero(rows[r][col])) continue;
            const Element factor = T.mul(rows[r][col], inv_p);
            for (std::size_t j = col; j < ncols; ++j)
                rows[r][j] =
                    T.sub(rows[r][j], T.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace twozero::codes

#pragma once

#include "twozero/sw.hpp"
#include "twozero/verify.hpp"
#include "twozero/weights.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

namespace twozero::report {

using OrderedJson = nlohmann::ordered_json;

inline std::int64_t to_i64(const BigInt& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw InternalError("count does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline OrderedJson params_json(const params::TwoZeroParams& prm) {
    OrderedJson j;
    j["p"] = prm.p;
    j["t"] = prm.t;
    j["k"] = prm.k;
    j["q"] = prm.q;
    j["d"] = prm.d;
    j["e"] = prm.e;
    j["D"] = prm.D;
    j["lambda"] = prm.lambda;
    j["n"] = prm.n;
    j["f"] = prm.f;
    j["g"] = prm.g;
    j["f_prime"] = prm.f_prime;
    j["n1"] = prm.n1;
    j["n2"] = prm.n2;
    j["mu"] = prm.mu;
    j["msg_space"] = to_i64(prm.msg_space);
    return j;
}

inline OrderedJson distribution_json(const weights::WeightDistribution& d) {
    OrderedJson j;
    j["n"] = d.length;
    j["q"] = d.alphabet;
    j["dim"] = d.dimension;
    OrderedJson counts = OrderedJson::object();
    for (const auto& [w, c] : d.counts)
        counts[std::to_string(w)] = to_i64(c);
    j["counts"] = counts;
    return j;
}

inline OrderedJson dual_json(const weights::DualLowWeight& d) {
    OrderedJson j;
    j["b1"] = d.b1;
    j["b2_brute"] = d.b2_brute;
    if (d.paper_applicable)
        j["b2_paper"] = d.b2_paper;
    else
        j["b2_paper"] = nullptr;
    j["b2_corrected"] = d.b2_corrected;
    j["paper_applicable"] = d.paper_applicable;
    return j;
}

inline OrderedJson sw_json(const sw::SWAnalysis& a) {
    OrderedJson j;
    j["theta"] = rational_string(a.theta_val);
    j["h"] = a.h;
    OrderedJson sols = OrderedJson::array();
    for (const auto& s : a.solutions)
        sols.push_back({{"m", s.m}, {"epsilon", s.epsilon}});
    j["solutions"] = sols;
    OrderedJson cands = OrderedJson::array();
    for (const auto& c : a.candidates)
        cands.push_back(
            {rational_string(c.w1), rational_string(c.w2)});
    j["candidates"] = cands;
    return j;
}

/// Flat projection of a ScanRecord with a fixed key order; integers stay
/// integers, rationals are "a/b" strings.
inline OrderedJson record_json(const verify::ScanRecord& r) {
    OrderedJson j;
    j["p"] = r.prm.p;
    j["t"] = r.prm.t;
    j["q"] = r.prm.q;
    j["k"] = r.prm.k;
    j["d"] = r.prm.d;
    j["e"] = r.prm.e;
    j["D"] = r.prm.D;
    j["lambda"] = r.prm.lambda;
    j["n"] = r.prm.n;
    j["f"] = r.prm.f;
    j["g"] = r.prm.g;
    j["mu"] = r.prm.mu;
    j["dim_C"] = r.dim_C;
    j["coset_ok"] = r.coset_ok;
    j["weights"] = r.weights_C;
    j["num_weights"] = r.num_weights;
    j["b1"] = r.dual.b1;
    j["b2_brute"] = r.dual.b2_brute;
    j["b2_paper"] = r.dual.b2_paper;
    j["b2_corrected"] = r.dual.b2_corrected;
    j["projective"] = r.projective;
    j["moments_ok"] = r.moments_ok;
    j["scaling_ok"] = r.scaling_ok;
    j["paper_b2_agrees"] = r.paper_b2_agrees;
    j["thm_nonprojective"] = r.thm_nonprojective_ok;
    j["thm_not_two_weight"] = r.thm_not_two_weight_ok;
    j["wolfmann"] = verify::wolfmann_name(r.wolfmann);
    if (r.key_eq_residual_brute)
        j["key_eq_residual_brute"] = rational_string(*r.key_eq_residual_brute);
    else
        j["key_eq_residual_brute"] = nullptr;
    if (r.key_eq_residual_paper)
        j["key_eq_residual_paper"] = rational_string(*r.key_eq_residual_paper);
    else
        j["key_eq_residual_paper"] = nullptr;
    j["cost"] = r.cost;
    return j;
}

inline std::string jsonl_line(const verify::ScanRecord& r) {
    return record_json(r).dump() + "\n";
}

inline std::string csv_header() {
    return "q,k,d,e,lambda,n,num_weights,b2_brute,b2_paper,projective,"
           "thm_nonprojective,thm_not_two_weight\n";
}

inline std::string csv_row(const verify::ScanRecord& r) {
    std::ostringstream os;
    const auto b = [](bool v) { return v ? "true" : "false"; };
    os << r.prm.q << ',' << r.prm.k << ',' << r.prm.d << ',' << r.prm.e << ','
       << r.prm.lambda << ',' << r.prm.n << ',' << r.num_weights << ','
       << r.dual.b2_brute << ',' << r.dual.b2_paper << ','
       << b(r.projective) << ',' << b(r.thm_nonprojective_ok) << ','
       << b(r.thm_not_two_weight_ok) << '\n';
    return os.str();
}

inline OrderedJson summary_json(const verify::ScanSummary& s) {
    OrderedJson j;
    j["tuples"] = s.tuples;
    j["theorem_conforming"] = s.theorem_conforming;
    j["b2_agreements"] = s.b2_agreements;
    j["discrepancy_count"] = s.discrepancy_count;
    j["records_written"] = s.records_written;
    return j;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

inline OrderedJson field_json(const gf::FieldTower& T, bool dump) {
    OrderedJson j;
    j["p"] = T.p;
    j["t"] = T.t;
    j["k"] = T.k;
    j["q"] = T.q;
    j["big_order"] = T.big_order;
    j["subfield_step"] = T.subfield_step;
    j["modulus"] = T.modulus;
    j["gamma_order"] = T.big_order;
    j["zech_checksum"] = hex64(T.zech_checksum());
    j["trace_q_checksum"] = hex64(T.trace_q_checksum());
    j["trace_p_checksum"] = hex64(T.trace_p_checksum());
    if (dump) {
        j["power_table"] = T.power_code;
        j["zech"] = T.zech;
        j["trace_q"] = T.trace_q_tbl;
        j["trace_p"] = T.trace_p_tbl;
    }
    return j;
}

inline OrderedJson moments_json(const weights::MomentReport& rep,
                                std::uint64_t b1, std::uint64_t b2) {
    OrderedJson j;
    j["v0_ok"] = rep.ok[0];
    j["v1_ok"] = rep.ok[1];
    j["v2_ok"] = rep.ok[2];
    j["residuals"] = {rational_string(rep.residual[0]),
                      rational_string(rep.residual[1]),
                      rational_string(rep.residual[2])};
    j["b1"] = b1;
    j["b2"] = b2;
    return j;
}

inline OrderedJson build_json(const codes::CheckPolyInfo& cp,
                              const gf::FieldTower& T, int dim_C, int dim_Cd,
                              int dim_CD) {
    OrderedJson j;
    OrderedJson coeffs = OrderedJson::array();
    for (const auto& c : cp.h.c) coeffs.push_back(T.encode_q(c));
    j["check_poly"] = coeffs;
    j["degree"] = cp.h.degree();
    j["degree_ok"] = cp.degree_ok;
    j["divides_xn_minus_1"] = cp.divides;
    j["coset_d"] = cp.coset_d;
    j["coset_D"] = cp.coset_D;
    j["dim_C"] = dim_C;
    j["dim_Cd"] = dim_Cd;
    j["dim_CD"] = dim_CD;
    return j;
}

}  // namespace twozero::report

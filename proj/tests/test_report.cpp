#include "twozero/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace twozero;
using report::OrderedJson;

namespace {

verify::ScanRecord record_for(std::int64_t p, std::int64_t t, std::int64_t k,
                              std::int64_t d, std::int64_t e,
                              std::int64_t lambda) {
    return verify::analyze_tuple(params::derive(p, t, k, d, e, lambda));
}

std::string scan_jsonl(std::int64_t max_q, std::uint64_t max_msgs,
                       std::int64_t max_n, int threads) {
    verify::ScanBudgets budgets;
    budgets.max_q = max_q;
    budgets.max_msgs = max_msgs;
    budgets.max_n = max_n;
    budgets.policy.threads = threads;
    std::string out;
    verify::scan(budgets, [&](const verify::ScanRecord& r) {
        out += report::jsonl_line(r);
    });
    return out;
}

}  // namespace

TEST_CASE("record serialization carries the fixed key set in order") {
    const auto rec = record_for(3, 1, 2, 1, 2, 1);
    const auto j = report::record_json(rec);

    const std::vector<std::string> expected_keys{
        "p", "t", "q", "k", "d", "e", "D", "lambda", "n", "f", "g", "mu",
        "dim_C", "coset_ok", "weights", "num_weights", "b1", "b2_brute",
        "b2_paper", "b2_corrected", "projective", "moments_ok", "scaling_ok",
        "paper_b2_agrees", "thm_nonprojective", "thm_not_two_weight",
        "wolfmann", "key_eq_residual_brute", "key_eq_residual_paper", "cost"};
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == expected_keys);

    CHECK(j["weights"] == OrderedJson::array({2, 4, 6, 8}));
    CHECK(j["b2_brute"] == 8);
    CHECK(j["b2_paper"] == 2);
    CHECK(j["wolfmann"] == "inapplicable");
    CHECK(j["key_eq_residual_brute"].is_null());
}

TEST_CASE("rationals serialize as a/b strings") {
    const auto rec = record_for(5, 1, 1, 1, 2, 1);
    const auto j = report::record_json(rec);
    CHECK(j["key_eq_residual_brute"] == "0/1");
    CHECK(j["key_eq_residual_paper"] == "2/1");
}

TEST_CASE("JSONL lines round-trip byte-identically") {
    for (const auto& rec :
         {record_for(3, 1, 2, 1, 2, 1), record_for(2, 2, 1, 1, 3, 1),
          record_for(5, 1, 1, 1, 2, 1)}) {
        const std::string line = report::jsonl_line(rec);
        const auto parsed = OrderedJson::parse(line);
        CHECK(parsed.dump() + "\n" == line);
    }
}

TEST_CASE("CSV summary has exactly the pinned columns") {
    CHECK(report::csv_header() ==
          "q,k,d,e,lambda,n,num_weights,b2_brute,b2_paper,projective,"
          "thm_nonprojective,thm_not_two_weight\n");
    const auto rec = record_for(2, 2, 1, 1, 3, 1);
    CHECK(report::csv_row(rec) == "4,1,1,3,1,3,2,0,0,true,false,false\n");
}

TEST_CASE("summary serialization") {
    verify::ScanSummary s;
    s.tuples = 3;
    s.theorem_conforming = 1;
    s.b2_agreements = 2;
    s.discrepancy_count = 2;
    s.records_written = 3;
    CHECK(report::summary_json(s).dump() ==
          "{\"tuples\":3,\"theorem_conforming\":1,\"b2_agreements\":2,"
          "\"discrepancy_count\":2,\"records_written\":3}");
}

TEST_CASE("scan output is byte-identical across runs and worker counts") {
    const auto a = scan_jsonl(5, 1 << 14, 200, 1);
    const auto b = scan_jsonl(5, 1 << 14, 200, 1);
    const auto c = scan_jsonl(5, 1 << 14, 200, 3);
    REQUIRE(!a.empty());
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("distribution and dual serializations") {
    const auto prm = params::derive(2, 2, 1, 1, 3, 1);
    const auto T = gf::FieldTower::build(2, 2, 1);
    const auto dist = weights::weight_distribution(
        codes::make_code_spec(codes::Role::C, prm, T));
    CHECK(report::distribution_json(dist).dump() ==
          "{\"n\":3,\"q\":4,\"dim\":2,\"counts\":{\"0\":1,\"2\":9,\"3\":6}}");

    const auto dual = weights::dual_low_weight(
        codes::make_code_spec(codes::Role::Cd, prm, T), prm);
    CHECK(report::dual_json(dual).dump() ==
          "{\"b1\":0,\"b2_brute\":9,\"b2_paper\":6,\"b2_corrected\":9,"
          "\"paper_applicable\":true}");
}

TEST_CASE("sw serialization") {
    const auto a = sw::analyze(5, 2, 1, std::make_tuple(1, 5, 2));
    const auto j = report::sw_json(a);
    CHECK(j["theta"] == "2/1");
    CHECK(j["h"] == 4);
    CHECK(j["solutions"].dump() ==
          "[{\"m\":1,\"epsilon\":-1},{\"m\":4,\"epsilon\":1}]");
    CHECK(j["candidates"].dump() ==
          "[[\"2/1\",\"0/1\"],[\"0/1\",\"2/1\"]]");
}

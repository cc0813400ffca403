#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks of the installed binary; the harness passes its path
// through TWOZERO_BIN.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("TWOZERO_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("inspect prints the derived tuple") {
    const auto r = run("inspect --p 3 --t 1 --k 2 --d 1 --e 2 --lambda 1");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 8);
    CHECK(j["f"] == 2);
    CHECK(j["D"] == 4);
    CHECK(j["msg_space"] == 81);
}

TEST_CASE("field prints modulus and checksums") {
    const auto r = run("field --p 3 --t 1 --k 2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["modulus"] == nlohmann::json::array({2, 1, 1}));
    CHECK(j["gamma_order"] == 8);
    CHECK(j["zech_checksum"].is_string());
}

TEST_CASE("dual matches the worked q=5 values") {
    const auto r = run("dual --p 5 --t 1 --k 1 --d 1 --e 2 --lambda 1 --role C");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["b1"] == 0);
    CHECK(j["b2_brute"] == 8);
    CHECK(j["b2_paper"] == 4);
    CHECK(j["b2_corrected"] == 8);
}

TEST_CASE("weights over the prime field") {
    const auto r = run(
        "weights --p 2 --t 2 --k 1 --d 1 --e 3 --lambda 1 --role BarCd");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["q"] == 2);
    CHECK(j["counts"]["2"] == 3);
}

TEST_CASE("moments succeeds with brute-force counts") {
    const auto r =
        run("moments --p 3 --t 1 --k 2 --d 1 --e 2 --lambda 1 --role C");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["v0_ok"] == true);
    CHECK(j["v1_ok"] == true);
    CHECK(j["v2_ok"] == true);
    CHECK(j["b2"] == 8);
}

TEST_CASE("sw emits theta, solutions and candidates") {
    const auto r = run("sw --g 5 --p 2 --s 1");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["theta"] == "2/1");
    CHECK(j["solutions"].size() == 2);
    CHECK(j["candidates"].empty());
}

TEST_CASE("scan writes JSONL and CSV deterministically") {
    const std::string out1 = "/tmp/twozero_scan1.jsonl";
    const std::string out2 = "/tmp/twozero_scan2.jsonl";
    const std::string csv = "/tmp/twozero_scan.csv";
    const std::string flags =
        "scan --max-q 5 --max-msgs 16384 --max-n 200 ";
    const auto r1 = run(flags + "--out " + out1 + " --csv " + csv);
    REQUIRE(r1.exit_code == 0);
    const auto summary = nlohmann::json::parse(r1.out);
    CHECK(summary["tuples"] == summary["records_written"]);
    CHECK(summary["tuples"].get<int>() > 3);

    const auto r2 = run(flags + "--out " + out2 + " --threads 2");
    REQUIRE(r2.exit_code == 0);
    const auto bytes1 = slurp(out1);
    CHECK(!bytes1.empty());
    CHECK(bytes1 == slurp(out2));

    std::istringstream lines(bytes1);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("wolfmann"));
        ++count;
    }
    CHECK(count == summary["tuples"].get<std::size_t>());

    const auto csv_bytes = slurp(csv);
    CHECK(csv_bytes.rfind("q,k,d,e,lambda,n,", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run("inspect --p 3 --t 1 --k 2 --d 1 --e 1 --lambda 1").exit_code ==
          2);  // constraint violation
    CHECK(run("inspect --p 3 --bogus-flag 1").exit_code == 2);
    CHECK(run("weights --p 3 --t 1 --k 2 --d 1 --e 2 --lambda 1 --role C "
              "--budget 10")
              .exit_code == 1);  // budget exceeded
    CHECK(run("scan --max-q 3 --out /nonexistent-dir/x.jsonl").exit_code ==
          3);  // I/O failure
}

#include "twozero/twozero.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace twozero;

struct TupleArgs {
    std::int64_t p = 0, t = 1, k = 1, d = 1, e = 2, lambda = 1;
};

void add_tuple_options(CLI::App* cmd, TupleArgs& a) {
    cmd->add_option("--p", a.p, "characteristic (prime)")->required();
    cmd->add_option("--t", a.t, "q = p^t");
    cmd->add_option("--k", a.k, "extension degree over F_q");
    cmd->add_option("--d", a.d, "first zero exponent d");
    cmd->add_option("--e", a.e, "index e with D = (q^k-1)/e");
    cmd->add_option("--lambda", a.lambda, "length multiplier lambda");
}

void add_policy_options(CLI::App* cmd, weights::ExecPolicy& pol) {
    cmd->add_option("--budget", pol.budget,
                    "coordinate-evaluation cap per distribution");
    cmd->add_option("--threads", pol.threads, "worker threads (0 = auto)");
    cmd->add_flag("--force", pol.force, "bypass the budget check");
    cmd->add_option("--cap", pol.field_cap, "field size cap (elements)");
}

void emit(const report::OrderedJson& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification workbench for cyclic codes whose check "
                 "polynomial has two zeros"};
    app.require_subcommand(1);
    std::function<int()> action;

    // field ------------------------------------------------------------
    auto* cmd_field = app.add_subcommand(
        "field", "build a field tower and print modulus and checksums");
    TupleArgs fa;
    bool dump = false;
    std::uint64_t field_cap = gf::FieldTower::kDefaultCap;
    cmd_field->add_option("--p", fa.p)->required();
    cmd_field->add_option("--t", fa.t);
    cmd_field->add_option("--k", fa.k);
    cmd_field->add_option("--cap", field_cap);
    cmd_field->add_flag("--dump", dump, "include full tables");
    cmd_field->callback([&] {
        action = [&]() {
            const auto T = gf::FieldTower::build(fa.p, fa.t, fa.k, field_cap);
            emit(report::field_json(T, dump));
            return 0;
        };
    });

    // inspect ------------------------------------------------------------
    auto* cmd_inspect =
        app.add_subcommand("inspect", "derive and print one parameter tuple");
    TupleArgs ia;
    add_tuple_options(cmd_inspect, ia);
    cmd_inspect->callback([&] {
        action = [&]() {
            emit(report::params_json(
                params::derive(ia.p, ia.t, ia.k, ia.d, ia.e, ia.lambda)));
            return 0;
        };
    });

    // build ------------------------------------------------------------
    auto* cmd_build = app.add_subcommand(
        "build", "check polynomial, cosets and dimensions for a tuple");
    TupleArgs ba;
    weights::ExecPolicy bpol;
    add_tuple_options(cmd_build, ba);
    add_policy_options(cmd_build, bpol);
    cmd_build->callback([&] {
        action = [&]() {
            const auto prm =
                params::derive(ba.p, ba.t, ba.k, ba.d, ba.e, ba.lambda);
            const auto T =
                gf::FieldTower::build(prm.p, prm.t, prm.k, bpol.field_cap);
            const auto cp = codes::check_poly(prm, T);
            const int dim_C = codes::generator_rank(
                codes::make_code_spec(codes::Role::C, prm, T));
            const int dim_Cd = codes::generator_rank(
                codes::make_code_spec(codes::Role::Cd, prm, T));
            const int dim_CD = codes::generator_rank(
                codes::make_code_spec(codes::Role::CD, prm, T));
            emit(report::build_json(cp, T, dim_C, dim_Cd, dim_CD));
            return 0;
        };
    });

    // weights ------------------------------------------------------------
    auto* cmd_weights = app.add_subcommand(
        "weights", "exact weight distribution of one family member");
    TupleArgs wa;
    std::string wrole = "C";
    weights::ExecPolicy wpol;
    add_tuple_options(cmd_weights, wa);
    add_policy_options(cmd_weights, wpol);
    cmd_weights->add_option("--role", wrole,
                            "C|Cd|CD|CdPrime|CdDoublePrime|BarCd");
    cmd_weights->callback([&] {
        action = [&]() {
            const auto role = codes::role_from_string(wrole);
            if (!role) throw ConstraintViolated("unknown role " + wrole);
            const auto prm =
                params::derive(wa.p, wa.t, wa.k, wa.d, wa.e, wa.lambda);
            const auto T =
                gf::FieldTower::build(prm.p, prm.t, prm.k, wpol.field_cap);
            const auto dist = weights::weight_distribution(
                codes::make_code_spec(*role, prm, T), wpol);
            emit(report::distribution_json(dist));
            return 0;
        };
    });

    // dual ------------------------------------------------------------
    auto* cmd_dual = app.add_subcommand(
        "dual", "low-weight dual counts (brute, closed form, corrected)");
    TupleArgs da;
    std::string drole = "C";
    weights::ExecPolicy dpol;
    add_tuple_options(cmd_dual, da);
    add_policy_options(cmd_dual, dpol);
    cmd_dual->add_option("--role", drole, "C|Cd");
    cmd_dual->callback([&] {
        action = [&]() {
            const auto role = codes::role_from_string(drole);
            if (!role ||
                (*role != codes::Role::C && *role != codes::Role::Cd))
                throw ConstraintViolated("dual role must be C or Cd");
            const auto prm =
                params::derive(da.p, da.t, da.k, da.d, da.e, da.lambda);
            const auto T =
                gf::FieldTower::build(prm.p, prm.t, prm.k, dpol.field_cap);
            emit(report::dual_json(weights::dual_low_weight(
                codes::make_code_spec(*role, prm, T), prm)));
            return 0;
        };
    });

    // moments ------------------------------------------------------------
    auto* cmd_moments = app.add_subcommand(
        "moments", "power-moment identities with brute-force dual counts");
    TupleArgs ma;
    std::string mrole = "C";
    weights::ExecPolicy mpol;
    add_tuple_options(cmd_moments, ma);
    add_policy_options(cmd_moments, mpol);
    cmd_moments->add_option("--role", mrole, "C|Cd");
    cmd_moments->callback([&] {
        action = [&]() {
            const auto role = codes::role_from_string(mrole);
            if (!role ||
                (*role != codes::Role::C && *role != codes::Role::Cd))
                throw ConstraintViolated("moments role must be C or Cd");
            const auto prm =
                params::derive(ma.p, ma.t, ma.k, ma.d, ma.e, ma.lambda);
            const auto T =
                gf::FieldTower::build(prm.p, prm.t, prm.k, mpol.field_cap);
            const auto spec = codes::make_code_spec(*role, prm, T);
            const auto dist = weights::weight_distribution(spec, mpol);
            const auto dual = weights::dual_low_weight(spec, prm);
            const auto rep = weights::power_moment_check(
                dist, BigInt(dual.b1), BigInt(dual.b2_brute));
            emit(report::moments_json(rep, dual.b1, dual.b2_brute));
            return rep.all_ok() ? 0 : 1;
        };
    });

    // sw ------------------------------------------------------------
    auto* cmd_sw = app.add_subcommand(
        "sw", "digit-sum conditions for two-weight irreducible codes");
    std::int64_t sg = 0, sp = 0, ss = 1, sl = 0, sd = 0, sq = 0;
    cmd_sw->add_option("--g", sg)->required();
    cmd_sw->add_option("--p", sp)->required();
    cmd_sw->add_option("--s", ss)->required();
    cmd_sw->add_option("--lambda", sl, "scaling context");
    cmd_sw->add_option("--d", sd, "scaling context");
    cmd_sw->add_option("--q", sq, "scaling context");
    cmd_sw->callback([&] {
        action = [&]() {
            std::optional<std::tuple<std::int64_t, std::int64_t,
                                     std::int64_t>>
                ctx;
            if (sl > 0 || sd > 0 || sq > 0) {
                if (sl <= 0 || sd <= 0 || sq <= 0)
                    throw ConstraintViolated(
                        "scaling context needs --lambda --d --q");
                ctx = std::make_tuple(sl, sd, sq);
            }
            emit(report::sw_json(sw::analyze(sg, sp, ss, ctx)));
            return 0;
        };
    });

    // scan ------------------------------------------------------------
    auto* cmd_scan = app.add_subcommand(
        "scan", "sweep the admissible parameter space and write JSONL");
    verify::ScanBudgets budgets;
    std::string out_path, csv_path;
    cmd_scan->add_option("--max-q", budgets.max_q)->required();
    cmd_scan->add_option("--max-msgs", budgets.max_msgs,
                         "message-space bound q^{2k} (default 2^24)");
    cmd_scan->add_option("--max-n", budgets.max_n,
                         "length bound (default 768)");
    cmd_scan->add_option("--out", out_path, "JSONL output file")->required();
    cmd_scan->add_option("--csv", csv_path, "CSV summary file");
    add_policy_options(cmd_scan, budgets.policy);
    cmd_scan->callback([&] {
        action = [&]() {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw IoError("cannot open " + out_path);
            std::ofstream csv;
            if (!csv_path.empty()) {
                csv.open(csv_path, std::ios::binary);
                if (!csv) throw IoError("cannot open " + csv_path);
                csv << report::csv_header();
            }
            const auto summary = verify::scan(
                budgets, [&](const verify::ScanRecord& rec) {
                    out << report::jsonl_line(rec);
                    if (!out) throw IoError("write failed: " + out_path);
                    if (csv.is_open()) {
                        csv << report::csv_row(rec);
                        if (!csv) throw IoError("write failed: " + csv_path);
                    }
                });
            emit(report::summary_json(summary));
            return summary.sink_errors == 0 ? 0 : 3;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << " (use --force to override)\n";
        return 1;
    } catch (const ConstraintViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

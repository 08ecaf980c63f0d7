#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

using orbifold::cli::Format;
using orbifold::cli::GlobalOptions;

int main(int argc, char** argv) {
    CLI::App app{"Exact tables and exhaustive verification for the orbifold Chow ring of a "
                 "weighted projective space and its root-of-unity group-algebra model"};
    app.require_subcommand(1);

    std::string format = "text";
    GlobalOptions opts;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");

    std::vector<std::int64_t> weights;
    int rc = orbifold::cli::kExitOk;

    // Callbacks run while parse() is still on the stack, so the format
    // string has to be resolved inside them.
    auto resolve_format = [&] {
        if (format == "csv") opts.format = Format::kCsv;
        else if (format == "json") opts.format = Format::kJson;
        else opts.format = Format::kText;
    };

    auto* info = app.add_subcommand("info", "Weight vector summary, basis and degrees");
    info->fallthrough();
    info->add_option("weights", weights, "Positive weights w0 w1 ...")->required();
    info->callback([&] {
        resolve_format();
        rc = orbifold::cli::cmd_info(weights, opts);
    });

    auto* table = app.add_subcommand("table", "Emit a degree, multiplication, pairing or xi table");
    table->fallthrough();
    std::string table_kind;
    std::string ring = "model";
    table->add_option("kind", table_kind, "One of deg|mult|pairing|xi")
        ->required()
        ->check(CLI::IsMember({"deg", "mult", "pairing", "xi"}));
    table->add_option("--ring", ring, "Which ring to tabulate (deg|mult|pairing)")
        ->check(CLI::IsMember({"chow", "model"}));
    table->add_option("weights", weights, "Positive weights w0 w1 ...")->required();
    table->callback([&] {
        resolve_format();
        rc = orbifold::cli::cmd_table(table_kind, ring, weights, opts);
    });

    auto* poincare = app.add_subcommand("poincare", "Degree multiplicities of the model grading");
    poincare->fallthrough();
    poincare->add_option("weights", weights, "Positive weights w0 w1 ...")->required();
    poincare->callback([&] {
        resolve_format();
        rc = orbifold::cli::cmd_poincare(weights, opts);
    });

    auto* verify = app.add_subcommand(
        "verify", "Exhaustively check every identity for one weight vector");
    verify->fallthrough();
    std::int64_t max_total = -1;
    verify->add_option("--max-total", max_total,
                       "Cap on |w| (default: ORBIFOLD_RING_MAX_TOTAL or 256)");
    verify->add_option("weights", weights, "Positive weights w0 w1 ...");

    auto* sweep = verify->add_subcommand(
        "sweep", "Verify every weight vector with n <= max-n and entries <= max-weight");
    sweep->fallthrough();
    int max_n = -1;
    std::int64_t max_weight = 0;
    sweep->add_option("--max-n", max_n, "Largest index n (vectors have up to n+1 entries)")
        ->required();
    sweep->add_option("--max-weight", max_weight, "Largest individual weight")->required();

    verify->callback([&] {
        resolve_format();
        std::int64_t cap = orbifold::cli::resolve_max_total(max_total);
        if (cap < 0) {
            rc = orbifold::cli::kExitUsage;
            return;
        }
        if (sweep->parsed()) {
            if (!weights.empty()) {
                std::cerr << "error: verify sweep takes no weight arguments\n";
                rc = orbifold::cli::kExitUsage;
                return;
            }
            rc = orbifold::cli::cmd_verify_sweep(max_n, max_weight, cap, opts);
            return;
        }
        if (weights.empty()) {
            std::cerr << "error: verify needs a weight vector (or the sweep subcommand)\n";
            rc = orbifold::cli::kExitUsage;
            return;
        }
        rc = orbifold::cli::cmd_verify(weights, cap, opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? orbifold::cli::kExitOk : orbifold::cli::kExitUsage;
    }

    return rc;
}

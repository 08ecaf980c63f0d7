#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "orbifold/verification.hpp"

namespace orbifold::cli {

namespace {

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int emit(const Json& doc, const GlobalOptions& opts) {
    std::string rendered = render(doc, opts.format);
    if (opts.out_path.empty()) {
        std::cout << rendered;
        return kExitOk;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) return fail_usage("cannot open output file " + opts.out_path);
    out << rendered;
    return kExitOk;
}

VerificationReport run_verification(const Weights& w) {
    RingBundle bundle = RingBundle::make(w);
#ifdef ORBIFOLD_RING_FAULT_INJECTION
    // Fault-injection build: flip one structure constant so verification
    // must fail; exercises the failure exit path end to end.
    bundle.chow_table.product_at(bundle.chow_table.unit, bundle.chow_table.unit) =
        FrobeniusTable::kZero;
#endif
    return verify_bundle(bundle);
}

} // namespace

std::int64_t resolve_max_total(std::int64_t cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("ORBIFOLD_RING_MAX_TOTAL")) {
        char* end = nullptr;
        long long parsed = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || parsed <= 0) {
            std::cerr << "error: ORBIFOLD_RING_MAX_TOTAL must be a positive integer, got \""
                      << env << "\"\n";
            return -1;
        }
        return parsed;
    }
    return 256;
}

int cmd_info(const std::vector<std::int64_t>& weights, const GlobalOptions& opts) {
    try {
        ChowRing ring(Weights::make(weights));
        return emit(info_document(ring), opts);
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}

int cmd_table(const std::string& kind, const std::string& ring_name,
              const std::vector<std::int64_t>& weights, const GlobalOptions& opts) {
    try {
        Weights w = Weights::make(weights);
        if (kind == "xi") return emit(xi_table_document(XiMap(w)), opts);
        FrobeniusTable table = ring_name == "chow" ? structure_table(ChowRing(w))
                                                   : structure_table(ModelRing(w));
        if (kind == "deg") return emit(deg_table_document(table), opts);
        if (kind == "mult") return emit(mult_table_document(table), opts);
        return emit(pairing_document(table), opts);
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}

int cmd_poincare(const std::vector<std::int64_t>& weights, const GlobalOptions& opts) {
    try {
        ModelRing ring(Weights::make(weights));
        return emit(poincare_document(ring), opts);
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}

int cmd_verify(const std::vector<std::int64_t>& weights, std::int64_t max_total,
               const GlobalOptions& opts) {
    try {
        Weights w = Weights::make(weights);
        if (w.total() > max_total)
            return fail_usage("|w| = " + std::to_string(w.total()) +
                              " exceeds the verification cap " + std::to_string(max_total));
        VerificationReport report = run_verification(w);
        int rc = emit(report_document(w, report), opts);
        if (rc != kExitOk) return rc;
        return report.passed() ? kExitOk : kExitVerifyFailed;
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}

int cmd_verify_sweep(int max_n, std::int64_t max_weight, std::int64_t max_total,
                     const GlobalOptions& opts) {
    try {
        if (max_n < 0) return fail_usage("--max-n must be >= 0");
        if (max_weight < 1) return fail_usage("--max-weight must be >= 1");
        std::int64_t worst = (static_cast<std::int64_t>(max_n) + 1) * max_weight;
        if (worst > max_total)
            return fail_usage("sweep bound |w| <= " + std::to_string(worst) +
                              " exceeds the verification cap " + std::to_string(max_total));

        std::vector<SweepRow> rows;
        std::vector<std::int64_t> current;
        auto enumerate = [&](auto&& self, int length) -> void {
            if (static_cast<int>(current.size()) == length) {
                Weights w = Weights::make(current);
                VerificationReport report = run_verification(w);
                rows.push_back(SweepRow{current, report.records().size(),
                                        report.total_inputs(), report.passed()});
                return;
            }
            for (std::int64_t v = 1; v <= max_weight; ++v) {
                current.push_back(v);
                self(self, length);
                current.pop_back();
            }
        };
        for (int length = 1; length <= max_n + 1; ++length) enumerate(enumerate, length);

        bool all_passed =
            std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed; });
        int rc = emit(sweep_document(max_n, max_weight, rows), opts);
        if (rc != kExitOk) return rc;
        return all_passed ? kExitOk : kExitVerifyFailed;
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
}

} // namespace orbifold::cli

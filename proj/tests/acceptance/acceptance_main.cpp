// Acceptance suite: exercises the published identities and interfaces end to
// end in exact arithmetic and prints one pass/fail line per criterion.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../support/run_cli.hpp"
#include "orbifold/isomorphism.hpp"
#include "orbifold/structure_table.hpp"
#include "orbifold/verification.hpp"

using namespace orbifold;

namespace {

const std::string kCli = ORBIFOLD_RING_CLI_PATH;
const std::string kFaultyCli = ORBIFOLD_RING_FAULTY_CLI_PATH;
const std::string kGoldenDir = ORBIFOLD_RING_GOLDEN_DIR;

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string detail) { return Outcome{false, std::move(detail)}; }

UnityRational u(std::int64_t p, std::int64_t q) { return UnityRational::fraction(p, q); }

Outcome check_enumeration() {
    SectorEnumeration s(Weights::of({1, 2, 3}));
    std::vector<UnityRational> expected{UnityRational(), UnityRational(), UnityRational(),
                                        u(1, 3), u(1, 2), u(2, 3)};
    if (s.size() != 6) return fail("enumeration has size " + std::to_string(s.size()));
    for (int k = 0; k < 6; ++k) {
        if (s.arg(k) != expected[static_cast<std::size_t>(k)])
            return fail("gamma_s(" + std::to_string(k) + ") = " + s.arg(k).arg().str());
    }
    return {};
}

Outcome check_degree_table() {
    ModelRing ring(Weights::of({1, 2, 3}));
    std::vector<Rational> expected{0, 1, 2, 1, 1, 1};
    for (std::int64_t j = 0; j < 6; ++j) {
        if (ring.degree(j) != expected[static_cast<std::size_t>(j)])
            return fail("deg(xi^" + std::to_string(j) + ") = " + ring.degree(j).str());
    }
    return {};
}

Outcome check_multiplication_table() {
    ModelRing ring(Weights::of({1, 2, 3}));
    constexpr std::int64_t Z = -1;
    std::vector<std::vector<std::int64_t>> expected{
        {0, 1, 2, 3, 4, 5}, {1, 2, Z, Z, Z, Z}, {2, Z, Z, Z, Z, Z},
        {3, Z, Z, Z, Z, 2}, {4, Z, Z, Z, 2, Z}, {5, Z, Z, 2, Z, Z},
    };
    for (std::int64_t j = 0; j < 6; ++j) {
        for (std::int64_t k = 0; k < 6; ++k) {
            ModelElement p = ring.cup(j, k);
            std::int64_t got = p.is_zero() ? Z : p.terms().begin()->first;
            if (!p.is_zero() &&
                (p.terms().size() != 1 || p.terms().begin()->second != Rational(1)))
                return fail("product of xi^" + std::to_string(j) + ", xi^" + std::to_string(k) +
                            " is not a lone basis element");
            if (got != expected[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
                return fail("xi^" + std::to_string(j) + " cup xi^" + std::to_string(k) +
                            " has exponent " + std::to_string(got));
        }
    }
    return {};
}

Outcome check_pairing_matrix() {
    ModelRing ring(Weights::of({1, 2, 3}));
    for (std::int64_t j = 0; j < 6; ++j) {
        for (std::int64_t k = 0; k < 6; ++k) {
            bool hit = (j < 3 && k < 3 && j + k == 2) || (j >= 3 && k >= 3 && j + k == 8);
            Rational expected = hit ? Rational(1, 6) : Rational(0);
            if (ring.pairing(j, k) != expected)
                return fail("<xi^" + std::to_string(j) + ", xi^" + std::to_string(k) + "> = " +
                            ring.pairing(j, k).str() + ", expected " + expected.str());
        }
    }
    return {};
}

Outcome check_xi_assignments() {
    XiMap xi(Weights::of({1, 2, 3}));
    std::vector<std::pair<ChowBasisIndex, std::int64_t>> expected{
        {ChowBasisIndex{u(0, 1), 0}, 0}, {ChowBasisIndex{u(0, 1), 1}, 1},
        {ChowBasisIndex{u(0, 1), 2}, 2}, {ChowBasisIndex{u(1, 3), 0}, 5},
        {ChowBasisIndex{u(1, 2), 0}, 4}, {ChowBasisIndex{u(2, 3), 0}, 3},
    };
    for (const auto& [b, j] : expected) {
        if (xi.image_exponent(b) != j)
            return fail(b.label() + " maps to xi^" + std::to_string(xi.image_exponent(b)) +
                        ", expected xi^" + std::to_string(j));
    }
    return {};
}

Outcome check_truncation_rings() {
    for (int m = 1; m <= 8; ++m) {
        ModelRing ring(Weights::make(std::vector<std::int64_t>(static_cast<std::size_t>(m), 1)));
        for (std::int64_t j = 0; j < m; ++j) {
            if (ring.degree(j) != Rational(j))
                return fail("m=" + std::to_string(m) + ": deg(xi^" + std::to_string(j) + ") = " +
                            ring.degree(j).str());
            for (std::int64_t k = 0; k < m; ++k) {
                ModelElement p = ring.cup(j, k);
                bool expect_live = j + k <= m - 1;
                if (expect_live && p != ModelElement::basis(j + k))
                    return fail("m=" + std::to_string(m) + ": xi^" + std::to_string(j) +
                                " cup xi^" + std::to_string(k) + " should be xi^" +
                                std::to_string(j + k));
                if (!expect_live && !p.is_zero())
                    return fail("m=" + std::to_string(m) + ": xi^" + std::to_string(j) +
                                " cup xi^" + std::to_string(k) + " should vanish");
            }
        }
    }
    return {};
}

std::vector<Weights> sweep_vectors() {
    std::vector<Weights> out;
    std::vector<std::int64_t> current;
    auto enumerate = [&](auto&& self, int length) -> void {
        if (static_cast<int>(current.size()) == length) {
            out.push_back(Weights::make(current));
            return;
        }
        for (std::int64_t v = 1; v <= 6; ++v) {
            current.push_back(v);
            self(self, length);
            current.pop_back();
        }
    };
    for (int length = 1; length <= 4; ++length) enumerate(enumerate, length);
    out.push_back(Weights::of({1, 2, 2, 3, 3, 3}));
    out.push_back(Weights::of({7, 5}));
    out.push_back(Weights::of({4, 6}));
    return out;
}

Outcome check_sweep() {
    for (const Weights& w : sweep_vectors()) {
        if (ChowRing(w).dim() != static_cast<std::size_t>(w.total()))
            return fail("w=" + w.str() + ": basis count != |w|");
        VerificationReport report = verify_all(w);
        if (!report.passed()) {
            for (const CheckRecord& r : report.records()) {
                if (!r.passed)
                    return fail("w=" + w.str() + ": " + r.name + ": " + r.counterexample);
            }
        }
        for (const CheckRecord& r : report.records()) {
            if (!r.counterexample.empty())
                return fail("w=" + w.str() + ": stray counterexample in " + r.name);
        }
    }
    return {};
}

Outcome check_gorenstein_degrees() {
    for (const Weights& w : sweep_vectors()) {
        if (!is_gorenstein(w)) continue;
        ModelRing ring(w);
        for (std::int64_t j = 0; j < w.total(); ++j) {
            if (!ring.degree(j).is_integer())
                return fail("w=" + w.str() + ": deg(xi^" + std::to_string(j) + ") = " +
                            ring.degree(j).str() + " is not an integer");
        }
    }
    return {};
}

Outcome check_cli_contract() {
    // Text goldens, byte for byte.
    const std::vector<std::pair<std::string, std::string>> goldens{
        {"table deg --ring model 1 2 3", "deg_table_1_2_3.txt"},
        {"table mult --ring model 1 2 3", "mult_table_1_2_3.txt"},
        {"table pairing --ring model 1 2 3", "pairing_matrix_1_2_3.txt"},
    };
    for (const auto& [args, file] : goldens) {
        auto r = testsupport::run(kCli + " " + args);
        if (r.exit_code != 0) return fail(args + " exited " + std::to_string(r.exit_code));
        std::string expected = testsupport::slurp(kGoldenDir + "/" + file);
        if (expected.empty()) return fail("golden file " + file + " missing or empty");
        if (r.out != expected) return fail(args + " does not match " + file);
    }

    // JSON output re-parses and re-serializes to identical bytes.
    const std::vector<std::string> json_commands{
        "info 1 2 3",       "table deg 1 2 3",     "table mult --ring chow 1 2 3",
        "table pairing 1 2 3", "table xi 1 2 3",   "poincare 1 2 3",
        "verify 1 2 3",     "verify sweep --max-n 0 --max-weight 2",
    };
    for (const std::string& args : json_commands) {
        auto r = testsupport::run(kCli + " --format json " + args);
        if (r.exit_code != 0)
            return fail("--format json " + args + " exited " + std::to_string(r.exit_code));
        auto doc = nlohmann::ordered_json::parse(r.out, nullptr, false);
        if (doc.is_discarded()) return fail(args + ": output is not valid JSON");
        if (r.out != doc.dump(2) + "\n") return fail(args + ": JSON round trip is not byte-stable");
    }

    // Exit codes: 0 verified, 1 verification failure, 2 invalid input.
    if (testsupport::run(kCli + " verify 1 2 3").exit_code != 0)
        return fail("verify 1 2 3 should exit 0");
    auto faulty = testsupport::run(kFaultyCli + " verify 1 2 3");
    if (faulty.exit_code != 1)
        return fail("corrupted build exits " + std::to_string(faulty.exit_code) + ", expected 1");
    if (faulty.out.find("overall  fail") == std::string::npos)
        return fail("corrupted build does not report failure");
    if (testsupport::run(kCli + " info 0 2").exit_code != 2)
        return fail("info 0 2 should exit 2");
    return {};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"sector enumeration for w=(1,2,3)", check_enumeration},
        {"model degree table for w=(1,2,3)", check_degree_table},
        {"model multiplication table for w=(1,2,3)", check_multiplication_table},
        {"model pairing matrix for w=(1,2,3)", check_pairing_matrix},
        {"basis assignments of the isomorphism for w=(1,2,3)", check_xi_assignments},
        {"all-ones weights give truncated polynomial rings (m=1..8)", check_truncation_rings},
        {"exhaustive identity sweep over small weight vectors", check_sweep},
        {"integer degrees on Gorenstein weight vectors", check_gorenstein_degrees},
        {"CLI golden files, JSON stability and exit codes", check_cli_contract},
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        all_ok = all_ok && outcome.ok;
        std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
                  << criteria[i].first;
        if (!outcome.ok) std::cout << " -- " << outcome.detail;
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}

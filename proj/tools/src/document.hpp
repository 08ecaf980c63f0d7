#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbifold/chow_ring.hpp"
#include "orbifold/isomorphism.hpp"
#include "orbifold/model_ring.hpp"
#include "orbifold/structure_table.hpp"
#include "orbifold/verification.hpp"
#include "orbifold/weights.hpp"

namespace orbifold::cli {

// Canonical document form: {"kind": ..., "weights": [...], "payload": {...}}
// with every rational serialized as a reduced "p/q" string. The JSON is the
// source of truth; the text and CSV renderers interpret it per kind.
using Json = nlohmann::ordered_json;

enum class Format { kText, kCsv, kJson };

Json info_document(const ChowRing& ring);
Json deg_table_document(const FrobeniusTable& table);
Json mult_table_document(const FrobeniusTable& table);
Json pairing_document(const FrobeniusTable& table);
Json xi_table_document(const XiMap& xi);
Json poincare_document(const ModelRing& ring);
Json report_document(const Weights& w, const VerificationReport& report);

struct SweepRow {
    std::vector<std::int64_t> weights;
    std::size_t checks = 0;
    std::int64_t inputs = 0;
    bool passed = true;
};

Json sweep_document(int max_n, std::int64_t max_weight, const std::vector<SweepRow>& rows);

std::string render(const Json& doc, Format format);

} // namespace orbifold::cli

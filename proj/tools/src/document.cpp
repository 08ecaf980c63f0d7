#include "document.hpp"

#include <algorithm>
#include <sstream>

namespace orbifold::cli {

namespace {

Json table_payload(std::string corner, std::vector<std::string> columns,
                   std::vector<std::string> rows, std::vector<std::vector<std::string>> cells) {
    Json t;
    t["corner"] = std::move(corner);
    t["columns"] = std::move(columns);
    t["rows"] = std::move(rows);
    t["cells"] = std::move(cells);
    return t;
}

Json document_shell(const std::string& kind, const std::vector<std::int64_t>& weights) {
    Json doc;
    doc["kind"] = kind;
    doc["weights"] = weights;
    doc["payload"] = Json::object();
    return doc;
}

std::vector<std::vector<std::string>> degree_cells(const FrobeniusTable& t) {
    std::vector<std::vector<std::string>> cells;
    cells.reserve(t.dim());
    for (const Rational& d : t.degrees) cells.push_back({d.str()});
    return cells;
}

std::string weights_str(const std::vector<std::int64_t>& weights) {
    std::string out = "(";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(weights[i]);
    }
    return out + ")";
}

// Left-aligned grid with a two-space gutter and no trailing whitespace.
std::vector<std::string> grid_lines(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::vector<std::string> lines;
    lines.reserve(rows.size());
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += std::string(widths[i - 1] - row[i - 1].size() + 2, ' ');
            line += row[i];
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

std::vector<std::vector<std::string>> table_rows(const Json& table) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{table["corner"].get<std::string>()};
    for (const auto& c : table["columns"]) header.push_back(c.get<std::string>());
    rows.push_back(std::move(header));
    const auto& labels = table["rows"];
    const auto& cells = table["cells"];
    for (std::size_t r = 0; r < labels.size(); ++r) {
        std::vector<std::string> row{labels[r].get<std::string>()};
        for (const auto& c : cells[r]) row.push_back(c.get<std::string>());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_lines(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += csv_escape(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string meta_value_str(const Json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string kind_line(const Json& doc) {
    std::string line = doc["kind"].get<std::string>();
    const auto& payload = doc["payload"];
    if (payload.contains("mode") && payload["mode"] == "sweep") {
        line += "  sweep  max-n=" + payload["max_n"].dump() +
                "  max-weight=" + payload["max_weight"].dump();
        return line;
    }
    const auto& w = doc["weights"];
    if (!w.empty()) line += "  w=" + weights_str(w.get<std::vector<std::int64_t>>());
    if (payload.contains("ring"))
        line += "  ring=" + payload["ring"].get<std::string>();
    return line;
}

std::string render_text(const Json& doc) {
    const std::string kind = doc["kind"].get<std::string>();
    const auto& payload = doc["payload"];
    std::string out = kind_line(doc) + "\n";

    if (kind == "info") {
        std::vector<std::vector<std::string>> meta{
            {"n", payload["n"].dump()},
            {"|w|", payload["total"].dump()},
            {"<w>", payload["product"].dump()},
            {"gorenstein", meta_value_str(payload["gorenstein"])},
        };
        out += "\n";
        for (const auto& line : grid_lines(meta)) out += line + "\n";
        out += "\n";
        for (const auto& line : grid_lines(table_rows(payload["table"]))) out += line + "\n";
        return out;
    }
    if (kind == "verify-report") {
        bool sweep = payload.contains("mode") && payload["mode"] == "sweep";
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> extras; // per data row; empty when nothing to append
        if (sweep) {
            rows.push_back({"w", "checks", "inputs", "status"});
            for (const auto& v : payload["vectors"]) {
                rows.push_back({weights_str(v["weights"].get<std::vector<std::int64_t>>()),
                                v["checks"].dump(), v["inputs"].dump(),
                                v["status"].get<std::string>()});
                extras.push_back("");
            }
        } else {
            rows.push_back({"check", "inputs", "status"});
            for (const auto& c : payload["checks"]) {
                rows.push_back({c["name"].get<std::string>(), c["inputs"].dump(),
                                c["status"].get<std::string>()});
                extras.push_back(c["counterexample"].is_null()
                                     ? ""
                                     : c["counterexample"].get<std::string>());
            }
        }
        out += "\n";
        auto lines = grid_lines(rows);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            out += lines[i] + "\n";
            if (i > 0 && !extras[i - 1].empty())
                out += "  counterexample: " + extras[i - 1] + "\n";
        }
        out += "\noverall  " + payload["overall"].get<std::string>() + "\n";
        return out;
    }
    out += "\n";
    for (const auto& line : grid_lines(table_rows(payload["table"]))) out += line + "\n";
    return out;
}

std::string render_csv(const Json& doc) {
    const std::string kind = doc["kind"].get<std::string>();
    const auto& payload = doc["payload"];
    if (kind == "verify-report") {
        std::vector<std::vector<std::string>> rows;
        if (payload.contains("mode") && payload["mode"] == "sweep") {
            rows.push_back({"w", "checks", "inputs", "status"});
            for (const auto& v : payload["vectors"])
                rows.push_back({weights_str(v["weights"].get<std::vector<std::int64_t>>()),
                                v["checks"].dump(), v["inputs"].dump(),
                                v["status"].get<std::string>()});
        } else {
            rows.push_back({"check", "inputs", "status", "counterexample"});
            for (const auto& c : payload["checks"])
                rows.push_back({c["name"].get<std::string>(), c["inputs"].dump(),
                                c["status"].get<std::string>(),
                                c["counterexample"].is_null()
                                    ? ""
                                    : c["counterexample"].get<std::string>()});
        }
        return csv_lines(rows);
    }
    return csv_lines(table_rows(payload["table"]));
}

} // namespace

Json info_document(const ChowRing& ring) {
    const Weights& w = ring.weights();
    Json doc = document_shell("info", w.entries());
    Json& payload = doc["payload"];
    payload["n"] = w.n();
    payload["total"] = w.total();
    payload["product"] = w.product();
    payload["gorenstein"] = is_gorenstein(w);
    std::vector<std::string> rows;
    std::vector<std::vector<std::string>> cells;
    for (const ChowBasisIndex& b : ring.basis()) {
        rows.push_back(b.label());
        cells.push_back({ring.degree(b).str()});
    }
    payload["table"] = table_payload("basis", {"deg"}, std::move(rows), std::move(cells));
    return doc;
}

Json deg_table_document(const FrobeniusTable& table) {
    Json doc = document_shell("deg-table", table.weights);
    doc["payload"]["ring"] = table.ring;
    doc["payload"]["table"] =
        table_payload("basis", {"deg"}, table.labels, degree_cells(table));
    return doc;
}

Json mult_table_document(const FrobeniusTable& table) {
    Json doc = document_shell("mult-table", table.weights);
    doc["payload"]["ring"] = table.ring;
    std::vector<std::vector<std::string>> cells(table.dim());
    for (std::size_t i = 0; i < table.dim(); ++i) {
        cells[i].reserve(table.dim());
        for (std::size_t j = 0; j < table.dim(); ++j) {
            std::size_t p = table.product_at(i, j);
            cells[i].push_back(p == FrobeniusTable::kZero ? "0" : table.labels[p]);
        }
    }
    doc["payload"]["table"] =
        table_payload("cup", table.labels, table.labels, std::move(cells));
    return doc;
}

Json pairing_document(const FrobeniusTable& table) {
    Json doc = document_shell("pairing-matrix", table.weights);
    doc["payload"]["ring"] = table.ring;
    std::vector<std::vector<std::string>> cells(table.dim());
    for (std::size_t i = 0; i < table.dim(); ++i) {
        cells[i].reserve(table.dim());
        for (std::size_t j = 0; j < table.dim(); ++j)
            cells[i].push_back(table.gram_at(i, j).str());
    }
    doc["payload"]["table"] =
        table_payload("pair", table.labels, table.labels, std::move(cells));
    return doc;
}

Json xi_table_document(const XiMap& xi) {
    Json doc = document_shell("xi-table", xi.chow().weights().entries());
    std::vector<std::string> rows;
    std::vector<std::vector<std::string>> cells;
    const auto& basis = xi.chow().basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        rows.push_back(basis[i].label());
        cells.push_back({ModelRing::label(xi.exponents()[i])});
    }
    doc["payload"]["table"] = table_payload("eta", {"xi"}, std::move(rows), std::move(cells));
    return doc;
}

Json poincare_document(const ModelRing& ring) {
    Json doc = document_shell("poincare", ring.weights().entries());
    std::vector<std::string> rows;
    std::vector<std::vector<std::string>> cells;
    for (const auto& [deg, mult] : ring.poincare_polynomial()) {
        rows.push_back(deg.str());
        cells.push_back({std::to_string(mult)});
    }
    doc["payload"]["table"] = table_payload("deg", {"mult"}, std::move(rows), std::move(cells));
    return doc;
}

Json report_document(const Weights& w, const VerificationReport& report) {
    Json doc = document_shell("verify-report", w.entries());
    Json& payload = doc["payload"];
    payload["overall"] = report.passed() ? "pass" : "fail";
    Json checks = Json::array();
    for (const CheckRecord& r : report.records()) {
        Json c;
        c["name"] = r.name;
        c["inputs"] = r.inputs;
        c["status"] = r.passed ? "pass" : "fail";
        c["counterexample"] = r.passed ? Json() : Json(r.counterexample);
        checks.push_back(std::move(c));
    }
    payload["checks"] = std::move(checks);
    return doc;
}

Json sweep_document(int max_n, std::int64_t max_weight, const std::vector<SweepRow>& rows) {
    Json doc = document_shell("verify-report", {});
    Json& payload = doc["payload"];
    payload["mode"] = "sweep";
    payload["max_n"] = max_n;
    payload["max_weight"] = max_weight;
    bool all = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.passed; });
    payload["overall"] = all ? "pass" : "fail";
    Json vectors = Json::array();
    for (const SweepRow& r : rows) {
        Json v;
        v["weights"] = r.weights;
        v["checks"] = r.checks;
        v["inputs"] = r.inputs;
        v["status"] = r.passed ? "pass" : "fail";
        vectors.push_back(std::move(v));
    }
    payload["vectors"] = std::move(vectors);
    return doc;
}

std::string render(const Json& doc, Format format) {
    switch (format) {
    case Format::kText:
        return render_text(doc);
    case Format::kCsv:
        return render_csv(doc);
    case Format::kJson:
        return doc.dump(2) + "\n";
    }
    return {};
}

} // namespace orbifold::cli

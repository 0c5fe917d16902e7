#include "supertrees/report.hpp"

#include <fstream>
#include <iostream>

#include <json.hpp>

#include "supertrees/error.hpp"

namespace supertrees {

int verdict_exit_code(Verdict v) {
    switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 2;
    }
    return 2;
}

std::string verdict_label(Verdict v, bool scan) {
    switch (v) {
    case Verdict::Pass: return scan ? "CONSISTENT" : "PASS";
    case Verdict::Fail: return scan ? "COUNTEREXAMPLE" : "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

Verdict worst(Verdict a, Verdict b) {
    if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
    if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
    return Verdict::Pass;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_csv_row(const std::vector<std::string>& row, std::ostream& out) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << csv_field(row[i]);
    }
    out << '\n';
}

} // namespace

void write_csv_table(const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
    write_csv_row(columns, out);
    for (const auto& row : rows) write_csv_row(row, out);
}

void write_report_csv(const Report& r, std::ostream& out) {
    if (!r.claim_id.empty()) out << "# claim: " << r.claim_id << '\n';
    if (!r.grid.empty()) out << "# grid: " << r.grid << '\n';
    out << "# tolerance: " << r.tolerance << '\n';
    out << "# max_iterations: " << r.max_iterations << '\n';
    out << "# seed: " << r.seed << '\n';
    out << "# runtime_seconds: " << r.runtime_seconds << '\n';
    if (!r.notes.empty()) out << "# notes: " << r.notes << '\n';
    out << "# verdict: " << verdict_label(r.verdict, r.scan_wording) << '\n';
    write_csv_table(r.columns, r.rows, out);
}

void write_report_json(const Report& r, std::ostream& out) {
    nlohmann::json j;
    j["claim"] = r.claim_id;
    j["grid"] = r.grid;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["verdict"] = verdict_label(r.verdict, r.scan_wording);
    j["runtime_seconds"] = r.runtime_seconds;
    j["solver"] = {{"tolerance", r.tolerance}, {"max_iterations", r.max_iterations}};
    j["seed"] = r.seed;
    if (!r.notes.empty()) j["notes"] = r.notes;
    out << j.dump(2) << '\n';
}

void save_report(const Report& r, const std::string& path, const std::string& format) {
    if (format != "csv" && format != "json")
        throw Error(ErrorCode::BadParams, "unknown report format: " + format);

    auto emit = [&](std::ostream& out) {
        if (format == "csv")
            write_report_csv(r, out);
        else
            write_report_json(r, out);
    };

    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    emit(out);
    if (!out)
        throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

} // namespace supertrees

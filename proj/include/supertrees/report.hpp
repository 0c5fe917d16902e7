#ifndef SUPERTREES_REPORT_HPP
#define SUPERTREES_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace supertrees {

enum class Verdict { Pass, Fail, Inconclusive };

// Exit codes: PASS/CONSISTENT 0, FAIL/COUNTEREXAMPLE 1, INCONCLUSIVE 2.
int verdict_exit_code(Verdict v);

// scan wording swaps PASS/FAIL for CONSISTENT/COUNTEREXAMPLE.
std::string verdict_label(Verdict v, bool scan = false);

// FAIL dominates INCONCLUSIVE dominates PASS.
Verdict worst(Verdict a, Verdict b);

struct Report {
    std::string claim_id;
    std::string grid;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    Verdict verdict = Verdict::Inconclusive;
    double runtime_seconds = 0.0;
    double tolerance = 0.0;
    int max_iterations = 0;
    std::uint64_t seed = 0;
    bool scan_wording = false;
    std::string notes;
};

// RFC-style quoting (fields with commas, quotes or newlines get quoted).
void write_csv_table(const std::vector<std::string>& columns,
                     const std::vector<std::vector<std::string>>& rows, std::ostream& out);

void write_report_csv(const Report& r, std::ostream& out);
void write_report_json(const Report& r, std::ostream& out);

// format is "csv" or "json"; empty path writes to stdout.
void save_report(const Report& r, const std::string& path, const std::string& format);

} // namespace supertrees

#endif // SUPERTREES_REPORT_HPP

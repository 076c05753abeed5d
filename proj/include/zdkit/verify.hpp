#pragma once

#include <string>
#include <vector>

namespace zdkit {

struct CriterionResult {
    int id{};
    std::string name;
    bool passed{};
    std::string detail;
};

/// Published Table 1 (the sedenion brocade) in the CSV layout brocade_csv
/// emits for n = 4: rows 9..15, columns 1..7.
extern const char* const kTable1Csv;

/// Published Table 2 (sedenion sails and their pathion explosions), header
/// constants as printed there.
extern const char* const kTable2Text;

/// Runs the acceptance criteria of the given suite.  Suites: "all", "tables"
/// (censuses, goldens, oracle differential, royal hunt, determinism),
/// "cowbird", "fano", "et".  cli_path enables the CLI determinism criterion;
/// empty skips it unless the suite demands it, in which case it fails with an
/// explanatory detail.
std::vector<CriterionResult> run_acceptance(const std::string& suite, const std::string& cli_path);

/// Prints one pass/fail line per criterion; returns the failure count.
int report_acceptance(const std::vector<CriterionResult>& results);

}  // namespace zdkit

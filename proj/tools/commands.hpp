#pragma once

// Command implementations shared by the CLI and the acceptance runner.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace uqaff::cli {

struct RunConfig {
    std::string command;
    int N = 2;
    std::string q = "q";  ///< "q" (symbolic) or a real number
    std::string a;        ///< empty: q^-2 w
    int order = 6;
    int height = -1;      ///< -1: per-command default
    std::string mode;     ///< rmatrix: atoms|series; ybe: exact|numeric
    std::string out;
    std::string format = "json";
    double z = 0.15;
    double w = 0.2;
    std::string perturb;  ///< relations: multiply all but the first term (negative control)
};

/// Thrown for invalid option combinations; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "id | params | PASS/FAIL | residual"
void report_line(std::ostream& os, const std::string& id, const std::string& params, bool pass, const std::string& residual);
std::string join_params(const std::vector<int>& p);

/// Runs one command, printing report lines; returns 0 if every line passed, 1 otherwise.
int run(const RunConfig& cfg, std::ostream& os);

}  // namespace uqaff::cli

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catqec/cat_code.hpp"
#include "catqec/repeater.hpp"
#include "catqec/tables.hpp"

namespace catqec::cli {

using Cell = std::variant<double, long long, std::string, bool>;

struct DataTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Header row, 17 significant digits.
std::string format_csv(const DataTable& t);
// Array of records keyed by column name.
std::string format_json(const DataTable& t);

std::uint64_t fnv1a64(std::string_view bytes);

std::vector<double> linspace(double lo, double hi, unsigned steps);

DataTable weights_table(const CodeSpec& spec, const LogicalCoeffs& c, const std::vector<double>& gammas);
DataTable phase_space_table(const CodeSpec& spec);
DataTable fidelity_table(const CodeSpec& spec, const std::vector<double>& gammas);
DataTable kl_table(unsigned L, const std::vector<double>& alphas, const std::string& basis, unsigned max_loss,
                   const std::string& model, double gamma);
DataTable tables_table(const std::vector<TableRowResult>& rows);
std::string tables_text(const std::vector<TableRowResult>& rows);
DataTable sweep_table(const RepeaterConfig& base, SweepAxis axis, const std::vector<double>& values,
                      bool worst_case);

struct VerifyCheck {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};
// Library results against brute-force Fock-space references.
std::vector<VerifyCheck> run_verify();

// Entry point; returns the process exit code (0 ok, 1 usage, 2 numerical failure).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catqec::cli

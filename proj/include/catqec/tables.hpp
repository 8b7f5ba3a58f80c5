#pragma once

#include <string>
#include <vector>

#include "catqec/repeater.hpp"

namespace catqec {

// Published reference value; magnitude_only marks entries quoted as an order of magnitude.
struct RefValue {
    double value = 0.0;
    bool magnitude_only = false;
};

struct TableReference {
    std::string table;  // "I", "II", "III"
    unsigned L = 0;
    double alpha = 0.0;
    double spacing_km = 0.0;
    RefValue F_new, P_new, F_old, P_old;
    bool highlighted = false;
};

// Old and new scheme results over 1000 km for a reference row.
struct TableRowResult {
    TableReference ref;
    WorstCaseChain fresh;  // ar_every = 2
    WorstCaseChain old;    // ar_every = 1
    double F_new() const { return fresh.fidelity(); }
    double P_new() const { return fresh.success_prob(); }
    double F_old() const { return old.fidelity(); }
    double P_old() const { return old.success_prob(); }
};

// All rows of a table ("I", "II", "III"); empty selector gives every table.
std::vector<TableReference> table_reference(const std::string& which = "");

TableRowResult reproduce_row(const TableReference& ref, double total_km = 1000.0, double attenuation_km = 22.0);

// Absolute deviation for fidelities, relative deviation for probabilities.
double fidelity_deviation(double computed, const RefValue& ref);
double probability_deviation(double computed, const RefValue& ref);

}  // namespace catqec

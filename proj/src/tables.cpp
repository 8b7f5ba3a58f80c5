#include "catqec/tables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace catqec {

namespace {

RefValue v(double x) { return RefValue{x, false}; }
RefValue mag(double x) { return RefValue{x, true}; }

const std::vector<TableReference>& all_rows() {
    static const std::vector<TableReference> rows{
        // L = 3
        {"I", 3, 4.0, 0.01, v(0.999989), mag(0.0), v(0.999989), mag(0.0), false},
        {"I", 3, 4.0, 0.10, v(0.989446), mag(0.0), v(0.989275), mag(1e-76), false},
        {"I", 3, 4.0, 1.00, v(0.00473919), mag(3e-8), v(0.00232537), mag(1e-12), false},
        {"I", 3, 4.5, 0.01, v(0.99997), mag(0.0), v(0.99997), mag(1e-42), false},
        {"I", 3, 4.5, 0.10, v(0.973278), v(0.00830884), v(0.972789), mag(7e-5), true},
        {"I", 3, 4.5, 1.00, mag(9e-6), v(0.00880618), mag(1e-6), mag(3e-3), false},
        {"I", 3, 5.0, 0.01, v(0.999931), mag(0.0), v(0.999931), mag(1e-67), false},
        {"I", 3, 5.0, 0.10, v(0.940122), mag(5e-4), v(0.87604), mag(2e-7), false},
        {"I", 3, 5.0, 1.00, mag(0.0), v(0.168942), mag(6e-22), v(0.0847453), false},
        {"I", 3, 6.0, 0.01, v(0.999706), mag(5e-4), v(0.999705), mag(3e-7), false},
        {"I", 3, 6.0, 0.10, v(0.774627), v(0.468715), v(0.771153), v(0.221926), false},
        {"I", 3, 6.0, 1.00, mag(0.0), v(0.893489), mag(3e-36), v(0.843821), false},
        // L = 4
        {"II", 4, 6.0, 0.01, v(0.999999), mag(3e-31), v(0.999999), mag(1e-61), false},
        {"II", 4, 6.0, 0.10, v(0.991757), mag(4e-4), v(0.991574), mag(4e-7), false},
        {"II", 4, 6.0, 1.00, mag(1e-9), v(0.0787418), mag(4e-11), v(0.0455329), false},
        {"II", 4, 7.0, 0.01, v(0.999996), mag(6e-4), v(0.999996), mag(3e-7), false},
        {"II", 4, 7.0, 0.10, v(0.963915), v(0.451687), v(0.96314), v(0.214877), true},
        {"II", 4, 7.0, 1.00, mag(6e-28), v(0.755955), mag(3e-22), v(0.740854), false},
        {"II", 4, 8.0, 0.01, v(0.999983), v(0.230988), v(0.999983), v(0.0531004), true},
        {"II", 4, 8.0, 0.10, v(0.876309), v(0.867937), v(0.873809), v(0.74901), false},
        {"II", 4, 8.0, 1.00, mag(1e-66), v(0.979637), mag(1e-75), v(0.977982), false},
        // L = 5
        {"III", 5, 6.0, 0.01, mag(1.0), mag(0.0), mag(1.0), mag(0.0), false},
        {"III", 5, 6.0, 0.10, v(0.999781), mag(4e-24), v(0.999776), mag(1e-47), false},
        {"III", 5, 6.0, 1.00, v(0.00639287), mag(3e-5), mag(3e-3), mag(6e-6), false},
        {"III", 5, 7.0, 0.01, mag(1.0), mag(3e-50), mag(1.0), mag(0.0), false},
        {"III", 5, 7.0, 0.10, v(0.998659), mag(1e-5), v(0.998624), mag(1e-10), false},
        {"III", 5, 7.0, 1.00, mag(2e-9), v(0.06615), mag(4e-11), v(0.0759747), false},
        {"III", 5, 8.0, 0.01, mag(1.0), mag(1e-7), mag(1.0), mag(2e-14), false},
        {"III", 5, 8.0, 0.10, v(0.99371), v(0.194448), v(0.993546), v(0.0417406), true},
        {"III", 5, 8.0, 1.00, mag(4e-27), v(0.691036), mag(1e-31), v(0.659869), false},
        {"III", 5, 9.0, 0.01, mag(1.0), mag(4e-3), mag(1.0), mag(1.75e-5), false},
        {"III", 5, 9.0, 0.10, v(0.975983), v(0.578119), v(0.97537), v(0.334447), true},
        {"III", 5, 9.0, 1.00, mag(5e-64), v(0.963224), mag(4e-74), v(0.89103), false},
    };
    return rows;
}

}  // namespace

std::vector<TableReference> table_reference(const std::string& which) {
    if (!which.empty() && which != "I" && which != "II" && which != "III")
        throw std::invalid_argument("unknown table '" + which + "' (I|II|III)");
    std::vector<TableReference> out;
    for (const auto& r : all_rows())
        if (which.empty() || r.table == which) out.push_back(r);
    return out;
}

TableRowResult reproduce_row(const TableReference& ref, double total_km, double attenuation_km) {
    RepeaterConfig cfg;
    cfg.total_km = total_km;
    cfg.attenuation_km = attenuation_km;
    cfg.spacing_km = ref.spacing_km;
    cfg.spec = CodeSpec{ref.L, 2, ref.alpha};
    cfg.keep_trace = false;
    TableRowResult out;
    out.ref = ref;
    cfg.ar_every = 2;
    out.fresh = simulate_worst_case(cfg);
    cfg.ar_every = 1;
    out.old = simulate_worst_case(cfg);
    return out;
}

double fidelity_deviation(double computed, const RefValue& ref) { return computed - ref.value; }

double probability_deviation(double computed, const RefValue& ref) {
    if (ref.value == 0.0) return computed == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return (computed - ref.value) / ref.value;
}

}  // namespace catqec

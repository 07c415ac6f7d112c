#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphqfi {

// One (parameter, value) row of a sweep, e.g. (p, QFI) or (e, average QFI).
struct SweepRecord {
    double parameter = 0.0;
    double value = 0.0;
    std::string method;
    std::string graph_id;
};

// 12-significant-digit rendering; byte deterministic for equal inputs.
std::string format_value(double v);

// Header "parameter,value,method,graph_id" plus one row per record. Records
// must be nonempty, sorted by parameter and free of NaN.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);

// "start:stop:step", endpoints included within 1e-12.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace graphqfi

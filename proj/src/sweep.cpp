#include "graphqfi/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace graphqfi {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    if (records.empty()) throw std::invalid_argument("emit_csv: no records");
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (std::isnan(records[i].parameter) || std::isnan(records[i].value))
            throw std::invalid_argument("emit_csv: NaN in record " + std::to_string(i));
        if (i > 0 && records[i].parameter < records[i - 1].parameter)
            throw std::invalid_argument("emit_csv: unsorted sweep at record " +
                                        std::to_string(i));
    }
    out << "parameter,value,method,graph_id\n";
    for (const auto& r : records)
        out << format_value(r.parameter) << ',' << format_value(r.value) << ',' << r.method
            << ',' << r.graph_id << '\n';
}

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0, stop = 0, step = 0;
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &tail) != 3)
        throw std::invalid_argument("grid: expected start:stop:step, got \"" + spec + "\"");
    if (step <= 0) throw std::invalid_argument("grid: step must be positive");
    if (stop < start) throw std::invalid_argument("grid: stop must be >= start");
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double v = start + i * step;
        if (v > stop + 1e-12) break;
        out.push_back(std::min(v, stop));
    }
    return out;
}

}  // namespace graphqfi

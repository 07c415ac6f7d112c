#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphqfi/graph.hpp"

namespace graphqfi::verify {

struct NamedGraph {
    std::string id;
    Graph g;
};

// Canonical graphs: paths, cycles, stars, complete graphs, grids and a
// selection of bundled stars/cycles, all with n <= max_n.
std::vector<NamedGraph> family_graphs(int max_n);

// The 10-qubit bundled triangle with bundle sizes {3, 4, 3}.
NamedGraph bundled_triangle_343();

// Deterministic Erdos-Renyi-style connected samples, 2 <= n <= max_n.
std::vector<NamedGraph> random_connected_graphs(int count, int max_n, std::uint64_t seed);

struct CheckResult {
    std::string name;
    bool pass = true;
    double max_dev = 0.0;
    double tolerance = 0.0;
    long cases = 0;
    std::vector<std::string> notes;

    void fail(const std::string& note);
    void record_dev(double dev, const std::string& where);
};

// One function per acceptance criterion; defaults reproduce the gate.
CheckResult check_noiseless(int max_n = 7, int random_count = 200,
                            std::uint64_t seed = 20240901);
CheckResult check_lc(int max_n = 7, int random_count = 200, std::uint64_t seed = 20240901);
CheckResult check_dephasing(int max_n = 6);
CheckResult check_erasure_patterns(int max_n = 6);
CheckResult check_erasure_averages();
CheckResult check_fig2_formulas();
CheckResult check_measurement();
CheckResult check_counting();

std::vector<CheckResult> run_all();

}  // namespace graphqfi::verify

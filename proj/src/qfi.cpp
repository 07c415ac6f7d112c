#include "graphqfi/qfi.hpp"

#include "graphqfi/partition.hpp"

namespace graphqfi {

QfiValue qfi_graph(const Graph& g) {
    require_no_isolated(g);
    double q = 0.0;
    for (const auto& cls : partition(g).open_classes) {
        const double v = cls.size();
        q += v * v;
    }
    return {q, "graph"};
}

QfiValue qfi_graph_lc(const Graph& g) {
    require_no_isolated(g);
    const auto report = partition(g);
    double q = -static_cast<double>(g.size());
    for (const auto& cls : report.open_classes) q += double(cls.size()) * cls.size();
    for (const auto& cls : report.closed_classes) q += double(cls.size()) * cls.size();
    return {q, "graph_lc"};
}

QfiValue qfi_stabilizer(const StabilizerGroup& s) {
    const auto report = classify_x_forms(s);
    if (report.has_bad_form) throw BadXFormError(*report.bad_witness);
    // i = j terms contribute Tr(X_i^2 psi) = 1 each; Tr(X_i psi) = 0 since
    // no +-X_i is in the group.
    return {static_cast<double>(s.qubits()) + 2.0 * report.count_xixj, "stabilizer"};
}

double bundle_bound(int n, int k) {
    if (k < 1 || k > n) throw std::domain_error("bundle_bound: need 1 <= k <= n");
    return static_cast<double>(n) * n / k;
}

}  // namespace graphqfi

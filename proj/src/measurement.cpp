#include "graphqfi/measurement.hpp"

#include <cmath>
#include <stdexcept>

#include "graphqfi/oracle.hpp"
#include "graphqfi/partition.hpp"
#include "graphqfi/qfi.hpp"

namespace graphqfi {

namespace {

bool all_yz(const Pauli& p) {
    for (int q = 0; q < p.qubits(); ++q)
        if (!p.z_mask().test(q)) return false;  // Y and Z both carry a z bit
    return true;
}

bool pairing_condition(const Pauli& p, const PartitionReport& report) {
    for (const auto& cls : report.open_classes) {
        bool any_yz = false, any_xi = false;
        for (int v : cls.members)
            (p.z_mask().test(v) ? any_yz : any_xi) = true;
        if (any_yz && any_xi) return false;
    }
    return true;
}

double expectation_at(const oracle::StateVector& psi, const Pauli& obs,
                      const std::vector<int>& active, double theta) {
    return oracle::pauli_expectation(oracle::apply_phase_encoding(psi, theta, active), obs);
}

}  // namespace

std::vector<int> MeasurementPlan::active_qubits() const {
    const int n = graph.size();
    std::vector<int> out;
    for (int q = 0; q < n - (extended ? 1 : 0); ++q) out.push_back(q);
    return out;
}

std::optional<Pauli> find_yz_stabilizer(const StabilizerGroup& s) {
    std::optional<Pauli> best;
    s.for_each_element([&best](const Pauli& p) {
        if (p.sign_exponent() != 0 || !all_yz(p)) return;
        if (!best || Pauli::lexicographic_less(p, *best)) best = p;
    });
    return best;
}

std::vector<Pauli> pairing_candidates(const Graph& g) {
    require_no_isolated(g);
    const auto report = partition(g);
    const auto group = generators_from_graph(g);
    std::vector<Pauli> out;
    group.for_each_element([&](const Pauli& p) {
        if (p.sign_exponent() != 0 || p.is_identity()) return;
        if (pairing_condition(p, report)) out.push_back(p);
    });
    std::sort(out.begin(), out.end(), Pauli::lexicographic_less);
    out.emplace_back(g.size());  // identity qualifies degenerately; last resort
    return out;
}

std::optional<Pauli> find_pairing_stabilizer(const Graph& g) {
    auto cands = pairing_candidates(g);
    if (cands.empty()) return std::nullopt;
    return cands.front();
}

std::pair<Graph, Pauli> extend_graph_plus(const Graph& g, const Pauli& s) {
    require_no_isolated(g);
    const int n = g.size();
    if (s.qubits() != n) throw std::invalid_argument("extend_graph_plus: qubit count mismatch");
    if (s.sign_exponent() != 0)
        throw std::invalid_argument("extend_graph_plus: stabilizer must carry sign +1");
    const auto group = generators_from_graph(g);
    const auto combo = group.solve_combination(s.x_mask(), s.z_mask());
    if (!combo || !(group.product_of(*combo) == s))
        throw std::invalid_argument("extend_graph_plus: " + s.str() +
                                    " is not a stabilizer of the graph");
    if (!pairing_condition(s, partition(g)))
        throw std::invalid_argument("extend_graph_plus: " + s.str() +
                                    " violates the open-class pairing condition");

    std::vector<int> c_s;  // letters X or I, i.e. no z bit
    for (int q = 0; q < n; ++q)
        if (!s.z_mask().test(q)) c_s.push_back(q);
    if (c_s.empty())
        throw std::invalid_argument(
            "extend_graph_plus: C_S is empty (stabilizer is already Y/Z-only and the appended "
            "vertex would be isolated)");

    auto edges = g.edges();
    for (int q : c_s) edges.emplace_back(q, n);
    const Graph plus(n + 1, edges);
    const auto group_plus = generators_from_graph(plus);

    // Image of s in the extended group: the same generator product.
    Pauli image(n + 1);
    for (int i = 0; i < n; ++i)
        if (combo->test(i)) image = image * group_plus.generators()[i];
    const Pauli observable = group_plus.generators()[n] * image;
    return {plus, observable};
}

MeasurementPlan make_measurement_plan(const Graph& g, bool force_extended) {
    require_no_isolated(g);
    if (!force_extended) {
        if (auto direct = find_yz_stabilizer(generators_from_graph(g)))
            return {g, *direct, false};
    }
    for (const auto& s : pairing_candidates(g)) {
        if (all_yz(s)) continue;  // empty C_S
        auto [plus, observable] = extend_graph_plus(g, s);
        if (observable.sign_exponent() == 0) return {plus, observable, true};
    }
    throw std::runtime_error("make_measurement_plan: no usable stabilizer found");
}

std::vector<double> expectation_curve(const MeasurementPlan& plan,
                                      const std::vector<double>& thetas) {
    const auto psi = oracle::graph_state_vector(plan.graph);
    const auto active = plan.active_qubits();
    std::vector<double> out;
    out.reserve(thetas.size());
    for (double theta : thetas)
        out.push_back(expectation_at(psi, plan.observable, active, theta));
    return out;
}

std::vector<double> precision_curve(const MeasurementPlan& plan,
                                    const std::vector<double>& thetas) {
    const auto psi = oracle::graph_state_vector(plan.graph);
    const auto active = plan.active_qubits();
    constexpr double h = 1e-5;
    std::vector<double> out;
    out.reserve(thetas.size());
    for (double theta : thetas) {
        const double e0 = expectation_at(psi, plan.observable, active, theta);
        const double d = (expectation_at(psi, plan.observable, active, theta + h) -
                          expectation_at(psi, plan.observable, active, theta - h)) /
                         (2.0 * h);
        if (std::abs(d) < 1e-12)
            throw std::domain_error("precision_curve: uninformative operating point theta=" +
                                    std::to_string(theta));
        out.push_back((1.0 - e0 * e0) / (d * d));
    }
    return out;
}

}  // namespace graphqfi

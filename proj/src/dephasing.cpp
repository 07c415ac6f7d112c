#include "graphqfi/dephasing.hpp"

#include <cmath>
#include <stdexcept>

#include "graphqfi/partition.hpp"

namespace graphqfi {

namespace {

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("dephasing probability must lie in [0,1]");
}

}  // namespace

double dephasing_f(int v, double p) {
    if (v < 1) throw std::domain_error("dephasing_f: class size must be >= 1");
    check_p(p);
    const double u = 1.0 - 2.0 * p;
    return double(v) * v * u * u + 4.0 * v * p * (1.0 - p);
}

double dephasing_g(int big_n, double p) {
    if (big_n < 1) throw std::domain_error("dephasing_g: neighborhood size must be >= 1");
    check_p(p);
    double total = 0.0;
    double binom = 1.0;  // C(N, j) by multiplicative recurrence
    for (int j = 0; j <= big_n; ++j) {
        const double r = std::pow(p, big_n - j) * std::pow(1.0 - p, j);
        const double s = std::pow(p, j) * std::pow(1.0 - p, big_n - j);
        const double den = r + s;
        if (den > 0.0) {
            const double num = r - s;
            total += binom * num * num / den;
        }
        binom *= double(big_n - j) / double(j + 1);
    }
    return total;
}

double g_lower_bound(int big_n, double p) {
    if (big_n < 1) throw std::domain_error("g_lower_bound: neighborhood size must be >= 1");
    check_p(p);
    return 2.0 - 2.0 * std::pow(2.0 * p * (1.0 - p) + 0.5, big_n);
}

QfiValue qfi_dephasing_exact(const Graph& g, double p) {
    require_no_isolated(g);
    check_p(p);
    double q = 0.0;
    for (const auto& cls : partition(g).open_classes)
        q += dephasing_f(cls.size(), p) * dephasing_g(cls.neighborhood_size(), p);
    return {0.5 * q, "dephasing_exact"};
}

QfiValue qfi_dephasing_approx(const Graph& g, double p) {
    require_no_isolated(g);
    check_p(p);
    const double u = 1.0 - 2.0 * p;
    const double value = u * u * qfi_graph(g).value + 4.0 * g.size() * p * (1.0 - p);
    return {value, "dephasing_approx"};
}

}  // namespace graphqfi

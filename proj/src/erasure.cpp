#include "graphqfi/erasure.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphqfi/partition.hpp"

namespace graphqfi {

namespace {

// C(a, e) / C(n, e) as a product of ratios; zero when a < e (including
// negative upper indices).
double binom_ratio(long a, long n, long e) {
    if (e < 0 || e > n) throw std::domain_error("binom_ratio: need 0 <= e <= n");
    if (a < e) return 0.0;
    double r = 1.0;
    for (long t = 0; t < e; ++t) r *= double(a - t) / double(n - t);
    return r;
}

long long subset_count(int n, int e) {
    long long c = 1;
    for (int t = 0; t < e; ++t) {
        c = c * (n - t) / (t + 1);
        if (c > kErasureEnumerationGuard) return kErasureEnumerationGuard + 1;
    }
    return c;
}

bool covered(const std::vector<int>& verts, const BitVec& cone) {
    for (int v : verts)
        if (!cone.test(v)) return false;
    return true;
}

}  // namespace

ErasurePattern::ErasurePattern(std::vector<int> s) : sites(std::move(s)) {
    if (sites.empty()) throw std::invalid_argument("ErasurePattern: no sites");
    std::sort(sites.begin(), sites.end());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end())
        throw std::invalid_argument("ErasurePattern: duplicate site");
}

BitVec erasure_light_cone(const Graph& g, const ErasurePattern& pat) {
    BitVec cone(g.size());
    for (int y : pat.sites) {
        if (y < 0 || y >= g.size())
            throw std::out_of_range("erasure site " + std::to_string(y) + " out of range");
        cone.set(y);
        for (int u : g.neighbors(y)) cone.set(u);
    }
    return cone;
}

QfiValue qfi_erasure_pattern(const Graph& g, const ErasurePattern& pat) {
    require_no_isolated(g);
    const BitVec cone = erasure_light_cone(g, pat);
    double q = 0.0;
    for (const auto& cls : partition(g).open_classes) {
        const bool nbhd_in = covered(cls.shared_neighborhood, cone);
        if (nbhd_in) continue;
        const bool members_in = covered(cls.members, cone);
        const double v = cls.size();
        q += members_in ? v : v * v;
    }
    return {q, "erasure_pattern"};
}

double qfi_erasure_average_exact(const Graph& g, int e) {
    require_no_isolated(g);
    const int n = g.size();
    if (e < 1 || e > n) throw std::domain_error("erasure average: need 1 <= e <= n");
    if (subset_count(n, e) > kErasureEnumerationGuard)
        throw std::domain_error("erasure average: C(n,e) exceeds the enumeration guard");

    const auto report = partition(g);
    double total = 0.0;
    long long patterns = 0;
    std::vector<int> sites(e);
    for (int i = 0; i < e; ++i) sites[i] = i;
    while (true) {
        // inline h-sum; avoids re-partitioning per pattern
        BitVec cone(n);
        for (int y : sites) {
            cone.set(y);
            for (int u : g.neighbors(y)) cone.set(u);
        }
        for (const auto& cls : report.open_classes) {
            if (covered(cls.shared_neighborhood, cone)) continue;
            const double v = cls.size();
            total += covered(cls.members, cone) ? v : v * v;
        }
        ++patterns;
        int i = e - 1;
        while (i >= 0 && sites[i] == n - e + i) --i;
        if (i < 0) break;
        ++sites[i];
        for (int t = i + 1; t < e; ++t) sites[t] = sites[t - 1] + 1;
    }
    return total / double(patterns);
}

double qfi_erasure_single_avg_formula(const Graph& g) {
    require_no_isolated(g);
    const double n = g.size();
    double quad = 0.0, lin = 0.0;
    for (const auto& cls : partition(g).open_classes) {
        const double v = cls.size(), nl = cls.neighborhood_size();
        quad += v * v * (n - v - nl) / n;
        lin += v * nl / n;
    }
    return quad + lin;
}

double qfi_erasure_star_formula(int n, int k, int e) {
    if (k < 2 || n % k != 0) throw std::domain_error("star formula: k must divide n, k >= 2");
    if (e < 1 || e > n) throw std::domain_error("star formula: need 1 <= e <= n");
    const long j = n / k;
    return binom_ratio(n - j, n, e) * j + binom_ratio(j, n, e) * (n - j);
}

double qfi_erasure_cyclic_formula(int n, int k, int e) {
    if (k < 5) throw std::domain_error("cyclic formula: gated to k >= 5 bundles");
    if (n % k != 0) throw std::domain_error("cyclic formula: k must divide n");
    const long j = n / k;
    if (e < 1 || e >= 2 * j) throw std::domain_error("cyclic formula: need 1 <= e < 2j");
    const double quad =
        2.0 * binom_ratio(n - 4 * j, n, e) - binom_ratio(n - 5 * j, n, e);
    const double lin = 2.0 * binom_ratio(n - 2 * j, n, e) - binom_ratio(n - 3 * j, n, e) -
                       2.0 * binom_ratio(n - 4 * j, n, e) + binom_ratio(n - 5 * j, n, e);
    return quad * double(n) * j + lin * double(n);
}

}  // namespace graphqfi

#include "graphqfi/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>

#include "graphqfi/oracle.hpp"

namespace graphqfi {

namespace {

// Symplectic product of mask pairs (x, z) packed as x | z << n.
int symp(unsigned a, unsigned b, int n) {
    const unsigned ax = a & ((1u << n) - 1), az = a >> n;
    const unsigned bx = b & ((1u << n) - 1), bz = b >> n;
    return (std::popcount(ax & bz) ^ std::popcount(az & bx)) & 1;
}

// Reduced row echelon form over GF(2); canonical per row space.
std::vector<unsigned> rref(std::vector<unsigned> rows, int width) {
    std::vector<unsigned> out;
    for (int col = width - 1; col >= 0; --col) {
        const unsigned bit = 1u << col;
        auto pivot = std::find_if(rows.begin(), rows.end(),
                                  [&](unsigned r) { return r & bit; });
        if (pivot == rows.end()) continue;
        const unsigned p = *pivot;
        rows.erase(pivot);
        for (auto& r : rows)
            if (r & bit) r ^= p;
        for (auto& r : out)
            if (r & bit) r ^= p;
        out.push_back(p);
    }
    return out;
}

Pauli pauli_from_masks(int n, unsigned packed, bool negative) {
    BitVec x(n), z(n);
    int y = 0;
    for (int q = 0; q < n; ++q) {
        const bool xb = (packed >> q) & 1, zb = (packed >> (n + q)) & 1;
        if (xb) x.set(q);
        if (zb) z.set(q);
        if (xb && zb) ++y;
    }
    return Pauli(y + (negative ? 2 : 0), std::move(x), std::move(z));
}

}  // namespace

BigCount binomial_exact(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigCount c = 1;
    for (int t = 0; t < k; ++t) {
        c *= n - t;
        c /= t + 1;
    }
    return c;
}

BigCount stabilizer_state_count(int n) {
    if (n < 0) throw std::domain_error("stabilizer_state_count: n must be >= 0");
    BigCount count = BigCount(1) << n;
    for (int k = 1; k <= n; ++k) count *= (BigCount(1) << k) + 1;
    return count;
}

MetrologyBound metrology_bound(int n, double epsilon) {
    if (n < 2) throw std::domain_error("metrology_bound: n must be >= 2");
    if (!(epsilon > 0.0 && epsilon <= 2.0))
        throw std::domain_error("metrology_bound: epsilon must lie in (0, 2]");
    const double raw = std::pow(double(n), 1.0 - epsilon / 2.0);
    const int k = std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));

    MetrologyBound bound;
    bound.k = k;
    for (int j = k; j <= n; ++j) {
        const BigCount term =
            binomial_exact(n - 1, j - 1) * (BigCount(1) << j) * stabilizer_state_count(n - j);
        if (j == k) bound.simple = term;
        bound.full += term;
    }
    return bound;
}

CensusResult empirical_census(int n, double threshold) {
    if (n < 1 || n > kCensusMaxQubits)
        throw std::domain_error("empirical_census: gated to 1 <= n <= " +
                                std::to_string(kCensusMaxQubits));
    const int width = 2 * n;
    const unsigned limit = 1u << width;

    // Canonical bases of all maximal isotropic subspaces of F_2^{2n}.
    std::set<std::vector<unsigned>> subspaces;
    std::vector<unsigned> masks;
    for (unsigned m = 1; m < limit; ++m) masks.push_back(m);
    std::vector<unsigned> pick(n);
    std::function<void(int, std::size_t)> recurse = [&](int depth, std::size_t from) {
        if (depth == n) {
            auto canon = rref(std::vector<unsigned>(pick.begin(), pick.end()), width);
            if (static_cast<int>(canon.size()) == n) subspaces.insert(canon);
            return;
        }
        for (std::size_t i = from; i < masks.size(); ++i) {
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                if (symp(pick[d], masks[i], n)) ok = false;
            if (!ok) continue;
            pick[depth] = masks[i];
            recurse(depth + 1, i + 1);
        }
    };
    recurse(0, 0);

    CensusResult result;
    for (const auto& basis : subspaces) {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            std::vector<Pauli> gens;
            for (int i = 0; i < n; ++i)
                gens.push_back(pauli_from_masks(n, basis[i], (signs >> i) & 1));
            StabilizerGroup group(std::move(gens));
            const double q = oracle::qfi_pure(oracle::stabilizer_state_vector(group));
            ++result.total;
            if (q >= threshold - 1e-6) ++result.at_least;
        }
    }
    return result;
}

StabilizerGroup high_qfi_stabilizer_group(int n, int k) {
    if (k < 2 || k > n) throw std::domain_error("high_qfi_stabilizer_group: need 2 <= k <= n");
    std::vector<Pauli> gens;
    for (int i = 1; i < k; ++i) {
        BitVec x(n), z(n);
        x.set(0);
        x.set(i);
        gens.emplace_back(0, std::move(x), std::move(z));
    }
    BitVec py_x(n), py_z(n);
    for (int q = 0; q < k; ++q) {
        py_x.set(q);
        py_z.set(q);
    }
    const Pauli p_block(k, std::move(py_x), std::move(py_z));  // Y on the first k qubits
    gens.push_back(p_block);

    const int rest = n - k;
    if (rest > 0) {
        std::vector<Pauli> tail;
        if (rest == 1) {
            tail.push_back(Pauli::single(rest, 0, 'X'));
        } else {
            for (const auto& g : generators_from_graph(path_graph(rest)).generators())
                tail.push_back(g);
        }
        for (const auto& g : tail) {
            BitVec x(n), z(n);
            for (int q = 0; q < rest; ++q) {
                if (g.x_mask().test(q)) x.set(k + q);
                if (g.z_mask().test(q)) z.set(k + q);
            }
            gens.push_back(p_block * Pauli(g.phase_exponent(), std::move(x), std::move(z)));
        }
    }
    return StabilizerGroup(std::move(gens));
}

std::string approx_scientific(const BigCount& value) {
    const std::string digits = value.str();
    if (value == 0) return "0.000e+00";
    std::string mant = digits.substr(0, 1) + ".";
    for (std::size_t i = 1; i <= 3; ++i) mant += i < digits.size() ? digits[i] : '0';
    const auto exp = digits.size() - 1;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "e+%02zu", exp);
    return mant + buf;
}

}  // namespace graphqfi

#include "graphqfi/stabilizer.hpp"

#include <bit>
#include <stdexcept>

namespace graphqfi {

namespace {

BitVec symplectic_vector(const Pauli& p) {
    const int n = p.qubits();
    BitVec v(2 * n);
    for (int q = 0; q < n; ++q) {
        if (p.x_mask().test(q)) v.set(q);
        if (p.z_mask().test(q)) v.set(n + q);
    }
    return v;
}

}  // namespace

StabilizerGroup::StabilizerGroup(std::vector<Pauli> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("StabilizerGroup: no generators");
    n_ = gens_.front().qubits();
    if (static_cast<int>(gens_.size()) != n_)
        throw std::invalid_argument("StabilizerGroup: need exactly n generators for n qubits");
    for (const auto& g : gens_) {
        if (g.qubits() != n_)
            throw std::invalid_argument("StabilizerGroup: generator qubit count mismatch");
        if (!g.is_hermitian())
            throw std::invalid_argument("StabilizerGroup: generator " + g.str() +
                                        " is not Hermitian");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (!gens_[i].commutes_with(gens_[j]))
                throw std::invalid_argument("StabilizerGroup: generators " + gens_[i].str() +
                                            " and " + gens_[j].str() + " anticommute");

    // Echelonize symplectic vectors, tracking generator combinations.
    for (int i = 0; i < n_; ++i) {
        BitVec row = symplectic_vector(gens_[i]);
        BitVec combo(n_);
        combo.set(i);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (row.test(pivot_[r])) {
                row ^= rows_[r];
                combo ^= row_combo_[r];
            }
        }
        const int p = row.lowest_set();
        if (p < 0)
            throw std::invalid_argument("StabilizerGroup: generators are not independent");
        rows_.push_back(std::move(row));
        row_combo_.push_back(std::move(combo));
        pivot_.push_back(p);
    }
}

std::optional<BitVec> StabilizerGroup::solve_combination(const BitVec& x, const BitVec& z) const {
    if (x.size() != n_ || z.size() != n_)
        throw std::invalid_argument("StabilizerGroup: mask size mismatch");
    BitVec target(2 * n_);
    for (int q = 0; q < n_; ++q) {
        if (x.test(q)) target.set(q);
        if (z.test(q)) target.set(n_ + q);
    }
    BitVec combo(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (target.test(pivot_[r])) {
            target ^= rows_[r];
            combo ^= row_combo_[r];
        }
    }
    if (target.any()) return std::nullopt;
    return combo;
}

Pauli StabilizerGroup::product_of(const BitVec& combo) const {
    Pauli acc(n_);
    for (int i = 0; i < n_; ++i)
        if (combo.test(i)) acc = acc * gens_[i];
    return acc;
}

std::optional<Pauli> StabilizerGroup::element_with_masks(const BitVec& x, const BitVec& z) const {
    auto combo = solve_combination(x, z);
    if (!combo) return std::nullopt;
    return product_of(*combo);
}

bool StabilizerGroup::contains(const Pauli& p) const {
    if (p.qubits() != n_) return false;
    auto el = element_with_masks(p.x_mask(), p.z_mask());
    return el && *el == p;
}

void StabilizerGroup::for_each_element(const std::function<void(const Pauli&)>& fn) const {
    if (n_ > kGroupEnumerationMaxQubits)
        throw std::domain_error("StabilizerGroup: enumeration limited to n <= " +
                                std::to_string(kGroupEnumerationMaxQubits));
    Pauli current(n_);
    fn(current);
    const std::uint64_t total = std::uint64_t{1} << n_;
    for (std::uint64_t step = 1; step < total; ++step) {
        const int flip = std::countr_zero(step);  // Gray-code walk
        current = current * gens_[flip];
        fn(current);
    }
}

std::vector<Pauli> StabilizerGroup::elements() const {
    std::vector<Pauli> out;
    out.reserve(std::size_t{1} << n_);
    for_each_element([&out](const Pauli& p) { out.push_back(p); });
    return out;
}

StabilizerGroup generators_from_graph(const Graph& g) {
    const int n = g.size();
    std::vector<Pauli> gens;
    gens.reserve(n);
    for (int i = 0; i < n; ++i) {
        BitVec x(n), z(n);
        x.set(i);
        for (int j : g.neighbors(i)) z.set(j);
        gens.emplace_back(0, std::move(x), std::move(z));
    }
    return StabilizerGroup(std::move(gens));
}

XFormReport classify_x_forms(const StabilizerGroup& s) {
    const int n = s.qubits();
    XFormReport report;
    const BitVec no_z(n);
    for (int i = 0; i < n && !report.has_bad_form; ++i) {
        BitVec x(n);
        x.set(i);
        if (auto el = s.element_with_masks(x, no_z)) {
            report.has_bad_form = true;  // +-X_i, either sign
            report.bad_witness = *el;
        }
    }
    for (int i = 0; i < n && !report.has_bad_form; ++i) {
        for (int j = i + 1; j < n; ++j) {
            BitVec x(n);
            x.set(i);
            x.set(j);
            auto el = s.element_with_masks(x, no_z);
            if (!el) continue;
            if (el->sign_exponent() == 0) {
                ++report.count_xixj;
            } else {
                report.has_bad_form = true;  // -X_i X_j
                report.bad_witness = *el;
                break;
            }
        }
    }
    return report;
}

}  // namespace graphqfi

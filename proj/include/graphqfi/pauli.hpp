#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "graphqfi/bitvec.hpp"

namespace graphqfi {

// n-qubit Pauli operator stored as i^phase * X^x * Z^z with exact mod-4
// phase tracking. The letter at qubit q is I/X/Z/Y for (x,z) bits
// (0,0)/(1,0)/(0,1)/(1,1); Y = i*XZ, so the printed sign is
// i^(phase - #Y letters).
class Pauli {
public:
    Pauli() = default;

    explicit Pauli(int n) : phase_(0), x_(n), z_(n) {}

    Pauli(int phase_exp, BitVec x, BitVec z)
        : phase_(((phase_exp % 4) + 4) % 4), x_(std::move(x)), z_(std::move(z)) {
        if (x_.size() != z_.size()) throw std::invalid_argument("Pauli: mask size mismatch");
    }

    // Single-letter Pauli with +1 sign, e.g. single(3, 1, 'Y') == "IYI".
    static Pauli single(int n, int qubit, char letter);

    // Parses "[+|-][i]LETTERS", e.g. "-XZY", "iY", "ZZ".
    static Pauli from_string(std::string_view text);

    int qubits() const { return x_.size(); }
    const BitVec& x_mask() const { return x_; }
    const BitVec& z_mask() const { return z_; }
    int phase_exponent() const { return phase_; }

    char letter(int q) const {
        const bool x = x_.test(q), z = z_.test(q);
        return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
    }

    int y_count() const {
        int c = 0;
        for (int q = 0; q < qubits(); ++q)
            if (x_.test(q) && z_.test(q)) ++c;
        return c;
    }

    // Exponent s of the printed sign i^s relative to the letter product.
    int sign_exponent() const { return ((phase_ - y_count()) % 4 + 4) % 4; }

    bool is_hermitian() const { return sign_exponent() % 2 == 0; }

    std::complex<double> sign() const {
        static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[sign_exponent()];
    }

    bool is_identity() const { return !x_.any() && !z_.any() && phase_ == 0; }

    bool commutes_with(const Pauli& o) const {
        return (BitVec::and_parity(x_, o.z_) ^ BitVec::and_parity(z_, o.x_)) == 0;
    }

    friend Pauli operator*(const Pauli& a, const Pauli& b) {
        if (a.qubits() != b.qubits()) throw std::invalid_argument("Pauli: qubit count mismatch");
        // Moving Z^za past X^xb contributes (-1)^{za.xb}.
        const int phase = a.phase_ + b.phase_ + 2 * BitVec::and_parity(a.z_, b.x_);
        return Pauli(phase, a.x_ ^ b.x_, a.z_ ^ b.z_);
    }

    std::string str() const;

    bool operator==(const Pauli& o) const {
        return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
    }
    bool operator!=(const Pauli& o) const { return !(*this == o); }

    // Letter-wise lexicographic order ('I' < 'X' < 'Y' < 'Z'), sign as a
    // final tie-break; used for deterministic search results.
    static bool lexicographic_less(const Pauli& a, const Pauli& b);

private:
    int phase_ = 0;  // exponent of i in i^phase * X^x * Z^z
    BitVec x_, z_;
};

inline Pauli multiply(const Pauli& a, const Pauli& b) { return a * b; }
inline bool commutes(const Pauli& a, const Pauli& b) { return a.commutes_with(b); }

}  // namespace graphqfi

#include "graphqfi/pauli.hpp"

#include <stdexcept>

namespace graphqfi {

Pauli Pauli::single(int n, int qubit, char letter) {
    if (qubit < 0 || qubit >= n) throw std::out_of_range("Pauli::single: qubit out of range");
    BitVec x(n), z(n);
    int phase = 0;
    switch (letter) {
        case 'I': break;
        case 'X': x.set(qubit); break;
        case 'Z': z.set(qubit); break;
        case 'Y': x.set(qubit); z.set(qubit); phase = 1; break;
        default: throw std::invalid_argument("Pauli::single: letter must be one of IXYZ");
    }
    return Pauli(phase, std::move(x), std::move(z));
}

Pauli Pauli::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign_exp = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign_exp = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        sign_exp = (sign_exp + 1) % 4;
        ++pos;
    }
    const std::string_view letters = text.substr(pos);
    if (letters.empty()) throw std::invalid_argument("Pauli: empty operator string");
    const int n = static_cast<int>(letters.size());
    BitVec x(n), z(n);
    int y = 0;
    for (int q = 0; q < n; ++q) {
        switch (letters[q]) {
            case 'I': break;
            case 'X': x.set(q); break;
            case 'Z': z.set(q); break;
            case 'Y': x.set(q); z.set(q); ++y; break;
            default:
                throw std::invalid_argument(std::string("Pauli: invalid letter '") +
                                            letters[q] + "'");
        }
    }
    return Pauli(sign_exp + y, std::move(x), std::move(z));
}

std::string Pauli::str() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string out = prefix[sign_exponent()];
    out.reserve(out.size() + qubits());
    for (int q = 0; q < qubits(); ++q) out.push_back(letter(q));
    return out;
}

bool Pauli::lexicographic_less(const Pauli& a, const Pauli& b) {
    const int n = std::min(a.qubits(), b.qubits());
    for (int q = 0; q < n; ++q) {
        const char la = a.letter(q), lb = b.letter(q);
        if (la != lb) return la < lb;
    }
    if (a.qubits() != b.qubits()) return a.qubits() < b.qubits();
    return a.sign_exponent() < b.sign_exponent();
}

}  // namespace graphqfi

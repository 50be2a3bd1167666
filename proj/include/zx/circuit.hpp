#pragma once

#include "zx/diagram.hpp"
#include "zx/matrix.hpp"

#include <string_view>
#include <vector>

namespace zx {

// RzQ gate set (T and Z are Rz specializations kept as their own tags so the
// text format round-trips).
struct Gate {
    enum class Kind { H, X, Z, T, Rz, Cnot };
    Kind kind = Kind::H;
    std::size_t q0 = 0; // target, or control for cnot
    std::size_t q1 = 0; // cnot target
    Angle phase;        // rz only

    static Gate h(std::size_t q) { return {Kind::H, q, 0, {}}; }
    static Gate x(std::size_t q) { return {Kind::X, q, 0, {}}; }
    static Gate z(std::size_t q) { return {Kind::Z, q, 0, {}}; }
    static Gate t(std::size_t q) { return {Kind::T, q, 0, {}}; }
    static Gate rz(Angle a, std::size_t q) { return {Kind::Rz, q, 0, a}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {Kind::Cnot, control, target, {}};
    }
};

struct Circuit {
    std::size_t qubits = 1;
    std::vector<Gate> gates;
};

// .zxc line format: "qubits N" then one gate per line (h/x/z/t q, rz ANGLE q,
// cnot C T); '#' comments. Throws SyntaxError / IndexError with line numbers.
Circuit parse_circuit(std::string_view text);

std::string print_circuit(const Circuit& c);

// A single gate application widened to all n wires. Qubit 0 is the top wire.
// Non-adjacent CNOTs route the distant qubit next to the other one with
// arbitrary swaps, apply the adjacent form, and route back.
Diagram gate_to_zx(const Gate& g, std::size_t n);

// Left-to-right composition of the per-gate diagrams; the empty circuit is
// n_wire(n).
Diagram ingest(const Circuit& c);

// Independent oracle: the 2^n x 2^n unitary from standard gate matrices,
// qubit 0 as the most significant bit.
CMatrix unitary(const Circuit& c);

} // namespace zx

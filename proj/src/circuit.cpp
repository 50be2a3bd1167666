#include "zx/circuit.hpp"

#include "zx/text.hpp"

#include <cmath>
#include <sstream>

namespace zx {

namespace {

std::size_t parse_qubit(const std::string& token, std::size_t n, std::size_t line) {
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw SyntaxError("line " + std::to_string(line) + ": bad qubit index '" + token +
                              "'");
        }
    }
    if (token.empty()) {
        throw SyntaxError("line " + std::to_string(line) + ": missing qubit index");
    }
    const std::size_t q = std::strtoull(token.c_str(), nullptr, 10);
    if (q >= n) {
        throw IndexError("line " + std::to_string(line) + ": qubit " + token +
                         " out of range for " + std::to_string(n) + " qubits");
    }
    return q;
}

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string word;
    while (in >> word) {
        words.push_back(word);
    }
    return words;
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool saw_header = false;
    std::size_t line_no = 0;
    std::istringstream input{std::string(text)};
    std::string raw;
    while (std::getline(input, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::vector<std::string> words = split_words(raw);
        if (words.empty()) {
            continue;
        }
        if (!saw_header) {
            if (words.size() != 2 || words[0] != "qubits") {
                throw SyntaxError("line " + std::to_string(line_no) +
                                  ": expected 'qubits N' header");
            }
            circuit.qubits = std::strtoull(words[1].c_str(), nullptr, 10);
            if (circuit.qubits == 0) {
                throw SyntaxError("line " + std::to_string(line_no) +
                                  ": circuits need at least one qubit");
            }
            saw_header = true;
            continue;
        }
        const std::string& op = words[0];
        if ((op == "h" || op == "x" || op == "z" || op == "t") && words.size() == 2) {
            const std::size_t q = parse_qubit(words[1], circuit.qubits, line_no);
            if (op == "h") circuit.gates.push_back(Gate::h(q));
            else if (op == "x") circuit.gates.push_back(Gate::x(q));
            else if (op == "z") circuit.gates.push_back(Gate::z(q));
            else circuit.gates.push_back(Gate::t(q));
            continue;
        }
        if (op == "rz" && words.size() == 3) {
            Angle a;
            try {
                a = parse_angle(words[1]);
            } catch (const SyntaxError& e) {
                throw SyntaxError("line " + std::to_string(line_no) + ": " + e.detail());
            }
            circuit.gates.push_back(Gate::rz(a, parse_qubit(words[2], circuit.qubits, line_no)));
            continue;
        }
        if (op == "cnot" && words.size() == 3) {
            const std::size_t c = parse_qubit(words[1], circuit.qubits, line_no);
            const std::size_t t = parse_qubit(words[2], circuit.qubits, line_no);
            if (c == t) {
                throw IndexError("line " + std::to_string(line_no) +
                                 ": cnot control equals target");
            }
            circuit.gates.push_back(Gate::cnot(c, t));
            continue;
        }
        throw SyntaxError("line " + std::to_string(line_no) + ": bad gate line '" + raw + "'");
    }
    if (!saw_header) {
        throw SyntaxError("missing 'qubits N' header");
    }
    return circuit;
}

std::string print_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.qubits) + "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case Gate::Kind::H:
            out += "h " + std::to_string(g.q0) + "\n";
            break;
        case Gate::Kind::X:
            out += "x " + std::to_string(g.q0) + "\n";
            break;
        case Gate::Kind::Z:
            out += "z " + std::to_string(g.q0) + "\n";
            break;
        case Gate::Kind::T:
            out += "t " + std::to_string(g.q0) + "\n";
            break;
        case Gate::Kind::Rz:
            out += "rz " + g.phase.str() + " " + std::to_string(g.q0) + "\n";
            break;
        case Gate::Kind::Cnot:
            out += "cnot " + std::to_string(g.q0) + " " + std::to_string(g.q1) + "\n";
            break;
        }
    }
    return out;
}

namespace {

Diagram single_qubit_body(const Gate& g) {
    switch (g.kind) {
    case Gate::Kind::H:
        return Diagram::box();
    case Gate::Kind::X:
        return Diagram::x(1, 1, Angle::pi());
    case Gate::Kind::Z:
        return Diagram::z(1, 1, Angle::pi());
    case Gate::Kind::T:
        return Diagram::z(1, 1, Angle::rational(1, 4));
    case Gate::Kind::Rz:
        return Diagram::z(1, 1, g.phase);
    default:
        throw DimError("not a single-qubit gate");
    }
}

// Control on the top wire, target below it.
Diagram cnot_adjacent_body() {
    return Diagram::compose(
        Diagram::stack(Diagram::z(1, 2, Angle::zero()), Diagram::wire()),
        Diagram::stack(Diagram::wire(), Diagram::x(2, 1, Angle::zero())));
}

// Control on the bottom wire: the adjacent body conjugated with a swap.
Diagram cnot_reversed_body() {
    return Diagram::compose(Diagram::swap(),
                            Diagram::compose(cnot_adjacent_body(), Diagram::swap()));
}

// Zero paddings are skipped so a full-height gate stays syntactically bare.
Diagram pad_window(std::size_t top, std::size_t bot, const Diagram& body) {
    Diagram d = body;
    if (bot > 0) {
        d = pad_bot(bot, d);
    }
    if (top > 0) {
        d = pad_top(top, d);
    }
    return d;
}

} // namespace

Diagram gate_to_zx(const Gate& g, std::size_t n) {
    if (g.kind != Gate::Kind::Cnot) {
        if (g.q0 >= n) {
            throw IndexError("qubit " + std::to_string(g.q0) + " out of range");
        }
        return pad_window(g.q0, n - g.q0 - 1, single_qubit_body(g));
    }

    if (g.q0 >= n || g.q1 >= n || g.q0 == g.q1) {
        throw IndexError("bad cnot qubits " + std::to_string(g.q0) + "," + std::to_string(g.q1));
    }
    const std::size_t lo = std::min(g.q0, g.q1);
    const std::size_t hi = std::max(g.q0, g.q1);
    const bool control_on_top = g.q0 < g.q1;

    if (hi == lo + 1) {
        return pad_window(lo, n - hi - 1,
                          control_on_top ? cnot_adjacent_body() : cnot_reversed_body());
    }

    // Route the distant qubit adjacent to the window's top wire, apply the
    // adjacent form, then route back. The a_swap spans the window minus its
    // top wire, exchanging the wires at lo+1 and hi.
    const std::size_t width = hi - lo + 1;
    const Diagram route = Diagram::stack(Diagram::wire(), a_swap(width - 1));
    const Diagram body = Diagram::stack(
        control_on_top ? cnot_adjacent_body() : cnot_reversed_body(), n_wire(width - 2));
    const Diagram window = Diagram::compose(Diagram::compose(route, body), route);
    return pad_window(lo, n - hi - 1, window);
}

Diagram ingest(const Circuit& c) {
    if (c.gates.empty()) {
        return n_wire(c.qubits);
    }
    Diagram acc = gate_to_zx(c.gates.front(), c.qubits);
    for (std::size_t i = 1; i < c.gates.size(); ++i) {
        acc = Diagram::compose(acc, gate_to_zx(c.gates[i], c.qubits));
    }
    return acc;
}

namespace {

CMatrix gate_matrix(const Gate& g) {
    const Angle pi = Angle::pi();
    switch (g.kind) {
    case Gate::Kind::H:
        return hadamard();
    case Gate::Kind::X: {
        CMatrix m(2, 2);
        m.at(0, 1) = 1.0;
        m.at(1, 0) = 1.0;
        return m;
    }
    case Gate::Kind::Z: {
        CMatrix m = CMatrix::identity(2);
        m.at(1, 1) = -1.0;
        return m;
    }
    case Gate::Kind::T:
    case Gate::Kind::Rz: {
        const double v = g.kind == Gate::Kind::T ? pi.value() / 4 : g.phase.value();
        CMatrix m = CMatrix::identity(2);
        m.at(1, 1) = {std::cos(v), std::sin(v)};
        return m;
    }
    default:
        throw DimError("not a single-qubit gate");
    }
}

} // namespace

CMatrix unitary(const Circuit& c) {
    const std::size_t n = c.qubits;
    const std::size_t dim = std::size_t{1} << n;
    CMatrix acc = CMatrix::identity(dim);
    for (const Gate& g : c.gates) {
        CMatrix full;
        if (g.kind == Gate::Kind::Cnot) {
            // Basis permutation: flip the target bit wherever the control bit
            // is set. Qubit q sits at bit position n-1-q.
            full = CMatrix(dim, dim);
            const std::size_t cbit = std::size_t{1} << (n - 1 - g.q0);
            const std::size_t tbit = std::size_t{1} << (n - 1 - g.q1);
            for (std::size_t b = 0; b < dim; ++b) {
                const std::size_t dest = (b & cbit) ? (b ^ tbit) : b;
                full.at(dest, b) = 1.0;
            }
        } else {
            full = kron(kron(CMatrix::identity(std::size_t{1} << g.q0), gate_matrix(g)),
                        CMatrix::identity(std::size_t{1} << (n - g.q0 - 1)));
        }
        acc = matmul(full, acc);
    }
    return acc;
}

} // namespace zx

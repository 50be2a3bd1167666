#include "zx/gen.hpp"

#include <array>

namespace zx {

std::size_t TermGen::nat(std::size_t lo, std::size_t hi) {
    if (hi < lo) {
        hi = lo;
    }
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Angle TermGen::angle() {
    static const std::array<Angle, 6> fixed = {
        Angle::zero(),         Angle::rational(1, 4), Angle::rational(1, 2),
        Angle::rational(1, 1), Angle::rational(5, 4), Angle::rational(3, 2),
    };
    const std::size_t pick = nat(0, fixed.size() + 1);
    if (pick < fixed.size()) {
        return fixed[pick];
    }
    const std::int64_t den = static_cast<std::int64_t>(nat(1, 8));
    const std::int64_t num = static_cast<std::int64_t>(nat(0, 2 * den - 1));
    return Angle::rational(num, den);
}

Diagram TermGen::diagram(std::size_t inputs, std::size_t outputs, std::size_t size_budget) {
    const bool can_split = size_budget > 1;
    // 0..3 leaf, 4 stack, 5 compose, 6 cast
    const std::size_t choice = can_split ? nat(0, 6) : 0;

    if (choice == 4) {
        const std::size_t in0 = nat(0, inputs);
        const std::size_t out0 = nat(0, outputs);
        const std::size_t budget = size_budget / 2;
        return Diagram::stack(diagram(in0, out0, budget),
                              diagram(inputs - in0, outputs - out0, budget));
    }
    if (choice == 5) {
        const std::size_t mid = nat(0, std::max<std::size_t>(inputs, outputs) + 1);
        const std::size_t budget = size_budget / 2;
        return Diagram::compose(diagram(inputs, mid, budget), diagram(mid, outputs, budget));
    }
    if (choice == 6) {
        return Diagram::cast(inputs, outputs, diagram(inputs, outputs, size_budget - 1));
    }

    // Leaf: prefer the special generators when the dimensions allow, falling
    // back to a spider, which exists for every shape.
    const std::size_t flavor = nat(0, 5);
    if (inputs == 0 && outputs == 0 && flavor < 3) {
        return Diagram::empty();
    }
    if (inputs == 1 && outputs == 1) {
        if (flavor == 0) {
            return Diagram::wire();
        }
        if (flavor == 1) {
            return Diagram::box();
        }
    }
    if (inputs == 2 && outputs == 0 && flavor < 3) {
        return Diagram::cap();
    }
    if (inputs == 0 && outputs == 2 && flavor < 3) {
        return Diagram::cup();
    }
    if (inputs == 2 && outputs == 2 && flavor == 0) {
        return Diagram::swap();
    }
    if (inputs == outputs && flavor == 2) {
        return n_wire(inputs);
    }
    return nat(0, 1) == 0 ? Diagram::z(inputs, outputs, angle())
                          : Diagram::x(inputs, outputs, angle());
}

Diagram TermGen::diagram(std::size_t size_budget, std::size_t max_wires) {
    return diagram(nat(0, max_wires), nat(0, max_wires), size_budget);
}

} // namespace zx

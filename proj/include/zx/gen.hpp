#pragma once

#include "zx/diagram.hpp"

#include <cstdint>
#include <random>

namespace zx {

// Random well-formed term generation, shared by the rule soundness harness,
// the refutation search, and property tests.
class TermGen {
public:
    explicit TermGen(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    std::size_t nat(std::size_t lo, std::size_t hi);

    // Catalog sample set plus occasional random exact rationals of pi.
    Angle angle();

    // Well-formed diagram with the given dimensions.
    Diagram diagram(std::size_t inputs, std::size_t outputs, std::size_t size_budget);

    // Well-formed diagram with random dimensions <= max_wires.
    Diagram diagram(std::size_t size_budget, std::size_t max_wires);

private:
    std::mt19937_64 rng_;
};

} // namespace zx

#pragma once

#include "zx/angle.hpp"
#include "zx/errors.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace zx {

enum class DiagramKind {
    Empty,
    Wire,
    Box,
    Cap,
    Cup,
    Swap,
    ZSpider,
    XSpider,
    Stack,
    Compose,
    Cast,
};

struct Dims {
    std::size_t in = 0;
    std::size_t out = 0;
    bool operator==(const Dims&) const = default;
};

// Address of a subterm: 0 selects the left/first child (or the body of a
// Cast), 1 the right/second child.
using Path = std::vector<std::size_t>;

std::string path_str(const Path& path);
Path parse_path(const std::string& text); // "0.1.0"; "" is the root

// An immutable block-structured ZX term. Handles are cheap to copy; nodes are
// shared, never mutated.
class Diagram {
public:
    Diagram(); // Empty

    static Diagram empty();
    static Diagram wire();
    static Diagram box();
    static Diagram cap();
    static Diagram cup();
    static Diagram swap();
    static Diagram z(std::size_t inputs, std::size_t outputs, Angle phase);
    static Diagram x(std::size_t inputs, std::size_t outputs, Angle phase);
    static Diagram stack(Diagram top, Diagram bottom);
    static Diagram compose(Diagram first, Diagram second);
    static Diagram cast(std::size_t inputs, std::size_t outputs, Diagram inner);

    DiagramKind kind() const;

    // Spider fields; Cast declared dimensions.
    std::size_t field_in() const;
    std::size_t field_out() const;
    Angle phase() const;

    // Children. first() is also the body of a Cast.
    Diagram first() const;
    Diagram second() const;

    std::size_t child_count() const;
    std::size_t size() const; // constructor count

    bool operator==(const Diagram& rhs) const;
    bool operator!=(const Diagram& rhs) const { return !(*this == rhs); }

private:
    struct Node;
    explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Diagram leaf(DiagramKind kind);
    std::shared_ptr<const Node> node_;
};

// Validated (inputs, outputs). Throws ComposeMismatchError / CastMismatchError
// with the offending path on ill-formed terms.
Dims dims(const Diagram& d);

// n wires stacked, right-associated. n_wire(0) = Empty, n_wire(1) = Wire.
Diagram n_wire(std::size_t n);

// n copies of a 1-to-1 diagram stacked, right-associated. Throws DimError if
// dims(d) != (1,1).
Diagram n_stack1(std::size_t n, const Diagram& d);

Diagram pad_top(std::size_t k, const Diagram& d);
Diagram pad_bot(std::size_t k, const Diagram& d);

// Cyclic shift on n wires sending the top qubit to the bottom position and
// moving every other qubit up by one. n >= 1.
Diagram zx_shift(std::size_t n);

// Swap of the first and last of n wires, identity elsewhere. n >= 2.
Diagram a_swap(std::size_t n);

// Z <-> X on every spider, structure otherwise untouched. Involution.
Diagram colorswap(const Diagram& d);

// Reverses every composition and flips spider/cast dimensions; Cap <-> Cup.
// Involution; semantics is the matrix transpose.
Diagram transpose(const Diagram& d);

// transpose with all spider phases negated; semantics is the conjugate
// transpose.
Diagram adjoint(const Diagram& d);

// Subterm access and functional replacement. Throw PathInvalidError.
Diagram subterm_at(const Diagram& d, const Path& path);
Diagram replace_at(const Diagram& d, const Path& path, const Diagram& replacement);

} // namespace zx

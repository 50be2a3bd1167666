#pragma once

#include "zx/diagram.hpp"
#include "zx/dim_expr.hpp"

#include <map>
#include <memory>
#include <string>

namespace zx::structural {

// Term language of the structural-equivalence engine: the concrete
// constructors with dimensions generalized to DimExpr, plus first-class
// n-wire bundles and metavariables standing for arbitrary diagrams.
enum class SymKind {
    Empty,
    Wire,
    Box,
    Cap,
    Cup,
    Swap,
    ZSpider,
    XSpider,
    NWire,
    MetaVar,
    Stack,
    Compose,
    Cast,
};

struct SymDims {
    DimExpr in;
    DimExpr out;
};

class SymDiagram {
public:
    SymDiagram(); // Empty

    static SymDiagram empty();
    static SymDiagram wire();
    static SymDiagram box();
    static SymDiagram cap();
    static SymDiagram cup();
    static SymDiagram swap();
    static SymDiagram z(DimExpr inputs, DimExpr outputs, Angle phase);
    static SymDiagram x(DimExpr inputs, DimExpr outputs, Angle phase);
    static SymDiagram n_wire(DimExpr count);
    static SymDiagram metavar(std::string name, DimExpr inputs, DimExpr outputs);
    static SymDiagram stack(SymDiagram top, SymDiagram bottom);
    static SymDiagram compose(SymDiagram first, SymDiagram second);
    static SymDiagram cast(DimExpr inputs, DimExpr outputs, SymDiagram inner);

    SymKind kind() const;
    const DimExpr& field_in() const;  // spider/cast dims; NWire count
    const DimExpr& field_out() const;
    Angle phase() const;
    const std::string& name() const; // metavar

    SymDiagram first() const;
    SymDiagram second() const;
    std::size_t child_count() const;

    bool operator==(const SymDiagram& rhs) const;
    bool operator!=(const SymDiagram& rhs) const { return !(*this == rhs); }

private:
    struct Node;
    explicit SymDiagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static SymDiagram leaf(SymKind kind);
    std::shared_ptr<const Node> node_;
};

// Symbolic dimensions, validated: Compose needs out(first) dim-equal
// in(second), Cast targets must be dim-equal to the inner dims. Throws
// ComposeMismatchError / CastMismatchError with symbolic detail.
SymDims sym_dims(const SymDiagram& d);

// Embedding of concrete terms (dimensions become constants).
SymDiagram to_sym(const Diagram& d);

struct Assignment {
    std::map<std::string, std::uint64_t> dims;
    std::map<std::string, Diagram> terms;
};

// Substitutes dimension variables and metavariables, yielding a concrete
// term. Throws DimError on unbound names or a metavariable whose bound term
// has the wrong dimensions.
Diagram concretize(const SymDiagram& d, const Assignment& assignment);

// Free dimension variables and metavariables (with their symbolic dims).
void collect_vars(const SymDiagram& d, std::map<std::string, bool>& dim_vars,
                  std::map<std::string, SymDims>& metavars);

} // namespace zx::structural

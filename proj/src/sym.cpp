#include "zx/sym.hpp"

#include "zx/errors.hpp"

#include <utility>

namespace zx::structural {

struct SymDiagram::Node {
    SymKind kind = SymKind::Empty;
    DimExpr in;
    DimExpr out;
    Angle phase;
    std::string name;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
};

SymDiagram SymDiagram::leaf(SymKind kind) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    return SymDiagram(std::move(node));
}

SymDiagram::SymDiagram() : node_(leaf(SymKind::Empty).node_) {}

SymDiagram SymDiagram::empty() { return leaf(SymKind::Empty); }
SymDiagram SymDiagram::wire() { return leaf(SymKind::Wire); }
SymDiagram SymDiagram::box() { return leaf(SymKind::Box); }
SymDiagram SymDiagram::cap() { return leaf(SymKind::Cap); }
SymDiagram SymDiagram::cup() { return leaf(SymKind::Cup); }
SymDiagram SymDiagram::swap() { return leaf(SymKind::Swap); }

SymDiagram SymDiagram::z(DimExpr inputs, DimExpr outputs, Angle phase) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::ZSpider;
    node->in = std::move(inputs);
    node->out = std::move(outputs);
    node->phase = phase;
    return SymDiagram(std::move(node));
}

SymDiagram SymDiagram::x(DimExpr inputs, DimExpr outputs, Angle phase) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::XSpider;
    node->in = std::move(inputs);
    node->out = std::move(outputs);
    node->phase = phase;
    return SymDiagram(std::move(node));
}

SymDiagram SymDiagram::n_wire(DimExpr count) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::NWire;
    node->in = count;
    node->out = std::move(count);
    return SymDiagram(std::move(node));
}

SymDiagram SymDiagram::metavar(std::string name, DimExpr inputs, DimExpr outputs) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::MetaVar;
    node->name = std::move(name);
    node->in = std::move(inputs);
    node->out = std::move(outputs);
    return SymDiagram(std::move(node));
}

SymDiagram SymDiagram::stack(SymDiagram top, SymDiagram bottom) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::Stack;
    node->first = std::move(top.node_);
    node->second = std::move(bottom.node_);
    return SymDiagram(std::move(node));
}

SymDiagram SymDiagram::compose(SymDiagram first, SymDiagram second) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::Compose;
    node->first = std::move(first.node_);
    node->second = std::move(second.node_);
    return SymDiagram(std::move(node));
}

SymDiagram SymDiagram::cast(DimExpr inputs, DimExpr outputs, SymDiagram inner) {
    auto node = std::make_shared<Node>();
    node->kind = SymKind::Cast;
    node->in = std::move(inputs);
    node->out = std::move(outputs);
    node->first = std::move(inner.node_);
    return SymDiagram(std::move(node));
}

SymKind SymDiagram::kind() const { return node_->kind; }
const DimExpr& SymDiagram::field_in() const { return node_->in; }
const DimExpr& SymDiagram::field_out() const { return node_->out; }
Angle SymDiagram::phase() const { return node_->phase; }
const std::string& SymDiagram::name() const { return node_->name; }

SymDiagram SymDiagram::first() const {
    return node_->first ? SymDiagram(node_->first) : SymDiagram();
}

SymDiagram SymDiagram::second() const {
    return node_->second ? SymDiagram(node_->second) : SymDiagram();
}

std::size_t SymDiagram::child_count() const {
    switch (node_->kind) {
    case SymKind::Stack:
    case SymKind::Compose:
        return 2;
    case SymKind::Cast:
        return 1;
    default:
        return 0;
    }
}

bool SymDiagram::operator==(const SymDiagram& rhs) const {
    if (node_ == rhs.node_) {
        return true;
    }
    const Node& a = *node_;
    const Node& b = *rhs.node_;
    if (a.kind != b.kind || a.phase != b.phase || a.name != b.name) {
        return false;
    }
    if (!(a.in == b.in) || !(a.out == b.out)) {
        return false;
    }
    if (static_cast<bool>(a.first) != static_cast<bool>(b.first) ||
        static_cast<bool>(a.second) != static_cast<bool>(b.second)) {
        return false;
    }
    if (a.first && !(first() == rhs.first())) {
        return false;
    }
    if (a.second && !(second() == rhs.second())) {
        return false;
    }
    return true;
}

SymDims sym_dims(const SymDiagram& d) {
    switch (d.kind()) {
    case SymKind::Empty:
        return {DimExpr::constant(0), DimExpr::constant(0)};
    case SymKind::Wire:
    case SymKind::Box:
        return {DimExpr::constant(1), DimExpr::constant(1)};
    case SymKind::Cap:
        return {DimExpr::constant(2), DimExpr::constant(0)};
    case SymKind::Cup:
        return {DimExpr::constant(0), DimExpr::constant(2)};
    case SymKind::Swap:
        return {DimExpr::constant(2), DimExpr::constant(2)};
    case SymKind::ZSpider:
    case SymKind::XSpider:
    case SymKind::MetaVar:
    case SymKind::NWire:
        return {d.field_in(), d.field_out()};
    case SymKind::Stack: {
        SymDims a = sym_dims(d.first());
        SymDims b = sym_dims(d.second());
        return {DimExpr::add(a.in, b.in), DimExpr::add(a.out, b.out)};
    }
    case SymKind::Compose: {
        SymDims a = sym_dims(d.first());
        SymDims b = sym_dims(d.second());
        if (!dim_equal(a.out, b.in)) {
            throw ComposeMismatchError(0, 0,
                                       "symbolic: " + a.out.str() + " vs " + b.in.str());
        }
        return {a.in, b.out};
    }
    case SymKind::Cast: {
        SymDims inner = sym_dims(d.first());
        if (!dim_equal(d.field_in(), inner.in) || !dim_equal(d.field_out(), inner.out)) {
            throw CastMismatchError("(" + d.field_in().str() + "," + d.field_out().str() + ")",
                                    "(" + inner.in.str() + "," + inner.out.str() + ")",
                                    "symbolic");
        }
        return inner;
    }
    }
    throw DimError("unreachable symbolic diagram kind");
}

SymDiagram to_sym(const Diagram& d) {
    switch (d.kind()) {
    case DiagramKind::Empty:
        return SymDiagram::empty();
    case DiagramKind::Wire:
        return SymDiagram::wire();
    case DiagramKind::Box:
        return SymDiagram::box();
    case DiagramKind::Cap:
        return SymDiagram::cap();
    case DiagramKind::Cup:
        return SymDiagram::cup();
    case DiagramKind::Swap:
        return SymDiagram::swap();
    case DiagramKind::ZSpider:
        return SymDiagram::z(DimExpr::constant(d.field_in()), DimExpr::constant(d.field_out()),
                             d.phase());
    case DiagramKind::XSpider:
        return SymDiagram::x(DimExpr::constant(d.field_in()), DimExpr::constant(d.field_out()),
                             d.phase());
    case DiagramKind::Stack:
        return SymDiagram::stack(to_sym(d.first()), to_sym(d.second()));
    case DiagramKind::Compose:
        return SymDiagram::compose(to_sym(d.first()), to_sym(d.second()));
    case DiagramKind::Cast:
        return SymDiagram::cast(DimExpr::constant(d.field_in()),
                                DimExpr::constant(d.field_out()), to_sym(d.first()));
    }
    throw DimError("unreachable diagram kind");
}

Diagram concretize(const SymDiagram& d, const Assignment& assignment) {
    switch (d.kind()) {
    case SymKind::Empty:
        return Diagram::empty();
    case SymKind::Wire:
        return Diagram::wire();
    case SymKind::Box:
        return Diagram::box();
    case SymKind::Cap:
        return Diagram::cap();
    case SymKind::Cup:
        return Diagram::cup();
    case SymKind::Swap:
        return Diagram::swap();
    case SymKind::ZSpider:
        return Diagram::z(eval_dim(d.field_in(), assignment.dims),
                          eval_dim(d.field_out(), assignment.dims), d.phase());
    case SymKind::XSpider:
        return Diagram::x(eval_dim(d.field_in(), assignment.dims),
                          eval_dim(d.field_out(), assignment.dims), d.phase());
    case SymKind::NWire:
        return n_wire(eval_dim(d.field_in(), assignment.dims));
    case SymKind::MetaVar: {
        auto it = assignment.terms.find(d.name());
        if (it == assignment.terms.end()) {
            throw DimError("unbound metavariable '" + d.name() + "'");
        }
        const Dims want{eval_dim(d.field_in(), assignment.dims),
                        eval_dim(d.field_out(), assignment.dims)};
        if (dims(it->second) != want) {
            throw DimError("metavariable '" + d.name() + "' bound to a term of the wrong dims");
        }
        return it->second;
    }
    case SymKind::Stack:
        return Diagram::stack(concretize(d.first(), assignment),
                              concretize(d.second(), assignment));
    case SymKind::Compose:
        return Diagram::compose(concretize(d.first(), assignment),
                                concretize(d.second(), assignment));
    case SymKind::Cast:
        return Diagram::cast(eval_dim(d.field_in(), assignment.dims),
                             eval_dim(d.field_out(), assignment.dims),
                             concretize(d.first(), assignment));
    }
    throw DimError("unreachable symbolic diagram kind");
}

namespace {

void collect_dim_vars(const DimExpr& e, std::map<std::string, bool>& out) {
    switch (e.kind()) {
    case DimExpr::Kind::Var:
        out[e.name()] = true;
        return;
    case DimExpr::Kind::Add:
    case DimExpr::Kind::Mul:
        collect_dim_vars(e.left(), out);
        collect_dim_vars(e.right(), out);
        return;
    default:
        return;
    }
}

} // namespace

void collect_vars(const SymDiagram& d, std::map<std::string, bool>& dim_vars,
                  std::map<std::string, SymDims>& metavars) {
    switch (d.kind()) {
    case SymKind::ZSpider:
    case SymKind::XSpider:
        collect_dim_vars(d.field_in(), dim_vars);
        collect_dim_vars(d.field_out(), dim_vars);
        return;
    case SymKind::NWire:
        collect_dim_vars(d.field_in(), dim_vars);
        return;
    case SymKind::MetaVar:
        collect_dim_vars(d.field_in(), dim_vars);
        collect_dim_vars(d.field_out(), dim_vars);
        metavars.emplace(d.name(), SymDims{d.field_in(), d.field_out()});
        return;
    case SymKind::Cast:
        collect_dim_vars(d.field_in(), dim_vars);
        collect_dim_vars(d.field_out(), dim_vars);
        collect_vars(d.first(), dim_vars, metavars);
        return;
    case SymKind::Stack:
    case SymKind::Compose:
        collect_vars(d.first(), dim_vars, metavars);
        collect_vars(d.second(), dim_vars, metavars);
        return;
    default:
        return;
    }
}

} // namespace zx::structural

#include "zx/diagram.hpp"

#include <utility>

namespace zx {

struct Diagram::Node {
    DiagramKind kind = DiagramKind::Empty;
    std::size_t in = 0;  // spider inputs / cast declared inputs
    std::size_t out = 0; // spider outputs / cast declared outputs
    Angle phase;
    std::shared_ptr<const Node> first;
    std::shared_ptr<const Node> second;
};

Diagram Diagram::leaf(DiagramKind kind) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    return Diagram(std::move(node));
}

Diagram::Diagram() : node_(leaf(DiagramKind::Empty).node_) {}

Diagram Diagram::empty() { return leaf(DiagramKind::Empty); }
Diagram Diagram::wire() { return leaf(DiagramKind::Wire); }
Diagram Diagram::box() { return leaf(DiagramKind::Box); }
Diagram Diagram::cap() { return leaf(DiagramKind::Cap); }
Diagram Diagram::cup() { return leaf(DiagramKind::Cup); }
Diagram Diagram::swap() { return leaf(DiagramKind::Swap); }

Diagram Diagram::z(std::size_t inputs, std::size_t outputs, Angle phase) {
    auto node = std::make_shared<Node>();
    node->kind = DiagramKind::ZSpider;
    node->in = inputs;
    node->out = outputs;
    node->phase = phase;
    return Diagram(std::move(node));
}

Diagram Diagram::x(std::size_t inputs, std::size_t outputs, Angle phase) {
    auto node = std::make_shared<Node>();
    node->kind = DiagramKind::XSpider;
    node->in = inputs;
    node->out = outputs;
    node->phase = phase;
    return Diagram(std::move(node));
}

Diagram Diagram::stack(Diagram top, Diagram bottom) {
    auto node = std::make_shared<Node>();
    node->kind = DiagramKind::Stack;
    node->first = std::move(top.node_);
    node->second = std::move(bottom.node_);
    return Diagram(std::move(node));
}

Diagram Diagram::compose(Diagram first, Diagram second) {
    auto node = std::make_shared<Node>();
    node->kind = DiagramKind::Compose;
    node->first = std::move(first.node_);
    node->second = std::move(second.node_);
    return Diagram(std::move(node));
}

Diagram Diagram::cast(std::size_t inputs, std::size_t outputs, Diagram inner) {
    auto node = std::make_shared<Node>();
    node->kind = DiagramKind::Cast;
    node->in = inputs;
    node->out = outputs;
    node->first = std::move(inner.node_);
    return Diagram(std::move(node));
}

DiagramKind Diagram::kind() const { return node_->kind; }
std::size_t Diagram::field_in() const { return node_->in; }
std::size_t Diagram::field_out() const { return node_->out; }
Angle Diagram::phase() const { return node_->phase; }

Diagram Diagram::first() const { return node_->first ? Diagram(node_->first) : Diagram(); }
Diagram Diagram::second() const { return node_->second ? Diagram(node_->second) : Diagram(); }

std::size_t Diagram::child_count() const {
    switch (node_->kind) {
    case DiagramKind::Stack:
    case DiagramKind::Compose:
        return 2;
    case DiagramKind::Cast:
        return 1;
    default:
        return 0;
    }
}

std::size_t Diagram::size() const {
    std::size_t total = 1;
    if (node_->first) {
        total += Diagram(node_->first).size();
    }
    if (node_->second) {
        total += Diagram(node_->second).size();
    }
    return total;
}

bool Diagram::operator==(const Diagram& rhs) const {
    if (node_ == rhs.node_) {
        return true;
    }
    const Node& a = *node_;
    const Node& b = *rhs.node_;
    if (a.kind != b.kind || a.in != b.in || a.out != b.out || a.phase != b.phase) {
        return false;
    }
    if (static_cast<bool>(a.first) != static_cast<bool>(b.first) ||
        static_cast<bool>(a.second) != static_cast<bool>(b.second)) {
        return false;
    }
    if (a.first && !(Diagram(a.first) == Diagram(b.first))) {
        return false;
    }
    if (a.second && !(Diagram(a.second) == Diagram(b.second))) {
        return false;
    }
    return true;
}

std::string path_str(const Path& path) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i > 0) {
            out += '.';
        }
        out += std::to_string(path[i]);
    }
    return out;
}

Path parse_path(const std::string& text) {
    Path path;
    if (text.empty()) {
        return path;
    }
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t dot = text.find('.', pos);
        std::string piece = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (piece != "0" && piece != "1") {
            throw SyntaxError("bad path component '" + piece + "' in '" + text + "'");
        }
        path.push_back(piece == "0" ? 0 : 1);
        if (dot == std::string::npos) {
            break;
        }
        pos = dot + 1;
    }
    return path;
}

namespace {

Dims dims_impl(const Diagram& d, Path& path) {
    switch (d.kind()) {
    case DiagramKind::Empty:
        return {0, 0};
    case DiagramKind::Wire:
    case DiagramKind::Box:
        return {1, 1};
    case DiagramKind::Cap:
        return {2, 0};
    case DiagramKind::Cup:
        return {0, 2};
    case DiagramKind::Swap:
        return {2, 2};
    case DiagramKind::ZSpider:
    case DiagramKind::XSpider:
        return {d.field_in(), d.field_out()};
    case DiagramKind::Stack: {
        path.push_back(0);
        Dims a = dims_impl(d.first(), path);
        path.back() = 1;
        Dims b = dims_impl(d.second(), path);
        path.pop_back();
        return {a.in + b.in, a.out + b.out};
    }
    case DiagramKind::Compose: {
        path.push_back(0);
        Dims a = dims_impl(d.first(), path);
        path.back() = 1;
        Dims b = dims_impl(d.second(), path);
        path.pop_back();
        if (a.out != b.in) {
            throw ComposeMismatchError(a.out, b.in, path_str(path));
        }
        return {a.in, b.out};
    }
    case DiagramKind::Cast: {
        path.push_back(0);
        Dims inner = dims_impl(d.first(), path);
        path.pop_back();
        if (inner.in != d.field_in() || inner.out != d.field_out()) {
            throw CastMismatchError("(" + std::to_string(d.field_in()) + "," +
                                        std::to_string(d.field_out()) + ")",
                                    "(" + std::to_string(inner.in) + "," +
                                        std::to_string(inner.out) + ")",
                                    path_str(path));
        }
        return inner;
    }
    }
    throw DimError("unreachable diagram kind");
}

} // namespace

Dims dims(const Diagram& d) {
    Path path;
    return dims_impl(d, path);
}

Diagram n_wire(std::size_t n) {
    if (n == 0) {
        return Diagram::empty();
    }
    Diagram acc = Diagram::wire();
    for (std::size_t i = 1; i < n; ++i) {
        acc = Diagram::stack(Diagram::wire(), acc);
    }
    return acc;
}

Diagram n_stack1(std::size_t n, const Diagram& d) {
    if (dims(d) != Dims{1, 1}) {
        throw DimError("n_stack1 requires a 1-to-1 diagram");
    }
    if (n == 0) {
        return Diagram::empty();
    }
    Diagram acc = d;
    for (std::size_t i = 1; i < n; ++i) {
        acc = Diagram::stack(d, acc);
    }
    return acc;
}

Diagram pad_top(std::size_t k, const Diagram& d) { return Diagram::stack(n_wire(k), d); }
Diagram pad_bot(std::size_t k, const Diagram& d) { return Diagram::stack(d, n_wire(k)); }

Diagram zx_shift(std::size_t n) {
    if (n == 0) {
        throw DimError("zx_shift requires at least one wire");
    }
    if (n == 1) {
        return Diagram::wire();
    }
    // Adjacent-swap layers, topmost swap first; zero paddings are skipped so
    // zx_shift(2) is a bare swap.
    auto layer = [n](std::size_t i) {
        Diagram d = Diagram::swap();
        if (n - i - 2 > 0) {
            d = pad_bot(n - i - 2, d);
        }
        if (i > 0) {
            d = pad_top(i, d);
        }
        return d;
    };
    Diagram acc = layer(0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        acc = Diagram::compose(acc, layer(i));
    }
    return acc;
}

Diagram a_swap(std::size_t n) {
    if (n < 2) {
        throw DimError("a_swap requires at least two wires");
    }
    return Diagram::compose(zx_shift(n),
                            Diagram::stack(transpose(zx_shift(n - 1)), Diagram::wire()));
}

Diagram colorswap(const Diagram& d) {
    switch (d.kind()) {
    case DiagramKind::ZSpider:
        return Diagram::x(d.field_in(), d.field_out(), d.phase());
    case DiagramKind::XSpider:
        return Diagram::z(d.field_in(), d.field_out(), d.phase());
    case DiagramKind::Stack:
        return Diagram::stack(colorswap(d.first()), colorswap(d.second()));
    case DiagramKind::Compose:
        return Diagram::compose(colorswap(d.first()), colorswap(d.second()));
    case DiagramKind::Cast:
        return Diagram::cast(d.field_in(), d.field_out(), colorswap(d.first()));
    default:
        return d;
    }
}

Diagram transpose(const Diagram& d) {
    switch (d.kind()) {
    case DiagramKind::Cap:
        return Diagram::cup();
    case DiagramKind::Cup:
        return Diagram::cap();
    case DiagramKind::ZSpider:
        return Diagram::z(d.field_out(), d.field_in(), d.phase());
    case DiagramKind::XSpider:
        return Diagram::x(d.field_out(), d.field_in(), d.phase());
    case DiagramKind::Stack:
        return Diagram::stack(transpose(d.first()), transpose(d.second()));
    case DiagramKind::Compose:
        return Diagram::compose(transpose(d.second()), transpose(d.first()));
    case DiagramKind::Cast:
        return Diagram::cast(d.field_out(), d.field_in(), transpose(d.first()));
    default:
        return d;
    }
}

namespace {

Diagram negate_phases(const Diagram& d) {
    switch (d.kind()) {
    case DiagramKind::ZSpider:
        return Diagram::z(d.field_in(), d.field_out(), -d.phase());
    case DiagramKind::XSpider:
        return Diagram::x(d.field_in(), d.field_out(), -d.phase());
    case DiagramKind::Stack:
        return Diagram::stack(negate_phases(d.first()), negate_phases(d.second()));
    case DiagramKind::Compose:
        return Diagram::compose(negate_phases(d.first()), negate_phases(d.second()));
    case DiagramKind::Cast:
        return Diagram::cast(d.field_in(), d.field_out(), negate_phases(d.first()));
    default:
        return d;
    }
}

} // namespace

Diagram adjoint(const Diagram& d) { return negate_phases(transpose(d)); }

Diagram subterm_at(const Diagram& d, const Path& path) {
    Diagram cur = d;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= cur.child_count()) {
            throw PathInvalidError(path_str(path));
        }
        cur = path[i] == 0 ? cur.first() : cur.second();
    }
    return cur;
}

Diagram replace_at(const Diagram& d, const Path& path, const Diagram& replacement) {
    if (path.empty()) {
        return replacement;
    }
    if (path.front() >= d.child_count()) {
        throw PathInvalidError(path_str(path));
    }
    Path rest(path.begin() + 1, path.end());
    switch (d.kind()) {
    case DiagramKind::Stack:
        return path.front() == 0
                   ? Diagram::stack(replace_at(d.first(), rest, replacement), d.second())
                   : Diagram::stack(d.first(), replace_at(d.second(), rest, replacement));
    case DiagramKind::Compose:
        return path.front() == 0
                   ? Diagram::compose(replace_at(d.first(), rest, replacement), d.second())
                   : Diagram::compose(d.first(), replace_at(d.second(), rest, replacement));
    case DiagramKind::Cast:
        return Diagram::cast(d.field_in(), d.field_out(),
                             replace_at(d.first(), rest, replacement));
    default:
        throw PathInvalidError(path_str(path));
    }
}

} // namespace zx

#include "zx/dim_expr.hpp"

#include "zx/errors.hpp"

#include <algorithm>
#include <functional>

namespace zx::structural {

struct DimExpr::Node {
    Kind kind = Kind::Const;
    std::uint64_t value = 0;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};

DimExpr::DimExpr() : node_(std::make_shared<Node>()) {}

DimExpr DimExpr::constant(std::uint64_t value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Const;
    node->value = value;
    return DimExpr(std::move(node));
}

DimExpr DimExpr::var(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Var;
    node->name = std::move(name);
    return DimExpr(std::move(node));
}

DimExpr DimExpr::add(DimExpr lhs, DimExpr rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Add;
    node->left = std::move(lhs.node_);
    node->right = std::move(rhs.node_);
    return DimExpr(std::move(node));
}

DimExpr DimExpr::mul(DimExpr lhs, DimExpr rhs) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Mul;
    node->left = std::move(lhs.node_);
    node->right = std::move(rhs.node_);
    return DimExpr(std::move(node));
}

DimExpr::Kind DimExpr::kind() const { return node_->kind; }
std::uint64_t DimExpr::value() const { return node_->value; }
const std::string& DimExpr::name() const { return node_->name; }
DimExpr DimExpr::left() const { return DimExpr(node_->left); }
DimExpr DimExpr::right() const { return DimExpr(node_->right); }

bool DimExpr::operator==(const DimExpr& rhs) const {
    if (node_ == rhs.node_) {
        return true;
    }
    if (node_->kind != rhs.node_->kind) {
        return false;
    }
    switch (node_->kind) {
    case Kind::Const:
        return node_->value == rhs.node_->value;
    case Kind::Var:
        return node_->name == rhs.node_->name;
    case Kind::Add:
    case Kind::Mul:
        return left() == rhs.left() && right() == rhs.right();
    }
    return false;
}

std::string DimExpr::str() const {
    switch (node_->kind) {
    case Kind::Const:
        return std::to_string(node_->value);
    case Kind::Var:
        return node_->name;
    case Kind::Add:
        return "(+ " + left().str() + " " + right().str() + ")";
    case Kind::Mul:
        return "(* " + left().str() + " " + right().str() + ")";
    }
    return "?";
}

std::size_t DimExpr::hash() const {
    std::size_t h = static_cast<std::size_t>(node_->kind) * 0x9e3779b97f4a7c15ull;
    switch (node_->kind) {
    case Kind::Const:
        return h ^ std::hash<std::uint64_t>{}(node_->value);
    case Kind::Var:
        return h ^ std::hash<std::string>{}(node_->name);
    case Kind::Add:
    case Kind::Mul:
        h = h * 1000003u ^ left().hash();
        h = h * 1000003u ^ right().hash();
        return h;
    }
    return h;
}

Poly to_poly(const DimExpr& e) {
    switch (e.kind()) {
    case DimExpr::Kind::Const:
        if (e.value() == 0) {
            return {};
        }
        return {{Monomial{}, e.value()}};
    case DimExpr::Kind::Var:
        return {{Monomial{e.name()}, 1}};
    case DimExpr::Kind::Add: {
        Poly p = to_poly(e.left());
        for (const auto& [mono, coeff] : to_poly(e.right())) {
            p[mono] += coeff;
        }
        return p;
    }
    case DimExpr::Kind::Mul: {
        const Poly a = to_poly(e.left());
        const Poly b = to_poly(e.right());
        Poly p;
        for (const auto& [ma, ca] : a) {
            for (const auto& [mb, cb] : b) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                p[m] += ca * cb;
            }
        }
        return p;
    }
    }
    return {};
}

DimExpr from_poly(const Poly& p) {
    std::vector<DimExpr> terms;
    for (const auto& [mono, coeff] : p) {
        if (coeff == 0) {
            continue;
        }
        if (mono.empty()) {
            terms.push_back(DimExpr::constant(coeff));
            continue;
        }
        DimExpr product = DimExpr::var(mono.back());
        for (std::size_t i = mono.size() - 1; i-- > 0;) {
            product = DimExpr::mul(DimExpr::var(mono[i]), product);
        }
        terms.push_back(coeff == 1 ? product : DimExpr::mul(DimExpr::constant(coeff), product));
    }
    if (terms.empty()) {
        return DimExpr::constant(0);
    }
    DimExpr sum = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        sum = DimExpr::add(terms[i], sum);
    }
    return sum;
}

DimExpr normalize_dim(const DimExpr& e) { return from_poly(to_poly(e)); }

bool dim_equal(const DimExpr& a, const DimExpr& b) { return to_poly(a) == to_poly(b); }

std::uint64_t eval_dim(const DimExpr& e, const std::map<std::string, std::uint64_t>& env) {
    switch (e.kind()) {
    case DimExpr::Kind::Const:
        return e.value();
    case DimExpr::Kind::Var: {
        auto it = env.find(e.name());
        if (it == env.end()) {
            throw DimError("unbound dimension variable '" + e.name() + "'");
        }
        return it->second;
    }
    case DimExpr::Kind::Add:
        return eval_dim(e.left(), env) + eval_dim(e.right(), env);
    case DimExpr::Kind::Mul:
        return eval_dim(e.left(), env) * eval_dim(e.right(), env);
    }
    throw DimError("unreachable dim expression kind");
}

} // namespace zx::structural

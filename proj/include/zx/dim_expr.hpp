#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace zx::structural {

// Natural-number expression used as a symbolic dimension: constants,
// variables, sums, and products. Values are immutable.
class DimExpr {
public:
    enum class Kind { Const, Var, Add, Mul };

    DimExpr(); // Const 0

    static DimExpr constant(std::uint64_t value);
    static DimExpr var(std::string name);
    static DimExpr add(DimExpr lhs, DimExpr rhs);
    static DimExpr mul(DimExpr lhs, DimExpr rhs);

    Kind kind() const;
    std::uint64_t value() const;       // Const
    const std::string& name() const;   // Var
    DimExpr left() const;              // Add/Mul
    DimExpr right() const;

    bool operator==(const DimExpr& rhs) const; // structural
    bool operator!=(const DimExpr& rhs) const { return !(*this == rhs); }

    std::string str() const; // s-expression: 3, n, (+ a b), (* a b)

    std::size_t hash() const;

private:
    struct Node;
    explicit DimExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// A monomial is the sorted multiset of its variables; a polynomial maps
// monomials to coefficients. This is the canonical form behind dim equality.
using Monomial = std::vector<std::string>;
using Poly = std::map<Monomial, std::uint64_t>;

Poly to_poly(const DimExpr& e);
DimExpr from_poly(const Poly& p);

// Canonical polynomial form: constants folded, identities removed, terms
// sorted. Idempotent.
DimExpr normalize_dim(const DimExpr& e);

bool dim_equal(const DimExpr& a, const DimExpr& b);

// Evaluate under a variable assignment; throws zx::DimError on unbound names.
std::uint64_t eval_dim(const DimExpr& e, const std::map<std::string, std::uint64_t>& env);

} // namespace zx::structural

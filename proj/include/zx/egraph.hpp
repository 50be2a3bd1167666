#pragma once

#include "zx/sym.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace zx::structural {

struct Limits {
    std::size_t max_iters = 30;
    std::size_t max_nodes = 100000;
    // When nonzero, match application order is shuffled with this seed; the
    // verdict must not depend on it.
    std::uint64_t shuffle_seed = 0;
};

struct SaturationStats {
    std::size_t iterations = 0;
    std::size_t nodes = 0;
    std::size_t classes = 0;
    bool budget_exceeded = false;
};

struct StructEqResult {
    bool equal = false;
    SaturationStats stats;
    std::string note; // "dim-mismatch" when the verdict needed no saturation
};

using ClassId = std::uint32_t;
inline constexpr ClassId kNoClass = 0xffffffffu;

// Hashconsed e-node. Dimension payloads are stored in canonical polynomial
// form so that dim-equal spiders collide on insertion.
struct ENode {
    SymKind kind = SymKind::Empty;
    DimExpr dim_a; // spider in / cast in / nwire count
    DimExpr dim_b; // spider out / cast out
    Angle angle;
    std::string name; // metavar
    ClassId child0 = kNoClass;
    ClassId child1 = kNoClass;

    bool operator==(const ENode& o) const;
};

struct ENodeHash {
    std::size_t operator()(const ENode& n) const;
};

// Congruence-closed term bank with an (in, out) dimension analysis per class.
// Classes with different analyses can never merge; the structural laws
// preserve this and it is asserted.
class EGraph {
public:
    ClassId add_term(const SymDiagram& term);
    ClassId find(ClassId id) const;
    bool same_class(ClassId a, ClassId b) const { return find(a) == find(b); }

    const DimExpr& class_in(ClassId id) const;
    const DimExpr& class_out(ClassId id) const;

    std::size_t node_count() const { return hashcons_.size(); }
    std::size_t class_count() const;

    // Applies the structural law set until fixpoint, the two roots meet, or a
    // budget trips. Returns true iff the roots ended up in one class.
    bool saturate(const Limits& limits, ClassId root1, ClassId root2, SaturationStats& stats);

    // Exposed for tests.
    ClassId add_node(ENode node);
    void merge(ClassId a, ClassId b);
    void rebuild();

private:
    struct ClassData {
        std::vector<ENode> nodes;
        DimExpr in;
        DimExpr out;
    };

    ENode canonical(ENode node) const;
    void analysis_for(const ENode& node, DimExpr& in, DimExpr& out) const;
    void match_all(std::vector<std::function<void()>>& actions);

    std::vector<ClassId> parent_;
    std::vector<ClassData> classes_;
    std::unordered_map<ENode, ClassId, ENodeHash> hashcons_;
    std::size_t unions_ = 0;
};

// Decides structural equality up to associativity, distributivity, identity
// and cast laws. NotProved (equal = false) is not a disproof.
StructEqResult struct_equiv(const SymDiagram& t1, const SymDiagram& t2, const Limits& limits = {});

// The structural law set, stated declaratively with canonical metavariables.
// The saturation engine implements exactly these; the concrete-instantiation
// bridge test checks each one against the matrix semantics.
struct StructuralLaw {
    std::string name;
    SymDiagram lhs;
    SymDiagram rhs;
};
const std::vector<StructuralLaw>& structural_laws();

// Heuristic counterexample search for NotProved pairs: assign random concrete
// values to dimension variables and metavariables and compare the evaluated
// matrices. Finding a difference refutes equivalence; finding none proves
// nothing.
struct RefuteOutcome {
    bool refuted = false;
    std::string witness;
};
RefuteOutcome refute_by_instantiation(const SymDiagram& t1, const SymDiagram& t2,
                                      std::size_t trials, std::uint64_t seed);

} // namespace zx::structural

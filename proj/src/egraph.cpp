#include "zx/egraph.hpp"

#include "zx/errors.hpp"
#include "zx/gen.hpp"
#include "zx/semantics.hpp"
#include "zx/text.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace zx::structural {

bool ENode::operator==(const ENode& o) const {
    return kind == o.kind && child0 == o.child0 && child1 == o.child1 && angle == o.angle &&
           name == o.name && dim_a == o.dim_a && dim_b == o.dim_b;
}

std::size_t ENodeHash::operator()(const ENode& n) const {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x9e3779b97f4a7c15ull;
    h = h * 1000003u ^ n.dim_a.hash();
    h = h * 1000003u ^ n.dim_b.hash();
    h = h * 1000003u ^ n.angle.hash();
    h = h * 1000003u ^ std::hash<std::string>{}(n.name);
    h = h * 1000003u ^ n.child0;
    h = h * 1000003u ^ n.child1;
    return h;
}

ClassId EGraph::find(ClassId id) const {
    while (parent_[id] != id) {
        id = parent_[id];
    }
    return id;
}

ENode EGraph::canonical(ENode node) const {
    if (node.child0 != kNoClass) {
        node.child0 = find(node.child0);
    }
    if (node.child1 != kNoClass) {
        node.child1 = find(node.child1);
    }
    return node;
}

void EGraph::analysis_for(const ENode& node, DimExpr& in, DimExpr& out) const {
    switch (node.kind) {
    case SymKind::Empty:
        in = DimExpr::constant(0);
        out = DimExpr::constant(0);
        return;
    case SymKind::Wire:
    case SymKind::Box:
        in = DimExpr::constant(1);
        out = DimExpr::constant(1);
        return;
    case SymKind::Cap:
        in = DimExpr::constant(2);
        out = DimExpr::constant(0);
        return;
    case SymKind::Cup:
        in = DimExpr::constant(0);
        out = DimExpr::constant(2);
        return;
    case SymKind::Swap:
        in = DimExpr::constant(2);
        out = DimExpr::constant(2);
        return;
    case SymKind::ZSpider:
    case SymKind::XSpider:
    case SymKind::MetaVar:
        in = node.dim_a;
        out = node.dim_b;
        return;
    case SymKind::NWire:
        in = node.dim_a;
        out = node.dim_a;
        return;
    case SymKind::Stack: {
        const ClassData& c0 = classes_[find(node.child0)];
        const ClassData& c1 = classes_[find(node.child1)];
        in = normalize_dim(DimExpr::add(c0.in, c1.in));
        out = normalize_dim(DimExpr::add(c0.out, c1.out));
        return;
    }
    case SymKind::Compose: {
        const ClassData& c0 = classes_[find(node.child0)];
        const ClassData& c1 = classes_[find(node.child1)];
        if (!(c0.out == c1.in)) {
            throw ComposeMismatchError(0, 0, "e-graph: " + c0.out.str() + " vs " + c1.in.str());
        }
        in = c0.in;
        out = c1.out;
        return;
    }
    case SymKind::Cast: {
        const ClassData& c0 = classes_[find(node.child0)];
        if (!(node.dim_a == c0.in) || !(node.dim_b == c0.out)) {
            throw CastMismatchError("(" + node.dim_a.str() + "," + node.dim_b.str() + ")",
                                    "(" + c0.in.str() + "," + c0.out.str() + ")", "e-graph");
        }
        in = node.dim_a;
        out = node.dim_b;
        return;
    }
    }
    throw DimError("unreachable e-node kind");
}

ClassId EGraph::add_node(ENode node) {
    node = canonical(node);
    auto it = hashcons_.find(node);
    if (it != hashcons_.end()) {
        return find(it->second);
    }
    ClassData data;
    analysis_for(node, data.in, data.out);
    data.nodes.push_back(node);
    const ClassId id = static_cast<ClassId>(classes_.size());
    classes_.push_back(std::move(data));
    parent_.push_back(id);
    hashcons_.emplace(std::move(node), id);
    return id;
}

void EGraph::merge(ClassId a, ClassId b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return;
    }
    const ClassData& ca = classes_[a];
    const ClassData& cb = classes_[b];
    if (!(ca.in == cb.in) || !(ca.out == cb.out)) {
        throw std::logic_error("e-graph merged classes with different dimensions: (" +
                               ca.in.str() + "," + ca.out.str() + ") vs (" + cb.in.str() + "," +
                               cb.out.str() + ")");
    }
    if (classes_[a].nodes.size() < classes_[b].nodes.size()) {
        std::swap(a, b);
    }
    parent_[b] = a;
    auto& na = classes_[a].nodes;
    auto& nb = classes_[b].nodes;
    na.insert(na.end(), nb.begin(), nb.end());
    nb.clear();
    nb.shrink_to_fit();
    ++unions_;
}

void EGraph::rebuild() {
    // Re-canonicalize every node and merge classes that became congruent.
    // Repeats until no merge fires; simple and adequate at corpus scale.
    bool changed = true;
    while (changed) {
        changed = false;
        std::unordered_map<ENode, ClassId, ENodeHash> fresh;
        fresh.reserve(hashcons_.size());
        std::vector<std::pair<ClassId, ClassId>> pending;
        for (ClassId id = 0; id < classes_.size(); ++id) {
            if (find(id) != id) {
                continue;
            }
            for (const ENode& raw : classes_[id].nodes) {
                ENode node = canonical(raw);
                auto [it, inserted] = fresh.emplace(node, id);
                if (!inserted && find(it->second) != id) {
                    pending.emplace_back(it->second, id);
                }
            }
        }
        for (const auto& [a, b] : pending) {
            merge(a, b);
            changed = true;
        }
        if (!changed) {
            // Deduplicate node lists against the canonical map.
            for (ClassId id = 0; id < classes_.size(); ++id) {
                if (find(id) != id || classes_[id].nodes.empty()) {
                    continue;
                }
                std::vector<ENode> dedup;
                for (const ENode& raw : classes_[id].nodes) {
                    ENode node = canonical(raw);
                    if (std::find(dedup.begin(), dedup.end(), node) == dedup.end()) {
                        dedup.push_back(std::move(node));
                    }
                }
                classes_[id].nodes = std::move(dedup);
            }
            hashcons_ = std::move(fresh);
        }
    }
}

ClassId EGraph::add_term(const SymDiagram& term) {
    ENode node;
    node.kind = term.kind();
    switch (term.kind()) {
    case SymKind::ZSpider:
    case SymKind::XSpider:
        node.dim_a = normalize_dim(term.field_in());
        node.dim_b = normalize_dim(term.field_out());
        node.angle = term.phase();
        break;
    case SymKind::NWire:
        node.dim_a = normalize_dim(term.field_in());
        node.dim_b = node.dim_a;
        break;
    case SymKind::MetaVar:
        node.dim_a = normalize_dim(term.field_in());
        node.dim_b = normalize_dim(term.field_out());
        node.name = term.name();
        break;
    case SymKind::Stack:
    case SymKind::Compose:
        node.child0 = add_term(term.first());
        node.child1 = add_term(term.second());
        break;
    case SymKind::Cast:
        node.dim_a = normalize_dim(term.field_in());
        node.dim_b = normalize_dim(term.field_out());
        node.child0 = add_term(term.first());
        break;
    default:
        break;
    }
    return add_node(std::move(node));
}

const DimExpr& EGraph::class_in(ClassId id) const { return classes_[find(id)].in; }
const DimExpr& EGraph::class_out(ClassId id) const { return classes_[find(id)].out; }

std::size_t EGraph::class_count() const {
    std::size_t count = 0;
    for (ClassId id = 0; id < classes_.size(); ++id) {
        if (find(id) == id) {
            ++count;
        }
    }
    return count;
}

namespace {

bool class_has_kind(const std::vector<ENode>& nodes, SymKind kind) {
    for (const ENode& n : nodes) {
        if (n.kind == kind) {
            return true;
        }
    }
    return false;
}

const ENode* first_of_kind(const std::vector<ENode>& nodes, SymKind kind) {
    for (const ENode& n : nodes) {
        if (n.kind == kind) {
            return &n;
        }
    }
    return nullptr;
}

} // namespace

void EGraph::match_all(std::vector<std::function<void()>>& actions) {
    const DimExpr zero = DimExpr::constant(0);
    const DimExpr one = DimExpr::constant(1);

    for (ClassId id = 0; id < classes_.size(); ++id) {
        if (find(id) != id) {
            continue;
        }
        const ClassId cls = id;
        // Snapshot: actions run after the scan.
        const std::vector<ENode> nodes = classes_[id].nodes;

        // Identity introductions run once per class, not per node.
        {
            const DimExpr in = classes_[id].in;
            const DimExpr out = classes_[id].out;
            actions.push_back([this, cls, in, out]() {
                ENode empty;
                empty.kind = SymKind::Empty;
                const ClassId empty_cls = add_node(empty);

                ENode stack_l;
                stack_l.kind = SymKind::Stack;
                stack_l.child0 = empty_cls;
                stack_l.child1 = cls;
                merge(cls, add_node(stack_l));

                ENode stack_r;
                stack_r.kind = SymKind::Stack;
                stack_r.child0 = cls;
                stack_r.child1 = empty_cls;
                merge(cls, add_node(stack_r));

                ENode nw_in;
                nw_in.kind = SymKind::NWire;
                nw_in.dim_a = in;
                nw_in.dim_b = in;
                const ClassId nw_in_cls = add_node(nw_in);
                ENode comp_l;
                comp_l.kind = SymKind::Compose;
                comp_l.child0 = nw_in_cls;
                comp_l.child1 = cls;
                merge(cls, add_node(comp_l));

                ENode nw_out;
                nw_out.kind = SymKind::NWire;
                nw_out.dim_a = out;
                nw_out.dim_b = out;
                const ClassId nw_out_cls = add_node(nw_out);
                ENode comp_r;
                comp_r.kind = SymKind::Compose;
                comp_r.child0 = cls;
                comp_r.child1 = nw_out_cls;
                merge(cls, add_node(comp_r));
            });
        }

        for (const ENode& node : nodes) {
            switch (node.kind) {
            case SymKind::Empty:
                // Empty <-> NWire 0
                actions.push_back([this, cls, zero]() {
                    ENode nw;
                    nw.kind = SymKind::NWire;
                    nw.dim_a = zero;
                    nw.dim_b = zero;
                    merge(cls, add_node(nw));
                });
                break;
            case SymKind::Wire:
                // Wire <-> NWire 1
                actions.push_back([this, cls, one]() {
                    ENode nw;
                    nw.kind = SymKind::NWire;
                    nw.dim_a = one;
                    nw.dim_b = one;
                    merge(cls, add_node(nw));
                });
                break;
            case SymKind::NWire:
                if (node.dim_a == zero) {
                    actions.push_back([this, cls]() {
                        ENode e;
                        e.kind = SymKind::Empty;
                        merge(cls, add_node(e));
                    });
                } else if (node.dim_a == one) {
                    actions.push_back([this, cls]() {
                        ENode w;
                        w.kind = SymKind::Wire;
                        merge(cls, add_node(w));
                    });
                }
                break;
            case SymKind::Cast:
                // Every well-formed cast is erasable: its targets are
                // dim-equal to the inner dims by construction. Cast merging
                // then falls out of congruence, so no separate law runs here.
                actions.push_back([this, cls, inner = node.child0]() { merge(cls, inner); });
                break;
            case SymKind::Compose: {
                const ClassId left = find(node.child0);
                const ClassId right = find(node.child1);
                // compose_assoc, both directions
                for (const ENode& l : classes_[left].nodes) {
                    if (l.kind == SymKind::Compose) {
                        actions.push_back([this, cls, a = l.child0, b = l.child1, c = right]() {
                            ENode bc;
                            bc.kind = SymKind::Compose;
                            bc.child0 = b;
                            bc.child1 = c;
                            ENode abc;
                            abc.kind = SymKind::Compose;
                            abc.child0 = a;
                            abc.child1 = add_node(bc);
                            merge(cls, add_node(abc));
                        });
                    }
                }
                for (const ENode& r : classes_[right].nodes) {
                    if (r.kind == SymKind::Compose) {
                        actions.push_back([this, cls, a = left, b = r.child0, c = r.child1]() {
                            ENode ab;
                            ab.kind = SymKind::Compose;
                            ab.child0 = a;
                            ab.child1 = b;
                            ENode abc;
                            abc.kind = SymKind::Compose;
                            abc.child0 = add_node(ab);
                            abc.child1 = c;
                            merge(cls, add_node(abc));
                        });
                    }
                }
                // compose identities: a class containing an n-wire bundle (or
                // Empty, or a lone Wire) is an identity process.
                const bool left_id = class_has_kind(classes_[left].nodes, SymKind::NWire) ||
                                     class_has_kind(classes_[left].nodes, SymKind::Empty) ||
                                     class_has_kind(classes_[left].nodes, SymKind::Wire);
                if (left_id) {
                    actions.push_back([this, cls, right]() { merge(cls, right); });
                }
                const bool right_id = class_has_kind(classes_[right].nodes, SymKind::NWire) ||
                                      class_has_kind(classes_[right].nodes, SymKind::Empty) ||
                                      class_has_kind(classes_[right].nodes, SymKind::Wire);
                if (right_id) {
                    actions.push_back([this, cls, left]() { merge(cls, left); });
                }
                // stack_compose_distr, guarded componentwise
                for (const ENode& l : classes_[left].nodes) {
                    if (l.kind != SymKind::Stack) {
                        continue;
                    }
                    for (const ENode& r : classes_[right].nodes) {
                        if (r.kind != SymKind::Stack) {
                            continue;
                        }
                        const ClassId a = find(l.child0), c = find(l.child1);
                        const ClassId b = find(r.child0), d = find(r.child1);
                        if (!(classes_[a].out == classes_[b].in) ||
                            !(classes_[c].out == classes_[d].in)) {
                            continue;
                        }
                        actions.push_back([this, cls, a, b, c, d]() {
                            ENode ab;
                            ab.kind = SymKind::Compose;
                            ab.child0 = a;
                            ab.child1 = b;
                            ENode cd;
                            cd.kind = SymKind::Compose;
                            cd.child0 = c;
                            cd.child1 = d;
                            ENode st;
                            st.kind = SymKind::Stack;
                            st.child0 = add_node(ab);
                            st.child1 = add_node(cd);
                            merge(cls, add_node(st));
                        });
                    }
                }
                break;
            }
            case SymKind::Stack: {
                const ClassId left = find(node.child0);
                const ClassId right = find(node.child1);
                // stack_assoc, both directions
                for (const ENode& l : classes_[left].nodes) {
                    if (l.kind == SymKind::Stack) {
                        actions.push_back([this, cls, a = l.child0, b = l.child1, c = right]() {
                            ENode bc;
                            bc.kind = SymKind::Stack;
                            bc.child0 = b;
                            bc.child1 = c;
                            ENode abc;
                            abc.kind = SymKind::Stack;
                            abc.child0 = a;
                            abc.child1 = add_node(bc);
                            merge(cls, add_node(abc));
                        });
                    }
                }
                for (const ENode& r : classes_[right].nodes) {
                    if (r.kind == SymKind::Stack) {
                        actions.push_back([this, cls, a = left, b = r.child0, c = r.child1]() {
                            ENode ab;
                            ab.kind = SymKind::Stack;
                            ab.child0 = a;
                            ab.child1 = b;
                            ENode abc;
                            abc.kind = SymKind::Stack;
                            abc.child0 = add_node(ab);
                            abc.child1 = c;
                            merge(cls, add_node(abc));
                        });
                    }
                }
                // stack identities
                if (class_has_kind(classes_[left].nodes, SymKind::Empty)) {
                    actions.push_back([this, cls, right]() { merge(cls, right); });
                }
                if (class_has_kind(classes_[right].nodes, SymKind::Empty)) {
                    actions.push_back([this, cls, left]() { merge(cls, left); });
                }
                // n-wire fusion across a stack. Runs only toward the fused
                // bundle: the splitting direction would have to invent a
                // decomposition of the sum and is not pattern-realizable.
                {
                    const ENode* lnw = first_of_kind(classes_[left].nodes, SymKind::NWire);
                    const ENode* rnw = first_of_kind(classes_[right].nodes, SymKind::NWire);
                    if (lnw != nullptr && rnw != nullptr) {
                        const DimExpr sum =
                            normalize_dim(DimExpr::add(lnw->dim_a, rnw->dim_a));
                        actions.push_back([this, cls, sum]() {
                            ENode nw;
                            nw.kind = SymKind::NWire;
                            nw.dim_a = sum;
                            nw.dim_b = sum;
                            merge(cls, add_node(nw));
                        });
                    }
                }
                // distributivity, reassembling direction (no guard needed:
                // both composes are already well-formed)
                for (const ENode& l : classes_[left].nodes) {
                    if (l.kind != SymKind::Compose) {
                        continue;
                    }
                    for (const ENode& r : classes_[right].nodes) {
                        if (r.kind != SymKind::Compose) {
                            continue;
                        }
                        actions.push_back([this, cls, a = l.child0, b = l.child1, c = r.child0,
                                           d = r.child1]() {
                            ENode ac;
                            ac.kind = SymKind::Stack;
                            ac.child0 = a;
                            ac.child1 = c;
                            ENode bd;
                            bd.kind = SymKind::Stack;
                            bd.child0 = b;
                            bd.child1 = d;
                            ENode comp;
                            comp.kind = SymKind::Compose;
                            comp.child0 = add_node(ac);
                            comp.child1 = add_node(bd);
                            merge(cls, add_node(comp));
                        });
                    }
                }
                break;
            }
            default:
                break;
            }
        }
    }
}

bool EGraph::saturate(const Limits& limits, ClassId root1, ClassId root2, SaturationStats& stats) {
    rebuild();
    if (same_class(root1, root2)) {
        stats.nodes = node_count();
        stats.classes = class_count();
        return true;
    }
    for (std::size_t iter = 1; iter <= limits.max_iters; ++iter) {
        const std::size_t nodes_before = node_count();
        unions_ = 0;

        std::vector<std::function<void()>> actions;
        match_all(actions);
        if (limits.shuffle_seed != 0) {
            std::mt19937_64 rng(limits.shuffle_seed + iter);
            std::shuffle(actions.begin(), actions.end(), rng);
        }
        for (auto& action : actions) {
            action();
        }
        rebuild();
        stats.iterations = iter;

        if (same_class(root1, root2)) {
            break;
        }
        if (node_count() == nodes_before && unions_ == 0) {
            break; // fixpoint
        }
        if (node_count() > limits.max_nodes) {
            stats.budget_exceeded = true;
            break;
        }
    }
    stats.nodes = node_count();
    stats.classes = class_count();
    return same_class(root1, root2);
}

StructEqResult struct_equiv(const SymDiagram& t1, const SymDiagram& t2, const Limits& limits) {
    StructEqResult result;
    const SymDims d1 = sym_dims(t1); // validates well-formedness
    const SymDims d2 = sym_dims(t2);
    if (!dim_equal(d1.in, d2.in) || !dim_equal(d1.out, d2.out)) {
        result.note = "dim-mismatch";
        return result;
    }
    EGraph graph;
    const ClassId r1 = graph.add_term(t1);
    const ClassId r2 = graph.add_term(t2);
    result.equal = graph.saturate(limits, r1, r2, result.stats);
    return result;
}

const std::vector<StructuralLaw>& structural_laws() {
    using SD = SymDiagram;
    using DE = DimExpr;
    static const std::vector<StructuralLaw> laws = [] {
        auto v = [](const char* n) { return DE::var(n); };
        const SD a = SD::metavar("a", v("na"), v("ma"));
        const SD b = SD::metavar("b", v("ma"), v("mb"));   // composable after a
        const SD c = SD::metavar("c", v("mb"), v("mc"));   // composable after b
        const SD p = SD::metavar("p", v("np"), v("mp"));   // free shapes for stacking
        const SD q = SD::metavar("q", v("nq"), v("mq"));
        const SD r = SD::metavar("r", v("nr"), v("mr"));
        const SD s = SD::metavar("s", v("mq"), v("ms"));   // composable after q
        const SD t = SD::metavar("t", v("mr"), v("mt"));   // composable after r

        std::vector<StructuralLaw> laws;
        laws.push_back({"compose_assoc", SD::compose(SD::compose(a, b), c),
                        SD::compose(a, SD::compose(b, c))});
        laws.push_back(
            {"stack_assoc",
             SD::stack(SD::stack(p, q), r),
             SD::cast(DE::add(DE::add(v("np"), v("nq")), v("nr")),
                      DE::add(DE::add(v("mp"), v("mq")), v("mr")),
                      SD::stack(p, SD::stack(q, r)))});
        laws.push_back({"empty_to_nwire", SD::empty(), SD::n_wire(DE::constant(0))});
        laws.push_back({"wire_to_nwire", SD::wire(), SD::n_wire(DE::constant(1))});
        laws.push_back({"stack_empty_l", SD::stack(SD::empty(), p), p});
        laws.push_back({"stack_empty_r", SD::stack(p, SD::empty()), p});
        laws.push_back({"compose_id_l", SD::compose(SD::n_wire(v("np")), p), p});
        laws.push_back({"compose_id_r", SD::compose(p, SD::n_wire(v("mp"))), p});
        laws.push_back({"stack_compose_distr",
                        SD::compose(SD::stack(q, r), SD::stack(s, t)),
                        SD::stack(SD::compose(q, s), SD::compose(r, t))});
        laws.push_back({"nwire_stack", SD::stack(SD::n_wire(v("x")), SD::n_wire(v("y"))),
                        SD::n_wire(DE::add(v("x"), v("y")))});
        laws.push_back({"cast_elim", SD::cast(v("np"), v("mp"), p), p});
        laws.push_back({"cast_merge",
                        SD::cast(v("np"), v("mp"), SD::cast(v("np"), v("mp"), p)),
                        SD::cast(v("np"), v("mp"), p)});
        return laws;
    }();
    return laws;
}

RefuteOutcome refute_by_instantiation(const SymDiagram& t1, const SymDiagram& t2,
                                      std::size_t trials, std::uint64_t seed) {
    std::map<std::string, bool> dim_vars;
    std::map<std::string, SymDims> metavars;
    collect_vars(t1, dim_vars, metavars);
    collect_vars(t2, dim_vars, metavars);

    TermGen gen(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        Assignment assignment;
        for (const auto& [name, _] : dim_vars) {
            assignment.dims[name] = gen.nat(0, 3);
        }
        try {
            for (const auto& [name, sd] : metavars) {
                const std::size_t in = eval_dim(sd.in, assignment.dims);
                const std::size_t out = eval_dim(sd.out, assignment.dims);
                assignment.terms.emplace(name, gen.diagram(in, out, 4));
            }
            const Diagram c1 = concretize(t1, assignment);
            const Diagram c2 = concretize(t2, assignment);
            const CMatrix m1 = eval(c1);
            const CMatrix m2 = eval(c2);
            const double scale = std::max(1.0, std::max(max_abs(m1), max_abs(m2)));
            if (max_abs_diff(m1, m2) > 1e-6 * scale) {
                std::string witness;
                for (const auto& [name, value] : assignment.dims) {
                    witness += name + "=" + std::to_string(value) + " ";
                }
                for (const auto& [name, term] : assignment.terms) {
                    witness += name + "=" + print_term(term) + " ";
                }
                if (witness.empty()) {
                    witness = "the ground terms evaluate to different matrices";
                }
                return {true, witness};
            }
        } catch (const Error&) {
            continue; // inconsistent instantiation; try another
        }
    }
    return {false, ""};
}

} // namespace zx::structural

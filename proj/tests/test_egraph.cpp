#include "zx/egraph.hpp"
#include "zx/gen.hpp"
#include "zx/semantics.hpp"
#include "zx/text.hpp"

#include <doctest.h>

using namespace zx;
using namespace zx::structural;

namespace {

SymDiagram nw(const char* v) { return SymDiagram::n_wire(DimExpr::var(v)); }

} // namespace

TEST_CASE("reflexivity is settled by hashconsing alone") {
    const SymDiagram t = parse_sym_term("(compose (stack swap (nwire n)) (stack swap (nwire n)))");
    const StructEqResult res = struct_equiv(t, t);
    CHECK(res.equal);
    CHECK(res.stats.iterations == 0);
}

TEST_CASE("swap layers commute past a symbolic wire bundle") {
    const SymDiagram t1 = SymDiagram::compose(SymDiagram::stack(SymDiagram::swap(), nw("n")),
                                              SymDiagram::stack(SymDiagram::swap(), nw("n")));
    const SymDiagram t2 = SymDiagram::stack(
        SymDiagram::compose(SymDiagram::swap(), SymDiagram::swap()), nw("n"));
    const StructEqResult res = struct_equiv(t1, t2);
    CHECK(res.equal);
}

TEST_CASE("stack associativity through a cast") {
    const SymDiagram t1 = parse_sym_term(
        "(stack (stack (var a na ma) (var b nb mb)) (var c nc mc))");
    const SymDiagram t2 = parse_sym_term(
        "(cast (+ (+ na nb) nc) (+ (+ ma mb) mc)"
        " (stack (var a na ma) (stack (var b nb mb) (var c nc mc))))");
    CHECK(struct_equiv(t1, t2).equal);
}

TEST_CASE("identity insertion is proven away") {
    const SymDiagram a = parse_sym_term("(var a na ma)");
    const SymDiagram padded = parse_sym_term("(compose (nwire na) (var a na ma))");
    CHECK(struct_equiv(a, padded).equal);

    const SymDiagram stacked = parse_sym_term("(stack empty (var a na ma))");
    CHECK(struct_equiv(a, stacked).equal);
}

TEST_CASE("wire bundles fuse across stacks") {
    const SymDiagram t1 = parse_sym_term("(stack (nwire x) (nwire y))");
    const SymDiagram t2 = parse_sym_term("(nwire (+ x y))");
    CHECK(struct_equiv(t1, t2).equal);

    const SymDiagram t3 = parse_sym_term("(stack wire wire)");
    const SymDiagram t4 = parse_sym_term("(nwire 2)");
    CHECK(struct_equiv(t3, t4).equal);
}

TEST_CASE("semantically proportional but structurally distinct pairs stay unproven") {
    const char* pairs[][2] = {
        {"swap", "(nwire 2)"},
        {"(compose swap swap)", "(nwire 2)"},
        {"(Z 1 1 0)", "wire"},
        {"(compose box box)", "wire"},
        {"(compose (Z 1 2 0) (Z 2 1 0))", "(Z 1 1 0)"},
        {"(compose (Z 1 1 pi/2) (Z 1 1 pi/2))", "(Z 1 1 pi)"},
        {"(X 1 1 0)", "wire"},
    };
    for (const auto& pair : pairs) {
        CAPTURE(pair[0]);
        const StructEqResult res = struct_equiv(parse_sym_term(pair[0]), parse_sym_term(pair[1]));
        CHECK_FALSE(res.equal);
        CHECK_FALSE(res.stats.budget_exceeded);
    }
}

TEST_CASE("dimension mismatch short-circuits") {
    const StructEqResult res =
        struct_equiv(parse_sym_term("wire"), parse_sym_term("(nwire 2)"));
    CHECK_FALSE(res.equal);
    CHECK(res.note == "dim-mismatch");
}

TEST_CASE("verdicts are stable under budget growth") {
    const SymDiagram t1 = parse_sym_term(
        "(compose (compose (var a na ma) (var b ma mb)) (var c mb mc))");
    const SymDiagram t2 = parse_sym_term(
        "(compose (var a na ma) (compose (var b ma mb) (var c mb mc)))");
    Limits small{5, 1000};
    Limits large{50, 200000};
    CHECK(struct_equiv(t1, t2, small).equal);
    CHECK(struct_equiv(t1, t2, large).equal);
}

TEST_CASE("ill-formed symbolic composes are rejected up front") {
    const SymDiagram bad = SymDiagram::compose(SymDiagram::z(DimExpr::constant(1),
                                                             DimExpr::constant(2), Angle::zero()),
                                               SymDiagram::wire());
    CHECK_THROWS_AS(sym_dims(bad), ComposeMismatchError);
    CHECK_THROWS_AS(struct_equiv(bad, bad), ComposeMismatchError);
}

TEST_CASE("the e-graph analysis rejects merging different dims") {
    EGraph g;
    const ClassId a = g.add_term(parse_sym_term("wire"));
    const ClassId b = g.add_term(parse_sym_term("swap"));
    CHECK_THROWS_AS(g.merge(a, b), std::logic_error);
}

TEST_CASE("structural laws hold as exact matrix equalities when instantiated") {
    TermGen gen(2718);
    for (const StructuralLaw& law : structural_laws()) {
        CAPTURE(law.name);
        for (int trial = 0; trial < 20; ++trial) {
            std::map<std::string, bool> dim_vars;
            std::map<std::string, SymDims> metavars;
            collect_vars(law.lhs, dim_vars, metavars);
            collect_vars(law.rhs, dim_vars, metavars);

            Assignment assignment;
            for (const auto& [name, _] : dim_vars) {
                assignment.dims[name] = gen.nat(0, 3);
            }
            for (const auto& [name, sd] : metavars) {
                assignment.terms.emplace(
                    name, gen.diagram(eval_dim(sd.in, assignment.dims),
                                      eval_dim(sd.out, assignment.dims), 4));
            }
            const Diagram lhs = concretize(law.lhs, assignment);
            const Diagram rhs = concretize(law.rhs, assignment);
            CHECK(max_abs_diff(eval(lhs), eval(rhs)) <= 1e-12);
        }
    }
}

TEST_CASE("refutation finds concrete counterexamples") {
    const RefuteOutcome out = refute_by_instantiation(parse_sym_term("swap"),
                                                      parse_sym_term("(nwire 2)"), 20, 3);
    CHECK(out.refuted);

    // Blank spider against wire: equal matrices, so never refuted.
    const RefuteOutcome same = refute_by_instantiation(parse_sym_term("(Z 1 1 0)"),
                                                       parse_sym_term("wire"), 20, 3);
    CHECK_FALSE(same.refuted);
}

TEST_CASE("verdicts do not depend on match application order") {
    const char* pairs[][2] = {
        {"(compose (stack swap (nwire n)) (stack swap (nwire n)))",
         "(stack (compose swap swap) (nwire n))"},
        {"(stack (stack (var a na ma) (var b nb mb)) (var c nc mc))",
         "(stack (var a na ma) (stack (var b nb mb) (var c nc mc)))"},
        {"swap", "(nwire 2)"},
    };
    for (const auto& pair : pairs) {
        const SymDiagram t1 = parse_sym_term(pair[0]);
        const SymDiagram t2 = parse_sym_term(pair[1]);
        Limits plain;
        const bool reference = struct_equiv(t1, t2, plain).equal;
        for (std::uint64_t seed : {1u, 7u, 99u}) {
            Limits shuffled;
            shuffled.shuffle_seed = seed;
            CHECK(struct_equiv(t1, t2, shuffled).equal == reference);
        }
    }
}

TEST_CASE("random reassociations saturate to equal") {
    TermGen gen(515);
    for (int i = 0; i < 10; ++i) {
        // Build a compose chain of metavars, associate two different ways.
        const SymDiagram a = SymDiagram::metavar("a", DimExpr::var("d0"), DimExpr::var("d1"));
        const SymDiagram b = SymDiagram::metavar("b", DimExpr::var("d1"), DimExpr::var("d2"));
        const SymDiagram c = SymDiagram::metavar("c", DimExpr::var("d2"), DimExpr::var("d3"));
        const SymDiagram d = SymDiagram::metavar("d", DimExpr::var("d3"), DimExpr::var("d4"));
        const SymDiagram left = SymDiagram::compose(
            SymDiagram::compose(SymDiagram::compose(a, b), c), d);
        const SymDiagram right =
            SymDiagram::compose(a, SymDiagram::compose(b, SymDiagram::compose(c, d)));
        CHECK(struct_equiv(left, right).equal);
    }
}

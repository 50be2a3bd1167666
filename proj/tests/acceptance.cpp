// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runnable through ctest (test name "acceptance") or directly.

#include "zx/circuit.hpp"
#include "zx/egraph.hpp"
#include "zx/gen.hpp"
#include "zx/prop.hpp"
#include "zx/rules.hpp"
#include "zx/semantics.hpp"
#include "zx/text.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace zx;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string data_path(const std::string& name) {
    return std::string(TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CMatrix wire_permutation(std::size_t n, const std::vector<std::size_t>& perm) {
    const std::size_t dim = std::size_t{1} << n;
    CMatrix m(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        std::size_t image = 0;
        for (std::size_t w = 0; w < n; ++w) {
            image |= ((b >> (n - 1 - w)) & 1) << (n - 1 - perm[w]);
        }
        m.at(image, b) = 1.0;
    }
    return m;
}

// --- criterion 1: semantics clauses ----------------------------------------

void criterion_semantics(Check& c) {
    c.expect(eval(Diagram::empty()) == CMatrix::identity(1), "empty is the 1x1 identity");
    c.expect(eval(Diagram::wire()) == CMatrix::identity(2), "wire is the 2x2 identity");
    c.expect(eval(Diagram::box()) == hadamard(), "box is H");

    CMatrix cap(1, 4);
    cap.at(0, 0) = 1.0;
    cap.at(0, 3) = 1.0;
    c.expect(eval(Diagram::cap()) == cap, "cap is the row [1,0,0,1]");
    c.expect(eval(Diagram::cup()) == transposed(cap), "cup is the column [1,0,0,1]^T");
    c.expect(eval(Diagram::swap()) == wire_permutation(2, {1, 0}), "swap exchanges the qubits");

    c.expect(eval(Diagram::z(1, 1, Angle::zero())) == CMatrix::identity(2),
             "blank Z spider is the identity");
    const CMatrix z = eval(Diagram::z(2, 1, Angle::rational(1, 2)));
    c.expect(z.rows == 2 && z.cols == 4 && z.at(0, 0) == Complex{1, 0} &&
                 std::abs(z.at(1, 3) - Complex{0, 1}) <= 1e-12,
             "Z spider has its two entries");
    const CMatrix x = eval(Diagram::x(1, 1, Angle::pi()));
    c.expect(max_abs_diff(x, wire_permutation(1, {0})) > 0.5, "X pi is not the identity");
    CMatrix not_gate(2, 2);
    not_gate.at(0, 1) = 1.0;
    not_gate.at(1, 0) = 1.0;
    c.expect(max_abs_diff(x, not_gate) <= 1e-12, "X pi is NOT");

    c.expect(max_abs_diff(eval(Diagram::compose(Diagram::box(), Diagram::box())),
                          CMatrix::identity(2)) <= 1e-12,
             "compose multiplies in reverse order (HH = I)");
    c.expect(eval(Diagram::stack(Diagram::wire(), Diagram::box())) ==
                 kron(CMatrix::identity(2), hadamard()),
             "stack is the Kronecker product, top factor left");
    c.expect(eval(Diagram::cast(2, 0, Diagram::cap())) == eval(Diagram::cap()),
             "cast evaluates its body");
}

// --- criterion 2: dual Z-spider constructions -------------------------------

void criterion_dual_z(Check& c) {
    const Angle angles[] = {Angle::zero(), Angle::rational(1, 4), Angle::rational(1, 2),
                            Angle::pi(), Angle::rational(3, 2)};
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t m = 0; m <= 4; ++m) {
            for (const Angle& a : angles) {
                const double diff = max_abs_diff(z_matrix_braket(n, m, a), z_matrix_direct(n, m, a));
                c.expect(diff <= 1e-12, "braket vs direct at n=" + std::to_string(n) +
                                            " m=" + std::to_string(m) + " alpha=" + a.str());
            }
        }
    }
}

// --- criterion 3: rule soundness with closures -------------------------------

void criterion_rules(Check& c) {
    auto run = [&c](const Rule& rule) {
        const RuleReport report = check_rule(rule, 50, 4, 20260810, 1e-9);
        if (!report.ok()) {
            c.expect(false, report.rule + " failed at " + report.failures.front().params + ": " +
                                report.failures.front().detail);
        }
    };
    for (const Rule& rule : catalog()) {
        run(rule);
        run(colorswapped(rule));
        run(transposed(rule));
    }
}

// --- criterion 4: proportionality is an equivalence and congruence ----------

void criterion_prop_equivalence(Check& c) {
    TermGen gen(404);
    for (int i = 0; i < 200; ++i) {
        const std::size_t in = gen.nat(0, 5);
        const std::size_t out = gen.nat(0, 5);
        const Diagram d = gen.diagram(in, out, 6);
        const CMatrix m = eval(d);

        const PropResult self = proportional(d, d, 1e-9);
        c.expect(self.is_proportional() && std::abs(self.factor - Complex{1, 0}) <= 1e-9,
                 "reflexivity with witness 1");

        if (max_abs(m) <= 1e-9) {
            continue; // zero semantics: witness structure is trivial
        }
        const Complex c1{0.8, 0.6};
        const Complex c2{-1.2, 0.35};
        const CMatrix m2 = scaled(m, c1);
        const CMatrix m3 = scaled(m2, c2);

        const PropResult fwd = proportional_matrices(m2, m, 1e-9);
        const PropResult bwd = proportional_matrices(m, m2, 1e-9);
        c.expect(fwd.is_proportional() && bwd.is_proportional(), "symmetry verdicts");
        c.expect(std::abs(fwd.factor * bwd.factor - Complex{1, 0}) <= 1e-9,
                 "symmetric witnesses compose to 1");

        const PropResult ab = proportional_matrices(m3, m2, 1e-9);
        const PropResult ac = proportional_matrices(m3, m, 1e-9);
        c.expect(ab.is_proportional() && ac.is_proportional(), "transitivity verdicts");
        c.expect(std::abs(ac.factor - fwd.factor * ab.factor) <= 1e-9 * std::abs(ac.factor) + 1e-9,
                 "transitive witness is the product");
    }

    // Congruence: fused spider pairs under random contexts.
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = gen.nat(0, 2);
        const std::size_t m = gen.nat(0, 2);
        const Angle a = gen.angle();
        const Angle b = gen.angle();
        const Diagram d0 = Diagram::compose(Diagram::z(n, 1, a), Diagram::z(1, m, b));
        const Diagram d1 = Diagram::z(n, m, a + b);
        const Diagram e = gen.diagram(gen.nat(0, 2), gen.nat(0, 2), 4);
        c.expect(proportional(Diagram::stack(d0, e), Diagram::stack(d1, e), 1e-9)
                     .is_proportional(),
                 "stack congruence");
        const Diagram g = gen.diagram(m, gen.nat(0, 2), 4);
        c.expect(proportional(Diagram::compose(d0, g), Diagram::compose(d1, g), 1e-9)
                     .is_proportional(),
                 "compose congruence");
    }
}

// --- criterion 5: ingestion soundness ----------------------------------------

Circuit random_circuit(TermGen& gen) {
    Circuit c;
    c.qubits = gen.nat(1, 5);
    const std::size_t count = gen.nat(0, 12);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t kind = gen.nat(0, c.qubits >= 2 ? 5 : 4);
        const std::size_t q = gen.nat(0, c.qubits - 1);
        switch (kind) {
        case 0:
            c.gates.push_back(Gate::h(q));
            break;
        case 1:
            c.gates.push_back(Gate::x(q));
            break;
        case 2:
            c.gates.push_back(Gate::z(q));
            break;
        case 3:
            c.gates.push_back(Gate::t(q));
            break;
        case 4:
            c.gates.push_back(Gate::rz(gen.angle(), q));
            break;
        default: {
            std::size_t t = gen.nat(0, c.qubits - 1);
            while (t == q) {
                t = gen.nat(0, c.qubits - 1);
            }
            c.gates.push_back(Gate::cnot(q, t));
            break;
        }
        }
    }
    return c;
}

void criterion_ingest(Check& c) {
    const char* curated[] = {
        "qubits 1\nh 0\n",
        "qubits 1\nx 0\n",
        "qubits 1\nz 0\n",
        "qubits 1\nt 0\n",
        "qubits 1\nrz 7pi/4 0\n",
        "qubits 2\ncnot 0 1\n",
        "qubits 2\ncnot 1 0\n",
        "qubits 3\ncnot 0 2\n",
        "qubits 3\ncnot 2 0\n",
        "qubits 4\ncnot 1 3\n",
        "qubits 5\ncnot 0 4\n",
        "qubits 5\ncnot 4 0\n",
        "qubits 5\ncnot 4 1\n",
        "qubits 2\nh 0\ncnot 0 1\n",
        "qubits 3\nh 0\ncnot 0 1\ncnot 1 2\nt 2\n",
        "qubits 4\nx 3\ncnot 3 0\nrz pi/2 0\ncnot 3 0\n",
    };
    for (const char* text : curated) {
        const Circuit circuit = parse_circuit(text);
        const PropResult res = proportional_matrices(eval(ingest(circuit)), unitary(circuit), 1e-9);
        c.expect(res.is_proportional(), std::string("curated circuit failed: ") + text);
    }

    TermGen gen(50505);
    for (int i = 0; i < 100; ++i) {
        const Circuit circuit = random_circuit(gen);
        const PropResult res = proportional_matrices(eval(ingest(circuit)), unitary(circuit), 1e-9);
        c.expect(res.is_proportional(), "random circuit failed:\n" + print_circuit(circuit));
    }
}

// --- criterion 6: a_swap permutations ----------------------------------------

void criterion_a_swap(Check& c) {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<std::size_t> perm(n);
        for (std::size_t w = 0; w < n; ++w) {
            perm[w] = w;
        }
        perm[0] = n - 1;
        perm[n - 1] = 0;
        c.expect(eval(a_swap(n)) == wire_permutation(n, perm),
                 "a_swap(" + std::to_string(n) + ") is not the exact first<->last exchange");

        const Diagram twice = Diagram::compose(a_swap(n), a_swap(n));
        c.expect(proportional(twice, n_wire(n), 1e-9).is_proportional(),
                 "a_swap is not an involution");
    }
}

// --- criterion 7: Bell preparation -------------------------------------------

void criterion_bell(Check& c) {
    const Circuit circuit = parse_circuit(slurp(data_path("bell_prep.zxc")));
    const Diagram prep = Diagram::stack(Diagram::x(0, 1, Angle::zero()),
                                        Diagram::x(0, 1, Angle::zero()));
    const Diagram bell = Diagram::compose(prep, ingest(circuit));
    const PropResult res = proportional(bell, Diagram::cup(), 1e-9);
    c.expect(res.is_proportional(), "bell preparation is not proportional to cup");

    const Diagram from_file = parse_term(slurp(data_path("bell_state.zx")));
    c.expect(from_file == bell, "committed bell term drifted from the construction");
}

// --- criterion 8: absolute fusion by scripted rewriting ----------------------

struct FusionScript {
    Diagram term;
    std::vector<Diagram> trace;

    void apply(const Rule& rule, const RuleParams& params, const Path& path, Direction dir) {
        term = apply_at(term, rule, params, path, dir);
        trace.push_back(term);
    }
};

Diagram run_fusion_script(std::size_t n, std::size_t m, std::size_t o, Angle alpha, Angle beta,
                          Check& c) {
    const Angle zero = Angle::zero();
    FusionScript s;
    s.term = Diagram::compose(Diagram::z(n, m, alpha), Diagram::z(m, o, beta));
    s.trace.push_back(s.term);

    std::size_t mid = m;
    while (mid >= 2) {
        const std::size_t k = mid - 2;
        const Diagram nw = n_wire(k);
        const Diagram z12 = Diagram::z(1, 2, zero);
        const Diagram z21 = Diagram::z(2, 1, zero);

        RuleParams grow_r;
        grow_r.nats = {{"k", k}, {"m", o}};
        grow_r.angles = {{"alpha", beta}};
        s.apply(find_rule("grow_Z_left_2_1"), grow_r, {1}, Direction::L2R);

        RuleParams grow_l;
        grow_l.nats = {{"k", k}, {"n", n}};
        grow_l.angles = {{"alpha", alpha}};
        s.apply(find_rule("grow_Z_right_1_2"), grow_l, {0}, Direction::L2R);

        const Diagram left_spider = Diagram::z(n, mid - 1, alpha);
        const Diagram right_spider = Diagram::z(mid - 1, o, beta);
        const Diagram split_out = Diagram::stack(z12, nw);
        const Diagram split_in = Diagram::stack(z21, nw);

        RuleParams assoc1;
        assoc1.terms = {{"a", left_spider},
                        {"b", split_out},
                        {"c", Diagram::compose(split_in, right_spider)}};
        s.apply(find_rule("compose_assoc"), assoc1, {}, Direction::L2R);

        RuleParams assoc2;
        assoc2.terms = {{"a", split_out}, {"b", split_in}, {"c", right_spider}};
        s.apply(find_rule("compose_assoc"), assoc2, {1}, Direction::R2L);

        RuleParams distr;
        distr.terms = {{"a", z12}, {"b", z21}, {"c", nw}, {"d", nw}};
        s.apply(find_rule("stack_compose_distr"), distr, {1, 0}, Direction::L2R);

        RuleParams empt_r;
        empt_r.terms = {{"a", z12}};
        s.apply(find_rule("stack_empty_r"), empt_r, {1, 0, 0, 0}, Direction::R2L);

        RuleParams cast_intro;
        cast_intro.terms = {{"a", Diagram::stack(z12, Diagram::empty())}};
        s.apply(find_rule("cast_id"), cast_intro, {1, 0, 0, 0}, Direction::R2L);

        RuleParams empt_l;
        empt_l.terms = {{"a", z21}};
        s.apply(find_rule("stack_empty_l"), empt_l, {1, 0, 0, 1}, Direction::R2L);

        RuleParams fuse;
        fuse.nats = {{"top", 0}, {"mid", 1}, {"bot", 0}, {"n", 1}, {"m", 1}};
        fuse.angles = {{"alpha", zero}, {"beta", zero}};
        s.apply(find_rule("spider_fusion"), fuse, {1, 0, 0}, Direction::L2R);

        s.apply(find_rule("wire_removal"), {}, {1, 0, 0}, Direction::L2R);

        RuleParams nwl;
        nwl.terms = {{"a", nw}};
        s.apply(find_rule("nwire_removal_l"), nwl, {1, 0, 1}, Direction::L2R);

        if (k == 0) {
            RuleParams collapse;
            collapse.terms = {{"a", Diagram::wire()}};
            s.apply(find_rule("stack_empty_r"), collapse, {1, 0}, Direction::L2R);
        }

        RuleParams nwl2;
        nwl2.terms = {{"a", right_spider}};
        s.apply(find_rule("nwire_removal_l"), nwl2, {1}, Direction::L2R);

        --mid;
    }

    RuleParams fuse_base;
    fuse_base.nats = {{"n", n}, {"m", o}};
    fuse_base.angles = {{"alpha", alpha}, {"beta", beta}};
    s.apply(find_rule("absolute_fusion"), fuse_base, {}, Direction::L2R);

    for (std::size_t i = 1; i < s.trace.size(); ++i) {
        const PropResult res = proportional(s.trace[i - 1], s.trace[i], 1e-9);
        c.expect(res.is_proportional(),
                 "step " + std::to_string(i) + " broke proportionality");
    }
    return s.term;
}

void criterion_fusion_script(Check& c) {
    const Angle alpha = Angle::rational(1, 4);
    const Angle beta = Angle::rational(5, 4);
    for (std::size_t n = 0; n <= 3 && c.ok; ++n) {
        for (std::size_t m = 1; m <= 3 && c.ok; ++m) {
            for (std::size_t o = 0; o <= 3 && c.ok; ++o) {
                try {
                    const Diagram fused = run_fusion_script(n, m, o, alpha, beta, c);
                    c.expect(fused == Diagram::z(n, o, alpha + beta),
                             "script did not end at the fused spider for n=" + std::to_string(n) +
                                 " m=" + std::to_string(m) + " o=" + std::to_string(o));
                } catch (const Error& e) {
                    c.expect(false, std::string("script threw: ") + e.what());
                }
            }
        }
    }
}

// --- criterion 9: structural equivalence corpus ------------------------------

using structural::DimExpr;
using structural::Limits;
using structural::StructEqResult;
using structural::SymDiagram;

SymDiagram obfuscate(const SymDiagram& t, TermGen& gen);

SymDiagram obfuscate_here(const SymDiagram& t, TermGen& gen) {
    const structural::SymDims sd = structural::sym_dims(t);
    switch (gen.nat(0, 4)) {
    case 0:
        return SymDiagram::cast(sd.in, sd.out, t);
    case 1:
        return gen.nat(0, 1) == 0 ? SymDiagram::stack(SymDiagram::empty(), t)
                                  : SymDiagram::stack(t, SymDiagram::empty());
    case 2:
        return SymDiagram::compose(SymDiagram::n_wire(sd.in), t);
    case 3:
        return SymDiagram::compose(t, SymDiagram::n_wire(sd.out));
    default:
        // reassociate when the shape allows it
        if (t.kind() == structural::SymKind::Stack && t.first().kind() == structural::SymKind::Stack) {
            return SymDiagram::stack(t.first().first(),
                                     SymDiagram::stack(t.first().second(), t.second()));
        }
        if (t.kind() == structural::SymKind::Compose && t.first().kind() == structural::SymKind::Compose) {
            return SymDiagram::compose(t.first().first(),
                                       SymDiagram::compose(t.first().second(), t.second()));
        }
        return SymDiagram::cast(sd.in, sd.out, t);
    }
}

SymDiagram obfuscate(const SymDiagram& t, TermGen& gen) {
    if (t.child_count() == 2 && gen.nat(0, 2) == 0) {
        const bool left = gen.nat(0, 1) == 0;
        const SymDiagram a = left ? obfuscate(t.first(), gen) : t.first();
        const SymDiagram b = left ? t.second() : obfuscate(t.second(), gen);
        return t.kind() == structural::SymKind::Stack ? SymDiagram::stack(a, b)
                                                : SymDiagram::compose(a, b);
    }
    return obfuscate_here(t, gen);
}

void criterion_struct_corpus(Check& c) {
    const auto timed_equal = [&c](const SymDiagram& a, const SymDiagram& b, bool expect_equal,
                                  const std::string& what) {
        const auto start = std::chrono::steady_clock::now();
        const StructEqResult res = structural::struct_equiv(a, b, Limits{});
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.expect(res.equal == expect_equal, what);
        c.expect(secs < 1.0, what + " exceeded 1s");
    };

    // (a) reflexivity
    const SymDiagram refl = parse_sym_term(slurp(data_path("assoc_ex_1.zx")));
    timed_equal(refl, refl, true, "reflexivity");

    // (b) the swap-layer pair with symbolic n
    timed_equal(parse_sym_term(slurp(data_path("assoc_ex_1.zx"))),
                parse_sym_term(slurp(data_path("assoc_ex_2.zx"))), true, "assoc example pair");

    // (c) stack associativity through a cast
    timed_equal(parse_sym_term(slurp(data_path("stack_assoc_1.zx"))),
                parse_sym_term(slurp(data_path("stack_assoc_2.zx"))), true,
                "stack assoc cast form");

    // (d) randomized reassociations and identity insertions
    TermGen gen(909);
    for (int i = 0; i < 20; ++i) {
        const Diagram base = gen.diagram(5, 3);
        const SymDiagram sym_base =
            SymDiagram::stack(structural::to_sym(base), SymDiagram::n_wire(DimExpr::var("n")));
        SymDiagram left = sym_base;
        SymDiagram right = sym_base;
        for (int j = 0; j < 3; ++j) {
            left = obfuscate(left, gen);
            right = obfuscate(right, gen);
        }
        timed_equal(left, right, true, "randomized obfuscation " + std::to_string(i));
    }

    // Six semantically proportional but structurally distinct pairs.
    const char* negative[][2] = {
        {"swap", "(nwire 2)"},
        {"(compose swap swap)", "(nwire 2)"},
        {"(Z 1 1 0)", "wire"},
        {"(compose box box)", "wire"},
        {"(compose (Z 1 2 0) (Z 2 1 0))", "(Z 1 1 0)"},
        {"(compose (Z 1 1 pi/2) (Z 1 1 pi/2))", "(Z 1 1 pi)"},
    };
    for (const auto& pair : negative) {
        timed_equal(parse_sym_term(pair[0]), parse_sym_term(pair[1]), false,
                    std::string("must stay unproven: ") + pair[0]);
    }
}

// --- criterion 10: structural soundness bridge -------------------------------

void criterion_struct_bridge(Check& c) {
    TermGen gen(606);
    for (const structural::StructuralLaw& law : structural::structural_laws()) {
        for (int trial = 0; trial < 20; ++trial) {
            std::map<std::string, bool> dim_vars;
            std::map<std::string, structural::SymDims> metavars;
            structural::collect_vars(law.lhs, dim_vars, metavars);
            structural::collect_vars(law.rhs, dim_vars, metavars);
            structural::Assignment assignment;
            for (const auto& [name, _] : dim_vars) {
                assignment.dims[name] = gen.nat(0, 3);
            }
            for (const auto& [name, sd] : metavars) {
                assignment.terms.emplace(name,
                                         gen.diagram(structural::eval_dim(sd.in, assignment.dims),
                                                     structural::eval_dim(sd.out, assignment.dims), 4));
            }
            const Diagram lhs = structural::concretize(law.lhs, assignment);
            const Diagram rhs = structural::concretize(law.rhs, assignment);
            c.expect(max_abs_diff(eval(lhs), eval(rhs)) <= 1e-12,
                     law.name + " is not an exact matrix equality");
        }
    }
}

// --- criterion 11: peephole corpus -------------------------------------------

void criterion_peephole(Check& c) {
    const char* pairs[][2] = {
        {"qubits 1\nh 0\nh 0\n", "qubits 1\n"},
        {"qubits 2\ncnot 0 1\ncnot 0 1\n", "qubits 2\n"},
        {"qubits 1\nrz pi/4 0\nrz pi/2 0\n", "qubits 1\nrz 3pi/4 0\n"},
        {"qubits 1\nx 0\nx 0\n", "qubits 1\n"},
        {"qubits 2\ncnot 0 1\nx 0\ncnot 0 1\n", "qubits 2\nx 0\nx 1\n"},
        {"qubits 2\nrz 3pi/4 0\ncnot 0 1\n", "qubits 2\ncnot 0 1\nrz 3pi/4 0\n"},
    };
    for (const auto& pair : pairs) {
        const Circuit lhs = parse_circuit(pair[0]);
        const Circuit rhs = parse_circuit(pair[1]);
        c.expect(proportional(ingest(lhs), ingest(rhs), 1e-9).is_proportional(),
                 std::string("diagrammatic check failed for: ") + pair[0]);
        c.expect(proportional_matrices(unitary(lhs), unitary(rhs), 1e-9).is_proportional(),
                 std::string("unitary check failed for: ") + pair[0]);
    }
}

// --- criterion 12: format round-trips ----------------------------------------

void criterion_roundtrip(Check& c) {
    TermGen gen(121212);
    for (int i = 0; i < 500; ++i) {
        const Diagram d = gen.diagram(10, 5);
        c.expect(parse_term(print_term(d)) == d, "random term failed to round-trip");
    }
    for (const auto& entry : std::filesystem::directory_iterator(TEST_DATA_DIR)) {
        if (entry.path().extension() != ".zx") {
            continue;
        }
        const std::string text = slurp(entry.path().string());
        try {
            const Diagram d = parse_term(text);
            c.expect(parse_term(print_term(d)) == d,
                     "corpus file failed to round-trip: " + entry.path().string());
        } catch (const SyntaxError&) {
            const SymDiagram d = parse_sym_term(text);
            c.expect(parse_sym_term(print_sym_term(d)) == d,
                     "symbolic corpus file failed to round-trip: " + entry.path().string());
        }
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Check&)> run;
        double budget_seconds;
    };

    const std::vector<Criterion> criteria = {
        {1, "semantics clauses match the denotation table", criterion_semantics, 1.0},
        {2, "direct and braket Z-spider constructions agree", criterion_dual_z, 5.0},
        {3, "rule catalog + colorswap/transpose closures are sound", criterion_rules, 60.0},
        {4, "proportionality is an equivalence and congruence", criterion_prop_equivalence, 30.0},
        {5, "circuit ingestion matches the unitary oracle", criterion_ingest, 60.0},
        {6, "a_swap equals the exact first<->last permutation", criterion_a_swap, 10.0},
        {7, "Bell preparation evaluates to the cup state", criterion_bell, 1.0},
        {8, "absolute fusion by scripted grow/reassociate/fuse/shrink", criterion_fusion_script,
         10.0},
        {9, "structural equivalence corpus (positive and negative)", criterion_struct_corpus, 60.0},
        {10, "structural laws are exact matrix equalities", criterion_struct_bridge, 30.0},
        {11, "peephole corpus holds diagrammatically and unitarily", criterion_peephole, 10.0},
        {12, "term format round-trips bit-exactly", criterion_roundtrip, 30.0},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > criterion.budget_seconds) {
            check.expect(false, "exceeded the " + std::to_string(criterion.budget_seconds) +
                                    "s runtime budget");
        }
        std::printf("[%s] criterion %2d: %s (%.2fs)\n", check.ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name, secs);
        if (!check.ok) {
            std::printf("       %s\n", check.detail.c_str());
            ++failures;
        }
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

#include "zx/rules.hpp"

#include "zx/semantics.hpp"
#include "zx/text.hpp"

#include <utility>

namespace zx {

std::size_t RuleParams::nat(const std::string& name) const {
    auto it = nats.find(name);
    if (it == nats.end()) {
        throw DimError("missing nat parameter '" + name + "'");
    }
    return it->second;
}

Angle RuleParams::angle(const std::string& name) const {
    auto it = angles.find(name);
    if (it == angles.end()) {
        throw DimError("missing angle parameter '" + name + "'");
    }
    return it->second;
}

const Diagram& RuleParams::term(const std::string& name) const {
    auto it = terms.find(name);
    if (it == terms.end()) {
        throw DimError("missing term parameter '" + name + "'");
    }
    return it->second;
}

std::string RuleParams::str() const {
    std::string out;
    auto append = [&out](const std::string& name, const std::string& value) {
        if (!out.empty()) {
            out += ' ';
        }
        out += name + "=" + value;
    };
    for (const auto& [name, value] : nats) {
        append(name, std::to_string(value));
    }
    for (const auto& [name, value] : angles) {
        append(name, value.str());
    }
    for (const auto& [name, value] : terms) {
        append(name, print_term(value));
    }
    return out;
}

namespace {

using P = RuleParams;

Diagram n_stack(std::size_t n, const Diagram& d) {
    if (n == 0) {
        return Diagram::empty();
    }
    Diagram acc = d;
    for (std::size_t i = 1; i < n; ++i) {
        acc = Diagram::stack(d, acc);
    }
    return acc;
}

ParamSpec nat_param(const std::string& name, std::size_t min = 0, std::size_t max = SIZE_MAX) {
    return {ParamSpec::Kind::Nat, name, min, max};
}

ParamSpec angle_param(const std::string& name) { return {ParamSpec::Kind::Angle, name, 0, 0}; }

ParamSpec term_param(const std::string& name) { return {ParamSpec::Kind::Term, name, 0, 0}; }

// Coordinated samplers for rules whose term parameters share dimensions.
RuleParams sample_compose_chain(TermGen& gen, std::size_t max_dim,
                                const std::vector<std::string>& names) {
    RuleParams p;
    std::size_t in = gen.nat(0, max_dim);
    for (const auto& name : names) {
        const std::size_t out = gen.nat(0, max_dim);
        p.terms.emplace(name, gen.diagram(in, out, 4));
        in = out;
    }
    return p;
}

RuleParams sample_free_terms(TermGen& gen, std::size_t max_dim,
                             const std::vector<std::string>& names) {
    RuleParams p;
    for (const auto& name : names) {
        p.terms.emplace(name, gen.diagram(4, max_dim));
    }
    return p;
}

std::vector<Rule> build_catalog() {
    const Angle zero = Angle::zero();
    const Angle pi = Angle::pi();
    const Angle half_pi = Angle::rational(1, 2);
    std::vector<Rule> rules;

    rules.push_back(Rule{
        "absolute_fusion",
        {nat_param("n"), nat_param("m"), angle_param("alpha"), angle_param("beta")},
        [](const P& p) {
            return Diagram::compose(Diagram::z(p.nat("n"), 1, p.angle("alpha")),
                                    Diagram::z(1, p.nat("m"), p.angle("beta")));
        },
        [](const P& p) {
            return Diagram::z(p.nat("n"), p.nat("m"), p.angle("alpha") + p.angle("beta"));
        },
        nullptr,
    });

    // General wired fusion: the two spiders share 1+mid wires, with `top`
    // bystander wires above the joint and `bot` below it. The cast bridges
    // (top + (1+mid)) + bot against top + ((1+mid) + bot).
    rules.push_back(Rule{
        "spider_fusion",
        {nat_param("top"), nat_param("mid"), nat_param("bot"), nat_param("n"), nat_param("m"),
         angle_param("alpha"), angle_param("beta")},
        [](const P& p) {
            const std::size_t top = p.nat("top"), mid = p.nat("mid"), bot = p.nat("bot");
            const std::size_t n = p.nat("n"), m = p.nat("m");
            Diagram first = Diagram::cast(
                n + bot, top + 1 + mid + bot,
                Diagram::stack(Diagram::z(n, top + 1 + mid, p.angle("alpha")), n_wire(bot)));
            Diagram second =
                Diagram::stack(n_wire(top), Diagram::z(1 + mid + bot, m, p.angle("beta")));
            return Diagram::compose(first, second);
        },
        [](const P& p) {
            return Diagram::z(p.nat("n") + p.nat("bot"), p.nat("top") + p.nat("m"),
                              p.angle("alpha") + p.angle("beta"));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "grow_Z_left_2_1",
        {nat_param("k"), nat_param("m"), angle_param("alpha")},
        [](const P& p) { return Diagram::z(p.nat("k") + 2, p.nat("m"), p.angle("alpha")); },
        [zero](const P& p) {
            const std::size_t k = p.nat("k");
            return Diagram::compose(Diagram::stack(Diagram::z(2, 1, zero), n_wire(k)),
                                    Diagram::z(k + 1, p.nat("m"), p.angle("alpha")));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "grow_Z_top_left",
        {nat_param("n", 1), nat_param("m"), angle_param("alpha")},
        [](const P& p) { return Diagram::z(p.nat("n") + 1, p.nat("m"), p.angle("alpha")); },
        [zero](const P& p) {
            const std::size_t n = p.nat("n");
            return Diagram::compose(
                Diagram::cast(n + 1, n,
                              Diagram::stack(Diagram::z(2, 1, zero), n_wire(n - 1))),
                Diagram::z(n, p.nat("m"), p.angle("alpha")));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "grow_Z_right_1_2",
        {nat_param("k"), nat_param("n"), angle_param("alpha")},
        [](const P& p) { return Diagram::z(p.nat("n"), p.nat("k") + 2, p.angle("alpha")); },
        [zero](const P& p) {
            const std::size_t k = p.nat("k");
            return Diagram::compose(Diagram::z(p.nat("n"), k + 1, p.angle("alpha")),
                                    Diagram::stack(Diagram::z(1, 2, zero), n_wire(k)));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "wire_removal",
        {},
        [zero](const P&) { return Diagram::z(1, 1, zero); },
        [](const P&) { return Diagram::wire(); },
        nullptr,
    });

    rules.push_back(Rule{
        "cup_removal",
        {},
        [zero](const P&) { return Diagram::z(0, 2, zero); },
        [](const P&) { return Diagram::cup(); },
        nullptr,
    });

    // The loop leaves from the spider's top two outputs into a cap.
    rules.push_back(Rule{
        "self_loop_removal",
        {nat_param("n"), nat_param("m"), angle_param("alpha")},
        [](const P& p) {
            const std::size_t m = p.nat("m");
            return Diagram::compose(Diagram::z(p.nat("n"), m + 2, p.angle("alpha")),
                                    Diagram::stack(Diagram::cap(), n_wire(m)));
        },
        [](const P& p) { return Diagram::z(p.nat("n"), p.nat("m"), p.angle("alpha")); },
        nullptr,
    });

    rules.push_back(Rule{
        "bialgebra",
        {},
        [zero](const P&) {
            Diagram copies = Diagram::stack(Diagram::x(1, 2, zero), Diagram::x(1, 2, zero));
            Diagram crossing = Diagram::stack(
                Diagram::wire(), Diagram::stack(Diagram::swap(), Diagram::wire()));
            Diagram merges = Diagram::stack(Diagram::z(2, 1, zero), Diagram::z(2, 1, zero));
            return Diagram::compose(Diagram::compose(copies, crossing), merges);
        },
        [zero](const P&) {
            return Diagram::compose(Diagram::z(2, 1, zero), Diagram::x(1, 2, zero));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "hopf",
        {},
        [zero](const P&) {
            return Diagram::compose(Diagram::x(1, 2, zero), Diagram::z(2, 1, zero));
        },
        [zero](const P&) {
            return Diagram::compose(Diagram::x(1, 0, zero), Diagram::z(0, 1, zero));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "bi_pi",
        {nat_param("m"), angle_param("alpha")},
        [pi](const P& p) {
            return Diagram::compose(Diagram::z(1, 1, pi),
                                    Diagram::x(1, p.nat("m"), p.angle("alpha")));
        },
        [pi](const P& p) {
            const std::size_t m = p.nat("m");
            return Diagram::compose(Diagram::x(1, m, -p.angle("alpha")),
                                    n_stack1(m, Diagram::z(1, 1, pi)));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "state_copy",
        {nat_param("k", 0, 1), nat_param("m")},
        [zero](const P& p) {
            const Angle kpi = Angle::rational(static_cast<std::int64_t>(p.nat("k")), 1);
            return Diagram::compose(Diagram::x(0, 1, kpi), Diagram::z(1, p.nat("m"), zero));
        },
        [](const P& p) {
            const Angle kpi = Angle::rational(static_cast<std::int64_t>(p.nat("k")), 1);
            return n_stack(p.nat("m"), Diagram::x(0, 1, kpi));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "box_decomposition",
        {},
        [](const P&) { return Diagram::box(); },
        [half_pi](const P&) {
            return Diagram::compose(
                Diagram::z(1, 1, half_pi),
                Diagram::compose(Diagram::x(1, 1, half_pi), Diagram::z(1, 1, half_pi)));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "yanking",
        {},
        [](const P&) {
            return Diagram::compose(Diagram::stack(Diagram::cup(), Diagram::wire()),
                                    Diagram::stack(Diagram::wire(), Diagram::cap()));
        },
        [](const P&) { return Diagram::wire(); },
        nullptr,
    });

    // Turns the spider's top input into an output: the new top output loops
    // back through a cap into the diagram's top input.
    rules.push_back(Rule{
        "wrap_over_top_left",
        {nat_param("n"), nat_param("m"), angle_param("alpha")},
        [](const P& p) { return Diagram::z(p.nat("n") + 1, p.nat("m"), p.angle("alpha")); },
        [](const P& p) {
            const std::size_t m = p.nat("m");
            return Diagram::compose(
                Diagram::stack(Diagram::wire(),
                               Diagram::z(p.nat("n"), m + 1, p.angle("alpha"))),
                Diagram::stack(Diagram::cap(), n_wire(m)));
        },
        nullptr,
    });

    // Dual wrap: a cup creates the diagram's top output and feeds the
    // spider's top input.
    rules.push_back(Rule{
        "wrap_over_top_right",
        {nat_param("n"), nat_param("m"), angle_param("alpha")},
        [](const P& p) { return Diagram::z(p.nat("n"), p.nat("m") + 1, p.angle("alpha")); },
        [](const P& p) {
            const std::size_t n = p.nat("n");
            return Diagram::compose(
                Diagram::stack(Diagram::cup(), n_wire(n)),
                Diagram::stack(Diagram::wire(),
                               Diagram::z(n + 1, p.nat("m"), p.angle("alpha"))));
        },
        nullptr,
    });

    rules.push_back(Rule{
        "swap_involution",
        {},
        [](const P&) { return Diagram::compose(Diagram::swap(), Diagram::swap()); },
        [](const P&) { return n_wire(2); },
        nullptr,
    });

    // Structural rules over term metavariables. These hold as exact matrix
    // equalities; the harness still routes them through the oracle.
    rules.push_back(Rule{
        "compose_assoc",
        {term_param("a"), term_param("b"), term_param("c")},
        [](const P& p) {
            return Diagram::compose(Diagram::compose(p.term("a"), p.term("b")), p.term("c"));
        },
        [](const P& p) {
            return Diagram::compose(p.term("a"), Diagram::compose(p.term("b"), p.term("c")));
        },
        [](TermGen& gen, std::size_t max_dim) {
            return sample_compose_chain(gen, max_dim, {"a", "b", "c"});
        },
    });

    rules.push_back(Rule{
        "stack_assoc",
        {term_param("a"), term_param("b"), term_param("c")},
        [](const P& p) {
            return Diagram::stack(Diagram::stack(p.term("a"), p.term("b")), p.term("c"));
        },
        [](const P& p) {
            return Diagram::stack(p.term("a"), Diagram::stack(p.term("b"), p.term("c")));
        },
        [](TermGen& gen, std::size_t max_dim) {
            return sample_free_terms(gen, max_dim, {"a", "b", "c"});
        },
    });

    rules.push_back(Rule{
        "stack_compose_distr",
        {term_param("a"), term_param("b"), term_param("c"), term_param("d")},
        [](const P& p) {
            return Diagram::compose(Diagram::stack(p.term("a"), p.term("c")),
                                    Diagram::stack(p.term("b"), p.term("d")));
        },
        [](const P& p) {
            return Diagram::stack(Diagram::compose(p.term("a"), p.term("b")),
                                  Diagram::compose(p.term("c"), p.term("d")));
        },
        [](TermGen& gen, std::size_t max_dim) {
            RuleParams upper = sample_compose_chain(gen, max_dim, {"a", "b"});
            RuleParams lower = sample_compose_chain(gen, max_dim, {"c", "d"});
            upper.terms.merge(lower.terms);
            return upper;
        },
    });

    rules.push_back(Rule{
        "stack_empty_l",
        {term_param("a")},
        [](const P& p) { return Diagram::stack(Diagram::empty(), p.term("a")); },
        [](const P& p) { return p.term("a"); },
        [](TermGen& gen, std::size_t max_dim) { return sample_free_terms(gen, max_dim, {"a"}); },
    });

    rules.push_back(Rule{
        "stack_empty_r",
        {term_param("a")},
        [](const P& p) { return Diagram::stack(p.term("a"), Diagram::empty()); },
        [](const P& p) { return p.term("a"); },
        [](TermGen& gen, std::size_t max_dim) { return sample_free_terms(gen, max_dim, {"a"}); },
    });

    rules.push_back(Rule{
        "nwire_removal_l",
        {term_param("a")},
        [](const P& p) { return Diagram::compose(n_wire(dims(p.term("a")).in), p.term("a")); },
        [](const P& p) { return p.term("a"); },
        [](TermGen& gen, std::size_t max_dim) { return sample_free_terms(gen, max_dim, {"a"}); },
    });

    rules.push_back(Rule{
        "nwire_removal_r",
        {term_param("a")},
        [](const P& p) { return Diagram::compose(p.term("a"), n_wire(dims(p.term("a")).out)); },
        [](const P& p) { return p.term("a"); },
        [](TermGen& gen, std::size_t max_dim) { return sample_free_terms(gen, max_dim, {"a"}); },
    });

    rules.push_back(Rule{
        "cast_id",
        {term_param("a")},
        [](const P& p) {
            const Dims d = dims(p.term("a"));
            return Diagram::cast(d.in, d.out, p.term("a"));
        },
        [](const P& p) { return p.term("a"); },
        [](TermGen& gen, std::size_t max_dim) { return sample_free_terms(gen, max_dim, {"a"}); },
    });

    return rules;
}

} // namespace

const std::vector<Rule>& catalog() {
    static const std::vector<Rule> rules = build_catalog();
    return rules;
}

const Rule& find_rule(const std::string& name) {
    for (const Rule& rule : catalog()) {
        if (rule.name == name) {
            return rule;
        }
    }
    throw NoMatchError("a catalog rule named '" + name + "'", "nothing");
}

Rule colorswapped(const Rule& rule) {
    Rule out = rule;
    out.name = rule.name + "@colorswap";
    out.lhs = [inner = rule.lhs](const RuleParams& p) { return colorswap(inner(p)); };
    out.rhs = [inner = rule.rhs](const RuleParams& p) { return colorswap(inner(p)); };
    return out;
}

Rule transposed(const Rule& rule) {
    Rule out = rule;
    out.name = rule.name + "@transpose";
    out.lhs = [inner = rule.lhs](const RuleParams& p) { return transpose(inner(p)); };
    out.rhs = [inner = rule.rhs](const RuleParams& p) { return transpose(inner(p)); };
    return out;
}

Diagram apply_at(const Diagram& d, const Rule& rule, const RuleParams& params, const Path& path,
                 Direction direction) {
    const Diagram source = direction == Direction::L2R ? rule.lhs(params) : rule.rhs(params);
    const Diagram target = direction == Direction::L2R ? rule.rhs(params) : rule.lhs(params);
    const Diagram found = subterm_at(d, path);
    if (!(found == source)) {
        throw NoMatchError(print_term(source), print_term(found));
    }
    const Dims before = dims(d);
    const Diagram result = replace_at(d, path, target);
    const Dims after = dims(result); // also revalidates well-formedness
    if (before != after) {
        throw DimError("rewrite with '" + rule.name + "' changed the outer dims");
    }
    return result;
}

RuleReport check_rule(const Rule& rule, std::size_t samples, std::size_t max_dim,
                      std::uint64_t seed, double tol) {
    RuleReport report;
    report.rule = rule.name;
    report.samples = samples;
    TermGen gen(seed);

    for (std::size_t i = 0; i < samples; ++i) {
        RuleParams params;
        if (rule.sampler) {
            params = rule.sampler(gen, max_dim);
        }
        for (const ParamSpec& spec : rule.params) {
            switch (spec.kind) {
            case ParamSpec::Kind::Nat: {
                std::size_t hi = std::min(spec.max, std::max(spec.min, max_dim));
                params.nats[spec.name] = gen.nat(spec.min, hi);
                break;
            }
            case ParamSpec::Kind::Angle:
                params.angles[spec.name] = gen.angle();
                break;
            case ParamSpec::Kind::Term:
                if (params.terms.find(spec.name) == params.terms.end()) {
                    params.terms.emplace(spec.name, gen.diagram(4, max_dim));
                }
                break;
            }
        }

        try {
            const Diagram lhs = rule.lhs(params);
            const Diagram rhs = rule.rhs(params);
            if (dims(lhs) != dims(rhs)) {
                report.failures.push_back({params.str(), "sides have different dims"});
                continue;
            }
            const PropResult res = proportional(lhs, rhs, tol);
            if (!res.is_proportional()) {
                report.failures.push_back({params.str(), "not proportional: " + res.reason});
            }
        } catch (const Error& e) {
            report.failures.push_back({params.str(), e.what()});
        }
    }
    return report;
}

} // namespace zx

#pragma once

#include "zx/diagram.hpp"
#include "zx/gen.hpp"
#include "zx/prop.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace zx {

// A rewrite rule is a pair of term builders over a parameter assignment. Both
// sides must be well-formed with equal dims for every admissible assignment,
// and proportionally equal under the semantics oracle; check_rule enforces
// this over sampled assignments.
struct ParamSpec {
    enum class Kind { Nat, Angle, Term };
    Kind kind = Kind::Nat;
    std::string name;
    std::size_t min = 0; // Nat lower bound
    std::size_t max = SIZE_MAX; // Nat upper bound (clamped by the harness max_dim)
};

struct RuleParams {
    std::map<std::string, std::size_t> nats;
    std::map<std::string, Angle> angles;
    std::map<std::string, Diagram> terms;

    std::size_t nat(const std::string& name) const;
    Angle angle(const std::string& name) const;
    const Diagram& term(const std::string& name) const;

    std::string str() const;
};

struct Rule {
    std::string name;
    std::vector<ParamSpec> params;
    std::function<Diagram(const RuleParams&)> lhs;
    std::function<Diagram(const RuleParams&)> rhs;
    // Optional coordinated sampler for rules whose parameters are not
    // independent (term parameters with dimension side conditions). When
    // absent, the harness draws each parameter independently.
    std::function<RuleParams(TermGen&, std::size_t)> sampler;
};

// The validated catalog. Z-spider forms are listed; X forms arise through the
// colorswapped() closure.
const std::vector<Rule>& catalog();

// Lookup by name; throws NoMatchError if absent.
const Rule& find_rule(const std::string& name);

// Derived rules: both preserve soundness, and the harness revalidates them.
Rule colorswapped(const Rule& rule);
Rule transposed(const Rule& rule);

enum class Direction { L2R, R2L };

// Replaces the subterm at `path`, which must be syntactically equal to the
// instantiated source side, with the instantiated target side. The outer
// dims never change; this is asserted.
Diagram apply_at(const Diagram& d, const Rule& rule, const RuleParams& params, const Path& path,
                 Direction direction);

struct RuleFailure {
    std::string params;
    std::string detail;
};

struct RuleReport {
    std::string rule;
    std::size_t samples = 0;
    std::vector<RuleFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Samples `samples` assignments (nats clamped to max_dim, angles from the
// fixed set plus random rationals, terms from TermGen) and checks lhs ~ rhs
// under the proportionality oracle each time.
RuleReport check_rule(const Rule& rule, std::size_t samples, std::size_t max_dim,
                      std::uint64_t seed, double tol = kDefaultTol);

} // namespace zx

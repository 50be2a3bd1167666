#include "zx/gen.hpp"
#include "zx/prop.hpp"
#include "zx/semantics.hpp"

#include <doctest.h>

using namespace zx;

TEST_CASE("identity matrices are proportional with witness 1") {
    const PropResult res = proportional_matrices(CMatrix::identity(2), CMatrix::identity(2));
    REQUIRE(res.is_proportional());
    CHECK(std::abs(res.factor - Complex{1, 0}) <= 1e-12);
}

TEST_CASE("blank spider is a wire") {
    const PropResult res = proportional(Diagram::z(1, 1, Angle::zero()), Diagram::wire());
    REQUIRE(res.is_proportional());
    CHECK(std::abs(res.factor - Complex{1, 0}) <= 1e-12);
}

TEST_CASE("wire and box are not proportional") {
    CHECK_FALSE(proportional(Diagram::wire(), Diagram::box()).is_proportional());
}

TEST_CASE("constructed scaling is recovered") {
    const CMatrix h = hadamard();
    const PropResult res = proportional_matrices(scaled(h, Complex{0, 2}), h);
    REQUIRE(res.is_proportional());
    CHECK(std::abs(res.factor - Complex{0, 2}) <= 1e-12);
}

TEST_CASE("shape mismatches are their own verdict") {
    const PropResult res = proportional_matrices(CMatrix::identity(2), CMatrix::identity(4));
    CHECK(res.verdict == PropVerdict::ShapeMismatch);
    CHECK(proportional(Diagram::wire(), Diagram::cap()).verdict == PropVerdict::ShapeMismatch);
}

TEST_CASE("zero is proportional to zero and nothing else") {
    const CMatrix zero(2, 2);
    CHECK(proportional_matrices(zero, zero).is_proportional());
    CHECK_FALSE(proportional_matrices(CMatrix::identity(2), zero).is_proportional());
    CHECK_FALSE(proportional_matrices(zero, CMatrix::identity(2)).is_proportional());
}

TEST_CASE("X spider with no phase is a wire") {
    const PropResult res = proportional(Diagram::x(1, 1, Angle::zero()), Diagram::wire());
    CHECK(res.is_proportional());
}

TEST_CASE("swap composed with itself is the two-wire identity") {
    const Diagram lhs = Diagram::compose(Diagram::swap(), Diagram::swap());
    CHECK(proportional(lhs, n_wire(2)).is_proportional());
}

TEST_CASE("pi-phased Z and X spiders differ") {
    CHECK_FALSE(
        proportional(Diagram::z(1, 1, Angle::pi()), Diagram::x(1, 1, Angle::pi())).is_proportional());
}

TEST_CASE("proportionality is an equivalence relation with composing witnesses") {
    TermGen gen(31337);
    for (int i = 0; i < 60; ++i) {
        const std::size_t in = gen.nat(0, 3);
        const std::size_t out = gen.nat(0, 3);
        const Diagram d = gen.diagram(in, out, 5);
        const CMatrix m = eval(d);

        // reflexivity
        const PropResult self = proportional(d, d);
        REQUIRE(self.is_proportional());
        CHECK(std::abs(self.factor - Complex{1, 0}) <= 1e-9);

        // symmetry with witness 1/c against a scaled copy
        const Complex c{1.3, -0.4};
        const PropResult fwd = proportional_matrices(scaled(m, c), m);
        const PropResult bwd = proportional_matrices(m, scaled(m, c));
        if (max_abs(m) > 1e-9) {
            REQUIRE(fwd.is_proportional());
            REQUIRE(bwd.is_proportional());
            CHECK(std::abs(fwd.factor * bwd.factor - Complex{1, 0}) <= 1e-9);
        }
    }
}

TEST_CASE("stack and compose are congruences for proportionality") {
    TermGen gen(77);
    for (int i = 0; i < 40; ++i) {
        // d0 ~ d1 by construction: a blank spider chain against its fusion
        const std::size_t n = gen.nat(0, 2);
        const std::size_t m = gen.nat(0, 2);
        const Angle a = gen.angle();
        const Angle b = gen.angle();
        const Diagram d0 =
            Diagram::compose(Diagram::z(n, 1, a), Diagram::z(1, m, b));
        const Diagram d1 = Diagram::z(n, m, a + b);
        const PropResult base = proportional(d0, d1);
        REQUIRE(base.is_proportional());

        const Diagram e = gen.diagram(gen.nat(0, 2), gen.nat(0, 2), 4);
        CHECK(proportional(Diagram::stack(d0, e), Diagram::stack(d1, e)).is_proportional());

        const Diagram g = gen.diagram(m, gen.nat(0, 2), 4);
        CHECK(proportional(Diagram::compose(d0, g), Diagram::compose(d1, g)).is_proportional());
    }
}

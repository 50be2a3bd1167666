#include "zx/gen.hpp"
#include "zx/text.hpp"

#include <doctest.h>

using namespace zx;

TEST_CASE("parsing the basic atoms") {
    CHECK(parse_term("empty") == Diagram::empty());
    CHECK(parse_term("wire") == Diagram::wire());
    CHECK(parse_term(" box ") == Diagram::box());
    CHECK(parse_term("(Z 1 2 pi/2)") == Diagram::z(1, 2, Angle::rational(1, 2)));
    CHECK(parse_term("(X 0 1 3pi/4)") == Diagram::x(0, 1, Angle::rational(3, 4)));
    CHECK(parse_term("(stack wire box)") == Diagram::stack(Diagram::wire(), Diagram::box()));
    CHECK(parse_term("(cast 2 0 cap)") == Diagram::cast(2, 0, Diagram::cap()));
}

TEST_CASE("nwire is input sugar for the right-associated stack") {
    CHECK(parse_term("(nwire 0)") == Diagram::empty());
    CHECK(parse_term("(nwire 3)") == n_wire(3));
}

TEST_CASE("angles parse in all spellings") {
    CHECK(parse_angle("0") == Angle::zero());
    CHECK(parse_angle("pi") == Angle::pi());
    CHECK(parse_angle("pi/2") == Angle::rational(1, 2));
    CHECK(parse_angle("3pi/4") == Angle::rational(3, 4));
    CHECK(parse_angle("-pi/2") == Angle::rational(3, 2));
    CHECK(parse_angle("5pi") == Angle::pi());
    const Angle r = parse_angle("1.5707963267948966rad");
    CHECK_FALSE(r.is_exact());
    CHECK(r.value() == doctest::Approx(1.5707963267948966));
}

TEST_CASE("comments and whitespace are ignored") {
    const char* text = "# a bell-ish term\n(compose cup  # the state\n  (nwire 2))\n";
    CHECK(parse_term(text) == Diagram::compose(Diagram::cup(), n_wire(2)));
}

TEST_CASE("syntax errors carry detail") {
    CHECK_THROWS_AS(parse_term("(Z 1 2)"), SyntaxError);
    CHECK_THROWS_AS(parse_term("(frob 1)"), SyntaxError);
    CHECK_THROWS_AS(parse_term("wire wire"), SyntaxError);
    CHECK_THROWS_AS(parse_term("(Z 1 1 2)"), SyntaxError);
    CHECK_THROWS_AS(parse_term(""), SyntaxError);
}

TEST_CASE("print then parse is the identity on random terms") {
    TermGen gen(2024);
    for (int i = 0; i < 500; ++i) {
        const Diagram d = gen.diagram(10, 5);
        CHECK(parse_term(print_term(d)) == d);
    }
}

TEST_CASE("inexact angles round-trip bit-exactly") {
    const Diagram d = Diagram::z(1, 1, Angle::radians(0.1234567890123456789));
    const Diagram back = parse_term(print_term(d));
    CHECK(back == d);
    CHECK(back.phase().value() == d.phase().value());
}

TEST_CASE("symbolic terms round-trip") {
    using structural::DimExpr;
    using structural::SymDiagram;
    const SymDiagram t = SymDiagram::compose(
        SymDiagram::stack(SymDiagram::swap(), SymDiagram::n_wire(DimExpr::var("n"))),
        SymDiagram::stack(SymDiagram::swap(), SymDiagram::n_wire(DimExpr::var("n"))));
    const SymDiagram back = parse_sym_term(print_sym_term(t));
    CHECK(back == t);

    const SymDiagram v = parse_sym_term("(var a (+ n 1) (* 2 m))");
    CHECK(v.kind() == structural::SymKind::MetaVar);
    CHECK(v.name() == "a");
    CHECK(v.field_in() == DimExpr::add(DimExpr::var("n"), DimExpr::constant(1)));
    CHECK(parse_sym_term(print_sym_term(v)) == v);
}

TEST_CASE("symbolic spiders accept dimension expressions") {
    const structural::SymDiagram t = parse_sym_term("(Z (+ n 1) m pi/4)");
    CHECK(t.kind() == structural::SymKind::ZSpider);
    CHECK(parse_sym_term(print_sym_term(t)) == t);
}

#include "zx/text.hpp"

#include "zx/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace zx {

namespace {

struct Token {
    enum class Kind { LParen, RParen, Atom, End };
    Kind kind = Kind::End;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    const Token& peek() {
        if (!has_current_) {
            current_ = next();
            has_current_ = true;
        }
        return current_;
    }

    Token take() {
        Token t = peek();
        has_current_ = false;
        return t;
    }

private:
    Token next() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    ++pos_;
                }
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                continue;
            }
            break;
        }
        if (pos_ >= src_.size()) {
            return {Token::Kind::End, ""};
        }
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            return {Token::Kind::LParen, "("};
        }
        if (c == ')') {
            ++pos_;
            return {Token::Kind::RParen, ")"};
        }
        std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const char d = src_[pos_];
            if (d == '(' || d == ')' || d == '#' || std::isspace(static_cast<unsigned char>(d))) {
                break;
            }
            ++pos_;
        }
        return {Token::Kind::Atom, std::string(src_.substr(start, pos_ - start))};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_;
    bool has_current_ = false;
};

[[noreturn]] void fail(const std::string& detail) { throw SyntaxError(detail); }

std::string expect_atom(Lexer& lex, const char* what) {
    Token t = lex.take();
    if (t.kind != Token::Kind::Atom) {
        fail(std::string("expected ") + what + ", found '" + t.text + "'");
    }
    return t.text;
}

void expect_rparen(Lexer& lex) {
    if (lex.take().kind != Token::Kind::RParen) {
        fail("expected ')'");
    }
}

bool is_nat(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::size_t parse_nat(const std::string& s, const char* what) {
    if (!is_nat(s)) {
        fail(std::string("expected ") + what + ", found '" + s + "'");
    }
    return std::strtoull(s.c_str(), nullptr, 10);
}

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

Angle parse_angle_atom(const std::string& atom) {
    if (atom == "0") {
        return Angle::zero();
    }
    if (atom.size() > 3 && atom.compare(atom.size() - 3, 3, "rad") == 0) {
        const std::string num = atom.substr(0, atom.size() - 3);
        char* end = nullptr;
        const double v = std::strtod(num.c_str(), &end);
        if (end == nullptr || *end != '\0' || end == num.c_str()) {
            fail("bad radian angle '" + atom + "'");
        }
        return Angle::radians(v);
    }
    std::size_t pos = 0;
    bool negative = false;
    if (pos < atom.size() && atom[pos] == '-') {
        negative = true;
        ++pos;
    }
    std::int64_t num = 1;
    std::size_t digits_start = pos;
    while (pos < atom.size() && std::isdigit(static_cast<unsigned char>(atom[pos]))) {
        ++pos;
    }
    if (pos > digits_start) {
        num = std::strtoll(atom.substr(digits_start, pos - digits_start).c_str(), nullptr, 10);
    }
    if (atom.compare(pos, 2, "pi") != 0) {
        fail("bad angle '" + atom + "'");
    }
    pos += 2;
    std::int64_t den = 1;
    if (pos < atom.size()) {
        if (atom[pos] != '/') {
            fail("bad angle '" + atom + "'");
        }
        ++pos;
        const std::string den_text = atom.substr(pos);
        if (!is_nat(den_text) || den_text.empty()) {
            fail("bad angle denominator in '" + atom + "'");
        }
        den = std::strtoll(den_text.c_str(), nullptr, 10);
        if (den == 0) {
            fail("zero angle denominator in '" + atom + "'");
        }
    }
    return Angle::rational(negative ? -num : num, den);
}

// --- concrete terms ---------------------------------------------------------

Diagram parse_term_rec(Lexer& lex) {
    Token t = lex.take();
    if (t.kind == Token::Kind::Atom) {
        if (t.text == "empty") return Diagram::empty();
        if (t.text == "wire") return Diagram::wire();
        if (t.text == "box") return Diagram::box();
        if (t.text == "cap") return Diagram::cap();
        if (t.text == "cup") return Diagram::cup();
        if (t.text == "swap") return Diagram::swap();
        fail("unknown atom '" + t.text + "'");
    }
    if (t.kind != Token::Kind::LParen) {
        fail("expected a term, found '" + t.text + "'");
    }
    const std::string head = expect_atom(lex, "constructor");
    if (head == "Z" || head == "z" || head == "X" || head == "x") {
        const std::size_t n = parse_nat(expect_atom(lex, "spider inputs"), "spider inputs");
        const std::size_t m = parse_nat(expect_atom(lex, "spider outputs"), "spider outputs");
        const Angle a = parse_angle_atom(expect_atom(lex, "angle"));
        expect_rparen(lex);
        return (head == "Z" || head == "z") ? Diagram::z(n, m, a) : Diagram::x(n, m, a);
    }
    if (head == "nwire") {
        const std::size_t n = parse_nat(expect_atom(lex, "wire count"), "wire count");
        expect_rparen(lex);
        return n_wire(n);
    }
    if (head == "stack" || head == "compose") {
        Diagram a = parse_term_rec(lex);
        Diagram b = parse_term_rec(lex);
        expect_rparen(lex);
        return head == "stack" ? Diagram::stack(a, b) : Diagram::compose(a, b);
    }
    if (head == "cast") {
        const std::size_t n = parse_nat(expect_atom(lex, "cast inputs"), "cast inputs");
        const std::size_t m = parse_nat(expect_atom(lex, "cast outputs"), "cast outputs");
        Diagram inner = parse_term_rec(lex);
        expect_rparen(lex);
        return Diagram::cast(n, m, inner);
    }
    fail("unknown constructor '" + head + "'");
}

// --- symbolic terms ---------------------------------------------------------

structural::DimExpr parse_dim_rec(Lexer& lex) {
    Token t = lex.take();
    if (t.kind == Token::Kind::Atom) {
        if (is_nat(t.text)) {
            return structural::DimExpr::constant(std::strtoull(t.text.c_str(), nullptr, 10));
        }
        if (is_ident(t.text)) {
            return structural::DimExpr::var(t.text);
        }
        fail("bad dimension atom '" + t.text + "'");
    }
    if (t.kind != Token::Kind::LParen) {
        fail("expected a dimension expression");
    }
    const std::string op = expect_atom(lex, "+ or *");
    if (op != "+" && op != "*") {
        fail("bad dimension operator '" + op + "'");
    }
    structural::DimExpr a = parse_dim_rec(lex);
    structural::DimExpr b = parse_dim_rec(lex);
    expect_rparen(lex);
    return op == "+" ? structural::DimExpr::add(a, b) : structural::DimExpr::mul(a, b);
}

structural::SymDiagram parse_sym_rec(Lexer& lex) {
    using structural::SymDiagram;
    Token t = lex.take();
    if (t.kind == Token::Kind::Atom) {
        if (t.text == "empty") return SymDiagram::empty();
        if (t.text == "wire") return SymDiagram::wire();
        if (t.text == "box") return SymDiagram::box();
        if (t.text == "cap") return SymDiagram::cap();
        if (t.text == "cup") return SymDiagram::cup();
        if (t.text == "swap") return SymDiagram::swap();
        fail("unknown atom '" + t.text + "'");
    }
    if (t.kind != Token::Kind::LParen) {
        fail("expected a term, found '" + t.text + "'");
    }
    const std::string head = expect_atom(lex, "constructor");
    if (head == "Z" || head == "z" || head == "X" || head == "x") {
        structural::DimExpr n = parse_dim_rec(lex);
        structural::DimExpr m = parse_dim_rec(lex);
        const Angle a = parse_angle_atom(expect_atom(lex, "angle"));
        expect_rparen(lex);
        return (head == "Z" || head == "z") ? SymDiagram::z(n, m, a) : SymDiagram::x(n, m, a);
    }
    if (head == "nwire") {
        structural::DimExpr e = parse_dim_rec(lex);
        expect_rparen(lex);
        return SymDiagram::n_wire(e);
    }
    if (head == "var") {
        const std::string name = expect_atom(lex, "metavariable name");
        if (!is_ident(name)) {
            fail("bad metavariable name '" + name + "'");
        }
        structural::DimExpr in = parse_dim_rec(lex);
        structural::DimExpr out = parse_dim_rec(lex);
        expect_rparen(lex);
        return SymDiagram::metavar(name, in, out);
    }
    if (head == "stack" || head == "compose") {
        SymDiagram a = parse_sym_rec(lex);
        SymDiagram b = parse_sym_rec(lex);
        expect_rparen(lex);
        return head == "stack" ? SymDiagram::stack(a, b) : SymDiagram::compose(a, b);
    }
    if (head == "cast") {
        structural::DimExpr n = parse_dim_rec(lex);
        structural::DimExpr m = parse_dim_rec(lex);
        SymDiagram inner = parse_sym_rec(lex);
        expect_rparen(lex);
        return SymDiagram::cast(n, m, inner);
    }
    fail("unknown constructor '" + head + "'");
}

void expect_end(Lexer& lex) {
    if (lex.peek().kind != Token::Kind::End) {
        fail("trailing input after term: '" + lex.peek().text + "'");
    }
}

} // namespace

std::string print_angle(const Angle& a) { return a.str(); }

Angle parse_angle(std::string_view text) {
    Lexer lex(text);
    const std::string atom = expect_atom(lex, "angle");
    expect_end(lex);
    return parse_angle_atom(atom);
}

std::string print_term(const Diagram& d) {
    switch (d.kind()) {
    case DiagramKind::Empty:
        return "empty";
    case DiagramKind::Wire:
        return "wire";
    case DiagramKind::Box:
        return "box";
    case DiagramKind::Cap:
        return "cap";
    case DiagramKind::Cup:
        return "cup";
    case DiagramKind::Swap:
        return "swap";
    case DiagramKind::ZSpider:
        return "(Z " + std::to_string(d.field_in()) + " " + std::to_string(d.field_out()) + " " +
               d.phase().str() + ")";
    case DiagramKind::XSpider:
        return "(X " + std::to_string(d.field_in()) + " " + std::to_string(d.field_out()) + " " +
               d.phase().str() + ")";
    case DiagramKind::Stack:
        return "(stack " + print_term(d.first()) + " " + print_term(d.second()) + ")";
    case DiagramKind::Compose:
        return "(compose " + print_term(d.first()) + " " + print_term(d.second()) + ")";
    case DiagramKind::Cast:
        return "(cast " + std::to_string(d.field_in()) + " " + std::to_string(d.field_out()) +
               " " + print_term(d.first()) + ")";
    }
    throw DimError("unreachable diagram kind");
}

Diagram parse_term(std::string_view text) {
    Lexer lex(text);
    Diagram d = parse_term_rec(lex);
    expect_end(lex);
    return d;
}

std::string print_dim_expr(const structural::DimExpr& e) { return e.str(); }

std::string print_sym_term(const structural::SymDiagram& d) {
    using structural::SymKind;
    switch (d.kind()) {
    case SymKind::Empty:
        return "empty";
    case SymKind::Wire:
        return "wire";
    case SymKind::Box:
        return "box";
    case SymKind::Cap:
        return "cap";
    case SymKind::Cup:
        return "cup";
    case SymKind::Swap:
        return "swap";
    case SymKind::ZSpider:
        return "(Z " + d.field_in().str() + " " + d.field_out().str() + " " + d.phase().str() +
               ")";
    case SymKind::XSpider:
        return "(X " + d.field_in().str() + " " + d.field_out().str() + " " + d.phase().str() +
               ")";
    case SymKind::NWire:
        return "(nwire " + d.field_in().str() + ")";
    case SymKind::MetaVar:
        return "(var " + d.name() + " " + d.field_in().str() + " " + d.field_out().str() + ")";
    case SymKind::Stack:
        return "(stack " + print_sym_term(d.first()) + " " + print_sym_term(d.second()) + ")";
    case SymKind::Compose:
        return "(compose " + print_sym_term(d.first()) + " " + print_sym_term(d.second()) + ")";
    case SymKind::Cast:
        return "(cast " + d.field_in().str() + " " + d.field_out().str() + " " +
               print_sym_term(d.first()) + ")";
    }
    throw DimError("unreachable symbolic diagram kind");
}

structural::SymDiagram parse_sym_term(std::string_view text) {
    Lexer lex(text);
    structural::SymDiagram d = parse_sym_rec(lex);
    expect_end(lex);
    return d;
}

} // namespace zx

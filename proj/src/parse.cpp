#include <wittkit/parse.hpp>

#include <cctype>
#include <optional>

#include <wittkit/error.hpp>
#include <wittkit/integer.hpp>

namespace wittkit
{

namespace
{

std::string trim(const std::string &s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool all_digits(const std::string &s)
{
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::uint64_t to_u64(const std::string &s, const std::string &spec)
{
    if (!all_digits(s) || s.size() > 18) throw ParseError("bad number '" + s + "' in ring spec '" + spec + "'");
    return std::stoull(s);
}

Ring parse_constant_field(const std::string &s, const std::string &spec)
{
    if (s == "Q") return Ring::rationals();
    if (s.size() < 2 || s[0] != 'F') throw ParseError("unknown field '" + s + "' in ring spec '" + spec + "'");
    const std::string body = s.substr(1);
    const std::size_t caret = body.find('^');
    if (caret != std::string::npos) {
        const std::uint64_t p = to_u64(body.substr(0, caret), spec);
        const std::uint64_t e = to_u64(body.substr(caret + 1), spec);
        if (!is_prime(p)) throw ParseError("F" + body + ": " + std::to_string(p) + " is not prime");
        if (e < 1 || e > 16) throw ParseError("F" + body + ": extension degree must lie in 1..16");
        return make_finite_field(p, static_cast<unsigned>(e));
    }
    std::uint64_t q = to_u64(body, spec);
    if (q < 2) throw ParseError("F" + body + " is not a field");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) throw ParseError("F" + body + ": order is not a prime power");
    if (e > 16) throw ParseError("F" + body + ": extension degree must lie in 1..16");
    return make_finite_field(p, e);
}

bool is_name(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Expression parsing over a value algebra A providing number, name, add,
// sub, mul, div, neg and pow.

enum class Tok { num, name, op, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string &s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::num, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::name, s.substr(i, j - i), i});
            i = j;
        } else if (c == '*' && i + 1 < s.size() && s[i + 1] == '*') {
            out.push_back({Tok::op, "^", i});
            i += 2;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Tok::op, std::string(1, c), i});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i) + " in '" + s + "'");
        }
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

template <class A>
class Parser
{
public:
    using V = typename A::Value;

    Parser(const A &alg, const std::string &text) : alg_(alg), text_(text), toks_(tokenize(text)) {}

    V run()
    {
        if (toks_.front().kind == Tok::end) fail("empty expression");
        V v = expr();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token &peek() const { return toks_[i_]; }
    bool is_op(const char *op) const { return peek().kind == Tok::op && peek().text == op; }

    [[noreturn]] void fail(const std::string &why) const
    {
        throw ParseError(why + " at position " + std::to_string(peek().pos) + " in '" + text_ + "'");
    }

    V expr()
    {
        V v = term();
        while (is_op("+") || is_op("-")) {
            const bool plus = peek().text == "+";
            ++i_;
            V r = term();
            v = plus ? alg_.add(v, r) : alg_.sub(v, r);
        }
        return v;
    }

    V term()
    {
        V v = unary();
        while (true) {
            if (is_op("*")) {
                ++i_;
                v = alg_.mul(v, unary());
            } else if (is_op("/")) {
                ++i_;
                v = alg_.div(v, unary());
            } else if (peek().kind == Tok::num || peek().kind == Tok::name || is_op("(")) {
                v = alg_.mul(v, power());
            } else {
                return v;
            }
        }
    }

    V unary()
    {
        if (is_op("-")) {
            ++i_;
            return alg_.neg(unary());
        }
        if (is_op("+")) {
            ++i_;
            return unary();
        }
        return power();
    }

    V power()
    {
        V b = atom();
        if (!is_op("^")) return b;
        ++i_;
        const bool paren = is_op("(");
        if (paren) ++i_;
        bool negative = false;
        if (is_op("-") || is_op("+")) {
            negative = peek().text == "-";
            ++i_;
        }
        if (peek().kind != Tok::num) fail("expected an integer exponent");
        Int e(peek().text);
        ++i_;
        if (paren) {
            if (!is_op(")")) fail("expected ')'");
            ++i_;
        }
        if (is_op("^")) fail("ambiguous repeated exponent; use parentheses");
        return alg_.pow(b, negative ? Int(-e) : e);
    }

    V atom()
    {
        const Token t = peek();
        if (t.kind == Tok::num) {
            ++i_;
            return alg_.number(Int(t.text));
        }
        if (t.kind == Tok::name) {
            ++i_;
            auto v = alg_.name(t.text);
            if (!v) throw ParseError("unknown name '" + t.text + "' in '" + text_ + "'");
            return *v;
        }
        if (is_op("(")) {
            ++i_;
            V v = expr();
            if (!is_op(")")) fail("expected ')'");
            ++i_;
            return v;
        }
        fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }

    const A &alg_;
    const std::string &text_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

std::optional<Elem> lookup(const Ring &r, const std::string &name)
{
    switch (r.kind()) {
    case RingKind::ext_field:
        if (name == r.generator_name()) return r.generator();
        return std::nullopt;
    case RingKind::function_field: {
        const auto &vars = r.variables();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (vars[i] == name) return r.variable(i);
        }
        if (auto c = lookup(r.base(), name)) return r.embed(*c);
        return std::nullopt;
    }
    case RingKind::simple_ext:
        if (name == r.generator_name()) return r.generator();
        if (auto c = lookup(r.base(), name)) return r.embed(*c);
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

struct ElemAlgebra {
    using Value = Elem;
    const Ring &r;

    Elem number(const Int &v) const { return r.from_int(v); }
    std::optional<Elem> name(const std::string &s) const { return lookup(r, s); }
    Elem add(const Elem &a, const Elem &b) const { return a + b; }
    Elem sub(const Elem &a, const Elem &b) const { return a - b; }
    Elem mul(const Elem &a, const Elem &b) const { return a * b; }
    Elem div(const Elem &a, const Elem &b) const
    {
        if (b.is_zero()) throw ParseError("division by zero");
        return a / b;
    }
    Elem neg(const Elem &a) const { return -a; }
    Elem pow(const Elem &a, const Int &e) const { return a.pow(e); }
};

struct PolyAlgebra {
    using Value = SparsePoly;
    const Ring &k;
    const std::vector<std::string> &names;

    SparsePoly number(const Int &v) const { return SparsePoly::constant(k.from_int(v), names.size()); }
    std::optional<SparsePoly> name(const std::string &s) const
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == s) return SparsePoly::variable(k, names.size(), i);
        }
        if (s.size() > 1 && s[0] == 'x' && all_digits(s.substr(1)) && s.size() < 8) {
            const std::size_t i = std::stoul(s.substr(1));
            if (i >= 1 && i <= names.size()) return SparsePoly::variable(k, names.size(), i - 1);
        }
        if (auto c = lookup(k, s)) return SparsePoly::constant(*c, names.size());
        return std::nullopt;
    }
    SparsePoly add(const SparsePoly &a, const SparsePoly &b) const { return a + b; }
    SparsePoly sub(const SparsePoly &a, const SparsePoly &b) const { return a - b; }
    SparsePoly mul(const SparsePoly &a, const SparsePoly &b) const { return a * b; }
    SparsePoly div(const SparsePoly &a, const SparsePoly &b) const
    {
        if (!b.is_constant() || b.is_zero()) throw ParseError("polynomials may only be divided by nonzero constants");
        return a.scaled(b.terms().begin()->second.inv());
    }
    SparsePoly neg(const SparsePoly &a) const { return -a; }
    SparsePoly pow(const SparsePoly &a, const Int &e) const
    {
        if (e < 0 || e > 10000) throw ParseError("polynomial exponents must lie in 0..10000");
        return a.pow(static_cast<unsigned>(e.get_ui()));
    }
};

} // namespace

Ring parse_ring(const std::string &spec0)
{
    const std::string spec = trim(spec0);
    if (spec == "Z") return Ring::integers();
    if (spec.rfind("Z/", 0) == 0) {
        const std::string n = spec.substr(2);
        if (!all_digits(n)) throw ParseError("bad modulus in ring spec '" + spec + "'");
        const Int N(n);
        if (N < 2) throw ParseError("Z/N needs N >= 2");
        return Ring::integers_mod(N);
    }
    const std::size_t open = spec.find('(');
    if (open == std::string::npos) return parse_constant_field(spec, spec);
    if (spec.back() != ')') throw ParseError("missing ')' in ring spec '" + spec + "'");
    const Ring k = parse_constant_field(trim(spec.substr(0, open)), spec);
    std::vector<std::string> vars;
    std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = inner.find(',', start);
        const std::string v = trim(inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!is_name(v)) throw ParseError("bad variable name '" + v + "' in ring spec '" + spec + "'");
        for (const auto &w : vars) {
            if (w == v) throw ParseError("repeated variable '" + v + "' in ring spec '" + spec + "'");
        }
        if (k.kind() == RingKind::ext_field && v == k.generator_name()) {
            throw ParseError("variable '" + v + "' clashes with the generator of " + k.spec());
        }
        vars.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (vars.size() > 3) throw ParseError("at most three variables are supported, got '" + spec + "'");
    return Ring::function_field(k, vars);
}

Elem parse_elem(const Ring &r, const std::string &text)
{
    const ElemAlgebra alg{r};
    return Parser<ElemAlgebra>(alg, text).run();
}

SparsePoly parse_poly(const Ring &k, const std::string &text, const std::vector<std::string> &names)
{
    if (!k.is_finite_field()) throw ParseError("polynomials for point counting need a finite field, got " + k.spec());
    const PolyAlgebra alg{k, names};
    return Parser<PolyAlgebra>(alg, text).run();
}

} // namespace wittkit

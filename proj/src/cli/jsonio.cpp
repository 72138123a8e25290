#include "jsonio.hpp"

#include <fstream>
#include <sstream>

#include <wittkit/error.hpp>
#include <wittkit/parse.hpp>

namespace wittkit::cli
{

json to_json(const Int &v)
{
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json to_json(const Elem &a)
{
    Int v;
    if (a.integral_value(v)) return to_json(v);
    // integer constants of function fields and extensions
    std::string text = a.to_string();
    if (!text.empty() && text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos && text != "-") {
        if (v.set_str(text, 10) == 0) return to_json(v);
    }
    return text;
}

json to_json(const std::vector<Elem> &v)
{
    json out = json::array();
    for (const auto &a : v) out.push_back(to_json(a));
    return out;
}

json to_json(const WittVector &w) { return to_json(w.components()); }

json to_json(const DiffForm &w)
{
    json terms = json::array();
    for (const auto &[mask, c] : w.terms()) {
        json dt = json::array();
        for (std::size_t i = 0; i < w.variables().size(); ++i) {
            if (mask & (1u << i)) dt.push_back(w.variables()[i]);
        }
        terms.push_back(json{{"dt", dt}, {"coeff", to_json(c)}});
    }
    return json{{"degree", w.degree()}, {"text", w.to_string()}, {"terms", terms}};
}

json to_json(const ZeroCycle &z)
{
    json pts = json::array();
    for (const auto &[P, mult] : z.terms()) {
        pts.push_back(json{{"mult", mult}, {"degree", P.degree()}, {"point", P.to_string()}});
    }
    return json{{"dim", z.dim()}, {"degree", z.degree()}, {"points", pts}};
}

json to_json(const P1Point &P, const std::string &param) { return P.to_string(param); }

namespace
{

std::string item_text(const json &v)
{
    if (v.is_number_integer()) return v.dump();
    if (v.is_string()) return v.get<std::string>();
    throw ParseError("expected an integer or an expression string, got " + v.dump());
}

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string ring_spec(const json &j, const std::string &field_override)
{
    if (!field_override.empty()) return field_override;
    if (j.contains("field")) return field(j, "field").get<std::string>();
    return "Q";
}

// g in k[gen] from text, via k(gen).
UniPoly poly_from_text(const Ring &k, const std::string &gen, const std::string &text)
{
    const Ring K = param_field(k, gen);
    const UniFraction f = as_univariate(parse_elem(K, text));
    if (!f.den.is_one()) throw ParseError("'" + text + "' is not a polynomial in " + gen);
    return f.num;
}

} // namespace

std::vector<Elem> elems_from_json(const Ring &r, const json &arr)
{
    if (!arr.is_array()) throw ParseError("expected a JSON array, got " + arr.dump());
    std::vector<Elem> out;
    for (const auto &v : arr) out.push_back(parse_elem(r, item_text(v)));
    return out;
}

std::vector<Elem> elems_from_text(const Ring &r, const std::string &text)
{
    json arr = json::parse(text, nullptr, false);
    if (!arr.is_discarded()) return elems_from_json(r, arr);
    // Bare expressions such as [1,a,0]: split at top-level commas.
    const auto b = text.find_first_not_of(" \t\r\n");
    const auto e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos || text[b] != '[' || text[e] != ']') throw ParseError("expected an array '[...]', got '" + text + "'");
    std::vector<Elem> out;
    std::string cur;
    int depth = 0;
    for (std::size_t i = b + 1; i < e; ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_elem(r, cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_elem(r, cur));
    else if (!out.empty()) throw ParseError("empty entry in '" + text + "'");
    return out;
}

ParamCurve curve_from_json(const json &j, const std::string &field_override)
{
    const Ring k = parse_ring(ring_spec(j, field_override));
    const std::string param = j.contains("param") ? field(j, "param").get<std::string>() : default_param(k);
    const Ring K = param_field(k, param);
    const Elem x = parse_elem(K, item_text(field(j, "x")));
    const std::vector<Elem> y = elems_from_json(K, field(j, "y"));
    if (j.contains("n") && field(j, "n").get<std::size_t>() != y.size()) {
        throw ParseError("curve has n = " + field(j, "n").dump() + " but " + std::to_string(y.size()) + " y-coordinates");
    }
    const unsigned m = j.contains("modulus") ? field(j, "modulus").get<unsigned>() : 2;
    return ParamCurve(k, x, y, m);
}

ZeroCycle cycle_from_json(const json &j, const std::string &field_override)
{
    if (j.contains("curve")) return boundary(curve_from_json(field(j, "curve"), field_override));
    const Ring k = parse_ring(ring_spec(j, field_override));
    const json &pts = field(j, "points");
    if (!pts.is_array() || pts.empty()) throw ParseError("'points' must be a nonempty array");
    std::optional<ZeroCycle> z;
    for (const auto &p : pts) {
        Ring L = k;
        if (p.contains("minpoly")) {
            const std::string gen = p.contains("generator") ? field(p, "generator").get<std::string>() : "th";
            L = Ring::simple_ext(k, poly_from_text(k, gen, field(p, "minpoly").get<std::string>()), gen);
        }
        const std::vector<Elem> coords = elems_from_json(L, field(p, "coords"));
        const long mult = p.contains("mult") ? field(p, "mult").get<long>() : 1;
        CanonicalPoint c = canonical_point(k, coords);
        if (!z) z.emplace(k, coords.size());
        if (z->dim() != coords.size()) throw ParseError("points of a cycle must have the same number of coordinates");
        z->add(c.point, mult * static_cast<long>(c.index));
    }
    return *z;
}

json load_json_arg(const std::string &arg)
{
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || arg[first] != '{') {
        std::ifstream in(arg);
        if (!in) throw ParseError("cannot read '" + arg + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

} // namespace wittkit::cli

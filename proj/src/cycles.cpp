#include <algorithm>
#include <array>
#include <map>

#include <wittkit/cycles.hpp>
#include <wittkit/error.hpp>
#include <wittkit/factor.hpp>
#include <wittkit/linalg.hpp>

namespace wittkit
{

// ---------------------------------------------------------------------------
// Rational functions on P^1

Ring param_field(const Ring &k, const std::string &param)
{
    if (k.kind() == RingKind::function_field) {
        std::vector<std::string> vars = k.variables();
        if (std::find(vars.begin(), vars.end(), param) != vars.end()) throw DomainError("parameter " + param + " clashes with " + k.spec());
        vars.push_back(param);
        return Ring::function_field(k.base(), std::move(vars));
    }
    if (!k.is_field() || k.kind() == RingKind::simple_ext) throw DomainError("curves need a ground field Q, F_q or a function field, got " + k.spec());
    return Ring::function_field(k, {param});
}

std::string default_param(const Ring &k)
{
    if (k.kind() == RingKind::function_field) {
        const auto &v = k.variables();
        for (const char *name : {"s", "u", "v", "w"}) {
            if (std::find(v.begin(), v.end(), name) == v.end()) return name;
        }
        throw DomainError("no free parameter name for " + k.spec());
    }
    return "s";
}

Ring coefficient_field(const Ring &K)
{
    if (K.kind() != RingKind::function_field) throw DomainError(K.spec() + " is not a field of rational functions");
    const auto &v = K.variables();
    if (v.size() == 1) return K.base();
    return Ring::function_field(K.base(), std::vector<std::string>(v.begin(), v.end() - 1));
}

namespace
{

UniPoly last_variable_poly(const MPoly &f, const Ring &k)
{
    const std::size_t r = f.nvars() - 1;
    const Ring &F = f.constants();
    std::map<unsigned, std::vector<detail::MTerm>> by_deg;
    for (const auto &t : f.terms()) {
        std::array<unsigned, MPoly::max_vars> e{};
        for (std::size_t i = 0; i < r; ++i) e[i] = MPoly::exponent(t.key, i);
        by_deg[MPoly::exponent(t.key, r)].push_back({MPoly::make_key(e), t.coef});
    }
    if (by_deg.empty()) return UniPoly(k);
    std::vector<Elem> c(by_deg.rbegin()->first + 1, k.zero());
    for (auto &[e, terms] : by_deg) {
        if (r == 0) {
            c[e] = k.embed(terms.front().coef);
        } else {
            c[e] = k.ratfn(MPoly::from_terms(F, r, std::move(terms)), MPoly::constant(F.one(), r));
        }
    }
    return UniPoly(k, std::move(c));
}

} // namespace

UniFraction as_univariate(const Elem &h)
{
    const Ring k = coefficient_field(h.ring());
    const auto &f = h.as_ratfn();
    UniPoly num = last_variable_poly(f.num, k), den = last_variable_poly(f.den, k);
    const Elem lc = den.lc();
    if (!lc.is_one()) {
        const Elem inv = lc.inv();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return {std::move(num), std::move(den)};
}

Elem from_univariate(const Ring &K, const UniPoly &num, const UniPoly &den)
{
    const Elem s = K.variable(K.num_variables() - 1);
    auto lift = [&](const UniPoly &p) {
        Elem acc = K.zero();
        for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * s + K.embed(p.coeffs()[i]);
        return acc;
    };
    return lift(num) / lift(den);
}

P1Point P1Point::at_infinity(const Ring &k) { return P1Point{true, UniPoly(k)}; }

std::size_t P1Point::degree() const { return infinite ? 1 : static_cast<std::size_t>(phi.degree()); }

Ring P1Point::residue_field() const
{
    if (infinite || phi.degree() == 1) return phi.ring();
    return Ring::simple_ext(phi.ring(), phi, "th");
}

Elem P1Point::root() const
{
    if (infinite) throw DomainError("the point at infinity has no finite coordinate");
    if (phi.degree() == 1) return -phi[0];
    return residue_field().generator();
}

std::string P1Point::to_string(const std::string &param) const
{
    if (infinite) return "inf";
    if (phi.degree() == 1) return (-phi[0]).to_string();
    return phi.to_string(param) + "=0";
}

bool P1Point::operator==(const P1Point &o) const { return infinite == o.infinite && (infinite || phi == o.phi); }

bool P1Point::operator<(const P1Point &o) const
{
    if (infinite != o.infinite) return o.infinite;
    if (infinite) return false;
    return UniPoly::compare(phi, o.phi) < 0;
}

P1Divisor divisor_on_P1(const Elem &h)
{
    if (h.is_zero()) throw DomainError("the zero function has no divisor");
    const UniFraction f = as_univariate(h);
    P1Divisor out;
    if (f.num.degree() > 0) {
        for (auto &[phi, e] : factor_univariate(f.num)) out.push_back({P1Point{false, phi}, static_cast<long>(e)});
    }
    if (f.den.degree() > 0) {
        for (auto &[phi, e] : factor_univariate(f.den)) out.push_back({P1Point{false, phi}, -static_cast<long>(e)});
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    const long inf = f.den.degree() - f.num.degree();
    if (inf != 0) out.push_back({P1Point::at_infinity(f.num.ring()), inf});
    return out;
}

long order_at(const Elem &h, const P1Point &P)
{
    if (h.is_zero()) throw DomainError("the zero function has no order");
    UniFraction f = as_univariate(h);
    if (P.infinite) return f.den.degree() - f.num.degree();
    long v = 0;
    while (P.phi.divides(f.num)) {
        f.num = f.num / P.phi;
        ++v;
    }
    while (P.phi.divides(f.den)) {
        f.den = f.den / P.phi;
        --v;
    }
    return v;
}

std::optional<Elem> value_at(const Elem &h, const P1Point &P)
{
    const UniFraction f = as_univariate(h);
    const Ring k = f.num.ring();
    if (P.infinite) {
        if (f.num.degree() > f.den.degree()) return std::nullopt;
        if (f.num.degree() < f.den.degree()) return k.zero();
        return f.num.lc() / f.den.lc();
    }
    const Elem t = P.root();
    const Elem d = f.den.eval(t);
    if (d.is_zero()) return std::nullopt;
    return f.num.eval(t) / d;
}

// ---------------------------------------------------------------------------
// Closed points

ClosedPoint::ClosedPoint(Ring base, Ring field, UniPoly minpoly, std::vector<Elem> coords)
    : base_(std::move(base)), field_(std::move(field)), minpoly_(std::move(minpoly)), coords_(std::move(coords))
{
}

std::size_t ClosedPoint::degree() const { return static_cast<std::size_t>(minpoly_.degree()); }

bool ClosedPoint::operator==(const ClosedPoint &o) const { return base_ == o.base_ && minpoly_ == o.minpoly_ && coords_ == o.coords_; }

bool ClosedPoint::operator<(const ClosedPoint &o) const
{
    if (dim() != o.dim()) return dim() < o.dim();
    if (degree() != o.degree()) return degree() < o.degree();
    if (int c = UniPoly::compare(minpoly_, o.minpoly_)) return c < 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (int c = Elem::compare(coords_[i], o.coords_[i])) return c < 0;
    }
    return false;
}

std::string ClosedPoint::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].to_string();
    }
    s += ")";
    if (degree() > 1) s += " over " + minpoly_.to_string("th") + "=0";
    return s;
}

namespace
{

// Integer vectors with entry sum T, first entry largest first.
void compositions(std::size_t n, unsigned T, std::vector<unsigned> &cur, std::vector<std::vector<unsigned>> &out)
{
    if (cur.size() + 1 == n) {
        cur.push_back(T);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned a = T + 1; a-- > 0;) {
        cur.push_back(a);
        compositions(n, T - a, cur, out);
        cur.pop_back();
    }
}

Matrix columns(const std::vector<std::vector<Elem>> &cols, std::size_t rows)
{
    Matrix m(rows, std::vector<Elem>());
    for (std::size_t r = 0; r < rows; ++r) {
        for (const auto &c : cols) m[r].push_back(c[r]);
    }
    return m;
}

} // namespace

CanonicalPoint canonical_point(const Ring &k, const std::vector<Elem> &coords0)
{
    if (coords0.empty()) throw DomainError("a point needs at least the x coordinate");
    Ring L = k;
    for (const auto &c : coords0) {
        if (c.ring() != k && !k.contains(c.ring())) {
            L = c.ring();
            break;
        }
    }
    std::vector<Elem> coords;
    for (const auto &c : coords0) coords.push_back(L.embed(c));
    if (coords[0].is_zero()) throw DomainError("x = 0 is not a point of A^1 \\ 0");
    for (std::size_t i = 1; i < coords.size(); ++i) {
        if (coords[i].is_zero() || coords[i].is_one()) throw DomainError("y_" + std::to_string(i) + " must avoid 0 and 1");
    }
    if (L == k) {
        UniPoly mu(k, {-coords[0], k.one()});
        return {ClosedPoint(k, k, std::move(mu), std::move(coords)), 1};
    }
    if (!is_extension_of(L, k)) throw DomainError("coordinates in " + L.spec() + " are not algebraic over " + k.spec());
    const std::size_t d = extension_degree(L, k);
    std::vector<std::vector<Elem>> coord_vecs;
    for (const auto &c : coords) coord_vecs.push_back(coordinates(c, k));

    const std::uint64_t p = k.char_p();
    std::size_t tried = 0;
    for (unsigned T = 1; T <= 24 && tried < 2000; ++T) {
        std::vector<std::vector<unsigned>> cands;
        std::vector<unsigned> cur;
        compositions(coords.size(), T, cur, cands);
        for (const auto &c : cands) {
            if (p != 0 && std::any_of(c.begin(), c.end(), [&](unsigned v) { return v % p == 0 && v != 0; })) continue;
            ++tried;
            Elem gamma = L.zero();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (c[i]) gamma += L.from_int(static_cast<long>(c[i])) * coords[i];
            }
            // minimal polynomial from the first linear dependency among powers
            std::vector<std::vector<Elem>> pw{coordinates(L.one(), k)};
            Elem g = L.one();
            std::optional<std::vector<Elem>> rel;
            std::size_t e = 1;
            for (; e <= d; ++e) {
                g *= gamma;
                std::vector<Elem> ge = coordinates(g, k);
                rel = solve(columns(pw, d), ge);
                if (rel) break;
                pw.push_back(std::move(ge));
            }
            WITTKIT_ASSERT(rel.has_value(), "powers of an algebraic element stayed independent");
            std::vector<Elem> mc;
            for (const auto &v : *rel) mc.push_back(-v);
            mc.push_back(k.one());
            UniPoly mu(k, std::move(mc));
            if (p != 0 && !is_separable(mu)) continue;
            std::vector<std::vector<Elem>> expr;
            const Matrix M = columns(pw, d);
            bool ok = true;
            for (const auto &cv : coord_vecs) {
                auto sol = solve(M, cv);
                if (!sol) {
                    ok = false;
                    break;
                }
                expr.push_back(std::move(*sol));
            }
            if (!ok) continue;
            std::vector<Elem> out;
            if (e == 1) {
                for (auto &v : expr) out.push_back(v[0]);
                return {ClosedPoint(k, k, std::move(mu), std::move(out)), d};
            }
            const Ring F = Ring::simple_ext(k, mu, "th");
            for (auto &v : expr) out.push_back(from_coordinates(F, v));
            return {ClosedPoint(k, F, std::move(mu), std::move(out)), d / e};
        }
    }
    throw DomainError("no primitive element found for a point over " + L.spec());
}

ClosedPoint make_point(const Ring &k, const std::vector<Elem> &coords)
{
    CanonicalPoint c = canonical_point(k, coords);
    if (c.index != 1) throw DomainError("coordinates generate a proper subfield of their field");
    return std::move(c.point);
}

// ---------------------------------------------------------------------------
// Zero-cycles

ZeroCycle::ZeroCycle(Ring k, std::size_t dim) : base_(std::move(k)), dim_(dim) {}

long ZeroCycle::degree() const
{
    long s = 0;
    for (const auto &[P, m] : terms_) s += m * static_cast<long>(P.degree());
    return s;
}

void ZeroCycle::add(const ClosedPoint &P, long mult)
{
    if (P.dim() != dim_) throw DomainError("point of dimension " + std::to_string(P.dim()) + " added to a cycle of dimension " + std::to_string(dim_));
    if (P.base() != base_) throw DomainError("point over " + P.base().spec() + " added to a cycle over " + base_.spec());
    if (mult == 0) return;
    auto [it, inserted] = terms_.emplace(P, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

ZeroCycle ZeroCycle::operator+(const ZeroCycle &o) const
{
    ZeroCycle r = *this;
    for (const auto &[P, m] : o.terms_) r.add(P, m);
    return r;
}

ZeroCycle ZeroCycle::operator-(const ZeroCycle &o) const { return *this + o.scaled(-1); }

ZeroCycle ZeroCycle::scaled(long c) const
{
    ZeroCycle r(base_, dim_);
    if (c == 0) return r;
    for (const auto &[P, m] : terms_) r.terms_.emplace(P, m * c);
    return r;
}

bool ZeroCycle::operator==(const ZeroCycle &o) const { return base_ == o.base_ && dim_ == o.dim_ && terms_ == o.terms_; }

std::string ZeroCycle::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto &[P, m] : terms_) {
        if (s.empty()) {
            if (m < 0) s += "-";
        } else {
            s += m < 0 ? " - " : " + ";
        }
        const long a = m < 0 ? -m : m;
        if (a != 1) s += std::to_string(a) + "*";
        s += "[" + P.to_string() + "]";
    }
    return s;
}

ZeroCycle divisor_cycle(const UniPoly &f)
{
    const Ring &k = f.ring();
    if (f.is_zero()) throw DomainError("div(0) is undefined");
    if (f[0].is_zero()) throw DomainError("f vanishes at 0, so div(f) leaves A^1 \\ 0");
    ZeroCycle z(k, 1);
    if (f.degree() == 0) return z;
    for (const auto &[phi, e] : factor_univariate(f)) {
        const P1Point P{false, phi};
        CanonicalPoint c = canonical_point(k, {P.root()});
        z.add(c.point, static_cast<long>(e * c.index));
    }
    return z;
}

// ---------------------------------------------------------------------------
// Curves

ParamCurve::ParamCurve(Ring k, Elem x, std::vector<Elem> y, unsigned modulus) : k_(std::move(k)), modulus_(modulus)
{
    if (y.empty()) throw DomainError("a curve needs n >= 1 coordinates y_i");
    if (y.size() > 8) throw DomainError("at most 8 coordinates y_i are supported");
    const Elem *ref = nullptr;
    if (x.ring() != k_ && !k_.contains(x.ring())) ref = &x;
    for (const auto &v : y) {
        if (!ref && v.ring() != k_ && !k_.contains(v.ring())) ref = &v;
    }
    if (!ref) throw DomainError("the curve is constant");
    K_ = ref->ring();
    if (coefficient_field(K_) != k_) throw DomainError("curve functions live in " + K_.spec() + ", not in k(s) for k = " + k_.spec());
    x_ = K_.embed(x);
    for (auto &v : y) y_.push_back(K_.embed(v));
    if (x_.is_zero()) throw DomainError("x must not vanish identically");
    for (std::size_t i = 0; i < y_.size(); ++i) {
        if (y_[i].is_zero() || y_[i].is_one()) throw DomainError("y_" + std::to_string(i + 1) + " is identically 0 or 1");
    }
}

std::string ParamCurve::to_string() const
{
    std::string s = "x = " + x_.to_string();
    for (std::size_t i = 0; i < y_.size(); ++i) s += ", y" + std::to_string(i + 1) + " = " + y_[i].to_string();
    return s;
}

ParamCurve fy_equals_g(const UniPoly &f, const UniPoly &g, unsigned modulus)
{
    const Ring &k = f.ring();
    const Ring K = param_field(k, default_param(k));
    const Elem s = K.variable(K.num_variables() - 1);
    return ParamCurve(k, s, {from_univariate(K, g, f)}, modulus);
}

std::vector<Face> faces(const ParamCurve &C)
{
    const Ring &k = C.base();
    const std::size_t n = C.n();
    const std::string &param = C.function_field().variables().back();
    std::vector<Face> out;
    for (std::size_t i = 1; i <= n; ++i) {
        Face zero{i, false, ZeroCycle(k, n)}, inf{i, true, ZeroCycle(k, n)};
        for (const auto &[P, ord] : divisor_on_P1(C.y(i))) {
            const bool at_inf = ord < 0;
            auto fail = [&, &P = P](const std::string &why) {
                throw GoodPositionError(i, at_inf, "face y" + std::to_string(i) + (at_inf ? "=inf" : "=0") + " at " + param + " = " + P.to_string(param) + ": " + why);
            };
            auto xv = value_at(C.x(), P);
            if (!xv) continue; // x = inf: not a point of the curve in A^1 x ...
            if (xv->is_zero()) fail("x = 0");
            std::vector<Elem> coords{*xv};
            for (std::size_t j = 1; j <= n; ++j) {
                if (j == i) continue;
                auto v = value_at(C.y(j), P);
                if (!v) fail("y" + std::to_string(j) + " = inf");
                if (v->is_zero()) fail("y" + std::to_string(j) + " = 0");
                if (v->is_one()) fail("y" + std::to_string(j) + " = 1");
                coords.push_back(*v);
            }
            CanonicalPoint c = canonical_point(k, coords);
            (at_inf ? inf : zero).cycle.add(c.point, (at_inf ? -ord : ord) * static_cast<long>(c.index));
        }
        out.push_back(std::move(zero));
        out.push_back(std::move(inf));
    }
    return out;
}

ZeroCycle boundary(const ParamCurve &C)
{
    ZeroCycle z(C.base(), C.n());
    for (const Face &f : faces(C)) {
        const long sign = (f.index % 2 == 1 ? -1 : 1) * (f.at_infinity ? -1 : 1);
        z = z + f.cycle.scaled(sign);
    }
    return z;
}

ModulusCheck check_modulus(const ParamCurve &C, unsigned m)
{
    ModulusCheck r;
    const Ring &K = C.function_field();
    for (const auto &[P, ord] : divisor_on_P1(C.x())) {
        if (ord <= 0) continue;
        long rhs = 0;
        for (std::size_t i = 1; i <= C.n(); ++i) rhs += std::max(0L, order_at(C.y(i) - K.one(), P));
        const long lhs = static_cast<long>(m) * ord;
        if (lhs > rhs) {
            r.ok = false;
            r.witness = P;
            r.lhs = lhs;
            r.rhs = rhs;
            return r;
        }
    }
    return r;
}

} // namespace wittkit

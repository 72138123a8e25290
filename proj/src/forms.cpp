#include <bit>

#include <wittkit/error.hpp>
#include <wittkit/factor.hpp>
#include <wittkit/forms.hpp>
#include <wittkit/linalg.hpp>
#include <wittkit/series.hpp>

namespace wittkit
{

namespace
{

bool allowed_field(const Ring &L)
{
    switch (L.kind()) {
    case RingKind::rationals:
    case RingKind::prime_field:
    case RingKind::ext_field:
    case RingKind::function_field:
        return true;
    case RingKind::simple_ext:
        return allowed_field(L.base());
    default:
        return false;
    }
}

const std::vector<std::string> &no_variables()
{
    static const std::vector<std::string> v;
    return v;
}

} // namespace

const Ring &transcendental_base(const Ring &L)
{
    return L.kind() == RingKind::simple_ext ? L.base() : L;
}

DiffForm::DiffForm(Ring L, std::size_t degree) : ring_(std::move(L)), degree_(degree)
{
    if (!allowed_field(ring_)) throw DomainError("differential forms need Q, F_q, a function field over them, or a simple extension; got " + ring_.spec());
}

DiffForm DiffForm::scalar(const Elem &a)
{
    DiffForm w(a.ring(), 0);
    w.add_term(0, a);
    return w;
}

std::size_t DiffForm::rank() const
{
    const Ring &k = transcendental_base(ring_);
    return k.kind() == RingKind::function_field ? k.num_variables() : 0;
}

const std::vector<std::string> &DiffForm::variables() const
{
    const Ring &k = transcendental_base(ring_);
    return k.kind() == RingKind::function_field ? k.variables() : no_variables();
}

Elem DiffForm::coefficient(unsigned mask) const
{
    auto it = c_.find(mask);
    return it == c_.end() ? ring_.zero() : it->second;
}

void DiffForm::add_term(unsigned mask, const Elem &c0)
{
    if (static_cast<std::size_t>(std::popcount(mask)) != degree_) throw DomainError("basis element of the wrong degree");
    if (mask >> rank()) throw DomainError("basis element outside the transcendentals of " + ring_.spec());
    const Elem c = ring_.embed(c0);
    if (c.is_zero()) return;
    auto [it, inserted] = c_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

DiffForm DiffForm::operator+(const DiffForm &o) const
{
    if (ring_ != o.ring_ || degree_ != o.degree_) throw DomainError("adding forms of different degree or over different fields");
    DiffForm r = *this;
    for (const auto &[m, c] : o.c_) r.add_term(m, c);
    return r;
}

DiffForm DiffForm::operator-() const { return scaled(ring_.from_int(-1L)); }

DiffForm DiffForm::operator-(const DiffForm &o) const { return *this + (-o); }

DiffForm DiffForm::scaled(const Elem &a) const
{
    DiffForm r(ring_, degree_);
    const Elem b = ring_.embed(a);
    if (b.is_zero()) return r;
    for (const auto &[m, c] : c_) r.c_.emplace(m, c * b);
    return r;
}

bool DiffForm::operator==(const DiffForm &o) const
{
    if (ring_ != o.ring_ || degree_ != o.degree_) return false;
    if (c_.size() != o.c_.size()) return false;
    for (const auto &[m, c] : c_) {
        auto it = o.c_.find(m);
        if (it == o.c_.end() || it->second != c) return false;
    }
    return true;
}

std::string DiffForm::to_string() const
{
    if (c_.empty()) return "0";
    const auto &vars = variables();
    std::string s;
    for (const auto &[m, c] : c_) {
        if (!s.empty()) s += " + ";
        std::string basis;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!(m >> i & 1u)) continue;
            if (!basis.empty()) basis += "^";
            basis += "d" + vars[i];
        }
        if (basis.empty()) {
            s += c.to_string();
        } else if (c.is_one()) {
            s += basis;
        } else {
            s += "(" + c.to_string() + ")*" + basis;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

namespace
{

Elem partial_in_function_field(const Elem &a, std::size_t i)
{
    const Ring &R = a.ring();
    if (R.kind() != RingKind::function_field) return R.zero();
    if (i >= R.num_variables()) throw DomainError("no variable " + std::to_string(i) + " in " + R.spec());
    const auto &f = a.as_ratfn();
    const MPoly dn = f.num.derivative(i), dd = f.den.derivative(i);
    if (dd.is_zero()) return R.ratfn(dn, f.den);
    return R.ratfn(dn * f.den - f.num * dd, f.den * f.den);
}

} // namespace

Elem partial(const Elem &a, std::size_t i)
{
    const Ring &L = a.ring();
    if (L.kind() != RingKind::simple_ext) return partial_in_function_field(a, i);
    const Ring &k = L.base();
    if (k.kind() != RingKind::function_field) return L.zero();
    // a = A(θ) with g(θ) = 0: ∂a = A^{∂}(θ) + A'(θ) ∂θ, ∂θ = -g^{∂}(θ) / g'(θ)
    const std::vector<Elem> A = coordinates(a, k);
    const UniPoly &g = L.minpoly();
    const Elem th = L.generator();
    std::vector<Elem> dA;
    for (const auto &c : A) dA.push_back(partial_in_function_field(c, i));
    const UniPoly Ap = UniPoly(k, A).derivative();
    std::vector<Elem> dg;
    for (const auto &c : g.coeffs()) dg.push_back(partial_in_function_field(c, i));
    const Elem gp = g.derivative().eval(th);
    if (gp.is_zero()) throw DomainError("inseparable extension " + L.spec());
    const Elem dth = -UniPoly(k, dg).eval(th) / gp;
    return from_coordinates(L, dA) + Ap.eval(th) * dth;
}

DiffForm d(const Elem &a)
{
    DiffForm w(a.ring(), 1);
    for (std::size_t i = 0; i < w.rank(); ++i) w.add_term(1u << i, partial(a, i));
    return w;
}

namespace
{

DiffForm basis_form(const Ring &L, unsigned mask)
{
    DiffForm w(L, static_cast<std::size_t>(std::popcount(mask)));
    w.add_term(mask, L.one());
    return w;
}

} // namespace

DiffForm d(const DiffForm &w)
{
    DiffForm r(w.ring(), w.degree() + 1);
    for (const auto &[m, c] : w.terms()) r = r + wedge(d(c), basis_form(w.ring(), m));
    return r;
}

DiffForm dlog(const Elem &a)
{
    if (a.is_zero()) throw DomainError("dlog(0) is undefined");
    return d(a).scaled(a.inv());
}

DiffForm wedge(const DiffForm &a, const DiffForm &b)
{
    if (a.ring() != b.ring()) throw DomainError("wedge of forms over different fields");
    DiffForm r(a.ring(), a.degree() + b.degree());
    for (const auto &[ma, ca] : a.terms()) {
        for (const auto &[mb, cb] : b.terms()) {
            if (ma & mb) continue;
            // sign of the shuffle: pairs i in A, j in B with i > j
            unsigned inv = 0;
            for (unsigned bb = mb; bb; bb &= bb - 1) {
                const unsigned j = static_cast<unsigned>(std::countr_zero(bb));
                inv += static_cast<unsigned>(std::popcount(ma >> (j + 1)));
            }
            const Elem c = ca * cb;
            r.add_term(ma | mb, inv % 2 ? -c : c);
        }
    }
    return r;
}

DiffForm trace_form(const DiffForm &w, const Ring &k)
{
    const Ring &L = w.ring();
    DiffForm r(k, w.degree());
    if (L == k) return w;
    require_separable(L, k);
    if (transcendental_base(L) != k) throw DomainError("trace needs " + L.spec() + " to be a simple extension of " + k.spec());
    for (const auto &[m, c] : w.terms()) r.add_term(m, field_trace(c, k));
    return r;
}

// ---------------------------------------------------------------------------
// Residues on P^1

std::string RationalOneForm::to_string() const
{
    const auto &v = h.ring().variables();
    return "(" + h.to_string() + ") d" + v.back();
}

Elem residue(const RationalOneForm &w, const P1Point &P)
{
    const UniFraction f = as_univariate(w.h);
    const Ring k = f.num.ring();
    if (f.num.is_zero()) return k.zero();
    if (P.infinite) {
        // s = 1/v, ds = -dv/v^2: residue is -[v^(dN-dD+1)] revN/revD
        const long idx = f.num.degree() - f.den.degree() + 1;
        if (idx < 0) return k.zero();
        const std::size_t n = static_cast<std::size_t>(idx);
        TruncSeries N = TruncSeries::from_poly(f.num.reversed(static_cast<std::size_t>(f.num.degree())), n);
        TruncSeries D = TruncSeries::from_poly(f.den.reversed(static_cast<std::size_t>(f.den.degree())), n);
        return -(N * D.inverse())[n];
    }
    UniPoly D = f.den;
    std::size_t e = 0;
    while (P.phi.divides(D)) {
        D = D / P.phi;
        ++e;
    }
    if (e == 0) return k.zero();
    const Ring L = P.residue_field();
    if (L != k) require_separable(L, k);
    const Elem th = P.root();
    const UniPoly Ns = f.num.change_ring(L).taylor_shift(th);
    const UniPoly Ds = f.den.change_ring(L).taylor_shift(th);
    for (std::size_t i = 0; i < e; ++i) WITTKIT_ASSERT(Ds[i].is_zero(), "pole order mismatch in residue");
    std::vector<Elem> u, nn;
    for (std::size_t i = 0; i < e; ++i) {
        u.push_back(Ds[e + i]);
        nn.push_back(Ns[i]);
    }
    const Elem r = (TruncSeries(L, nn) * TruncSeries(L, u).inverse())[e - 1];
    return L == k ? r : field_trace(r, k);
}

std::vector<std::pair<P1Point, Elem>> residues(const RationalOneForm &w)
{
    std::vector<std::pair<P1Point, Elem>> out;
    if (w.h.is_zero()) return out;
    const UniFraction f = as_univariate(w.h);
    if (f.den.degree() > 0) {
        for (const auto &[phi, e] : factor_univariate(f.den)) {
            P1Point P{false, phi};
            Elem r = residue(w, P);
            if (!r.is_zero()) out.emplace_back(std::move(P), std::move(r));
        }
    }
    P1Point inf = P1Point::at_infinity(f.num.ring());
    Elem r = residue(w, inf);
    if (!r.is_zero()) out.emplace_back(std::move(inf), std::move(r));
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation maps

DiffForm eval_cycle_mod2(const ZeroCycle &z)
{
    const Ring &k = z.base();
    if (z.dim() == 0) throw DomainError("cycle has no coordinates");
    DiffForm out(k, z.dim() - 1);
    for (const auto &[P, mult] : z.terms()) {
        DiffForm w = DiffForm::scalar(P.x().inv());
        for (std::size_t j = 1; j < P.dim(); ++j) w = wedge(w, dlog(P.y(j)));
        out = out + trace_form(w, k).scaled(k.from_int(mult));
    }
    return out;
}

WittVector eval_cycle_general(const ZeroCycle &z, unsigned m)
{
    if (m < 2) throw DomainError("modulus must be >= 2");
    if (z.dim() != 1) throw DomainError("the Witt-valued evaluation is only available for n = 1 (points with an x coordinate only)");
    const Ring &k = z.base();
    TruncSeries f = TruncSeries::one(k, m - 1);
    for (const auto &[P, mult] : z.terms()) {
        const TruncSeries g = to_one_unit(witt_trace(teichmueller(P.x().inv(), m - 1), k));
        const TruncSeries h = mult > 0 ? g : g.inverse();
        for (long i = 0; i < (mult > 0 ? mult : -mult); ++i) f = f * h;
    }
    return from_one_unit(f);
}

MilnorImage milnor_dlog(const std::vector<Elem> &symbol)
{
    if (symbol.empty()) throw DomainError("empty symbol");
    const Ring k = symbol.front().ring();
    std::vector<Elem> coords{k.one()};
    DiffForm w = DiffForm::scalar(k.one());
    for (std::size_t i = 0; i < symbol.size(); ++i) {
        const Elem a = k.embed(symbol[i]);
        if (a.is_zero() || a.is_one()) throw DomainError("symbol entry a_" + std::to_string(i + 1) + " is 0 or 1, so (1, a) is not a point of the cube");
        coords.push_back(a);
        w = wedge(w, dlog(a));
    }
    ZeroCycle z(k, coords.size());
    z.add(make_point(k, coords), 1);
    return {std::move(z), std::move(w)};
}

} // namespace wittkit

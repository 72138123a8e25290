#include <algorithm>
#include <optional>
#include <sstream>

#include <wittkit/detail/fp_poly.hpp>
#include <wittkit/error.hpp>
#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>

namespace wittkit
{

namespace detail
{

struct RingData {
    RingKind kind = RingKind::rationals;
    Int n;
    std::uint64_t p = 0;
    std::vector<std::uint64_t> modulus;
    std::string gen;
    std::optional<Ring> base;
    std::vector<std::string> vars;
    std::shared_ptr<const UniPoly> minpoly;
    std::string spec;
};

} // namespace detail

namespace
{

using detail::RingData;

std::shared_ptr<const RingData> make_simple(RingKind k, std::string spec)
{
    auto d = std::make_shared<RingData>();
    d->kind = k;
    d->spec = std::move(spec);
    return d;
}

const std::shared_ptr<const RingData> &rationals_data()
{
    static const std::shared_ptr<const RingData> d = make_simple(RingKind::rationals, "Q");
    return d;
}

const std::shared_ptr<const RingData> &integers_data()
{
    static const std::shared_ptr<const RingData> d = make_simple(RingKind::integers, "Z");
    return d;
}

Int mod_floor(const Int &a, const Int &n)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::uint64_t reduce_mod_p(const Int &v, std::uint64_t p)
{
    Int r = mod_floor(v, Int(static_cast<unsigned long>(p)));
    return static_cast<std::uint64_t>(r.get_ui());
}

bool needs_parens(const std::string &s)
{
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') return true;
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// Ring

Ring::Ring() : d_(rationals_data()) {}

Ring::Ring(std::shared_ptr<const RingData> d) : d_(std::move(d)) {}

Ring Ring::integers() { return Ring(integers_data()); }

Ring Ring::rationals() { return Ring(rationals_data()); }

Ring Ring::integers_mod(const Int &n)
{
    if (n < 2) throw DomainError("Z/N requires N >= 2");
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::integers_mod;
    d->n = n;
    d->spec = "Z/" + n.get_str();
    return Ring(d);
}

Ring Ring::prime_field(std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError("F_p requires p prime, got " + std::to_string(p));
    if (p >= (1ULL << 62)) throw DomainError("prime too large for the machine-word field representation");
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::prime_field;
    d->p = p;
    d->spec = "F" + std::to_string(p);
    return Ring(d);
}

Ring Ring::ext_field(std::uint64_t p, std::vector<std::uint64_t> modulus, std::string generator)
{
    if (!is_prime(p)) throw DomainError("F_q requires p prime, got " + std::to_string(p));
    detail::fp::trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("F_q modulus must be monic of degree >= 1");
    for (auto c : modulus) {
        if (c >= p) throw DomainError("F_q modulus coefficient out of range");
    }
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::ext_field;
    d->p = p;
    d->modulus = std::move(modulus);
    d->gen = std::move(generator);
    d->spec = "F" + std::to_string(p) + "^" + std::to_string(d->modulus.size() - 1);
    return Ring(d);
}

Ring Ring::function_field(const Ring &constants, std::vector<std::string> variables)
{
    const auto k = constants.kind();
    if (k != RingKind::rationals && k != RingKind::prime_field && k != RingKind::ext_field) {
        throw DomainError("function fields must be built over Q, F_p or F_q");
    }
    if (variables.empty() || variables.size() > MPoly::max_vars) {
        throw DomainError("function fields support 1 to 3 transcendentals");
    }
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::function_field;
    d->base = constants;
    d->vars = std::move(variables);
    std::string s = constants.spec() + "(";
    for (std::size_t i = 0; i < d->vars.size(); ++i) s += (i ? "," : "") + d->vars[i];
    d->spec = s + ")";
    return Ring(d);
}

Ring Ring::simple_ext(const Ring &base, const UniPoly &minpoly, std::string generator)
{
    if (!base.is_field()) throw DomainError("simple extensions require a base field");
    if (base.kind() == RingKind::simple_ext) throw DomainError("towers of simple extensions are not supported");
    if (minpoly.ring() != base) throw DomainError("minimal polynomial must have coefficients in the base field");
    if (minpoly.degree() < 1 || !minpoly.lc().is_one()) throw DomainError("minimal polynomial must be monic of degree >= 1");
    auto d = std::make_shared<RingData>();
    d->kind = RingKind::simple_ext;
    d->base = base;
    d->gen = std::move(generator);
    d->minpoly = std::make_shared<const UniPoly>(minpoly);
    d->spec = base.spec() + "[" + d->gen + "]/(" + minpoly.to_string(d->gen) + ")";
    return Ring(d);
}

RingKind Ring::kind() const { return d_->kind; }

bool Ring::is_field() const { return d_->kind != RingKind::integers && d_->kind != RingKind::integers_mod; }

bool Ring::is_finite_field() const { return d_->kind == RingKind::prime_field || d_->kind == RingKind::ext_field; }

bool Ring::torsion_free() const { return characteristic() == 0; }

Int Ring::characteristic() const
{
    switch (d_->kind) {
    case RingKind::integers:
    case RingKind::rationals:
        return 0;
    case RingKind::integers_mod:
        return d_->n;
    case RingKind::prime_field:
    case RingKind::ext_field:
        return Int(static_cast<unsigned long>(d_->p));
    case RingKind::function_field:
    case RingKind::simple_ext:
        return (*d_->base).characteristic();
    }
    return 0;
}

std::uint64_t Ring::char_p() const
{
    switch (d_->kind) {
    case RingKind::prime_field:
    case RingKind::ext_field:
        return d_->p;
    case RingKind::function_field:
    case RingKind::simple_ext:
        return (*d_->base).char_p();
    default:
        return 0;
    }
}

std::size_t Ring::ext_degree() const
{
    if (d_->kind == RingKind::ext_field) return d_->modulus.size() - 1;
    if (d_->kind == RingKind::simple_ext) return static_cast<std::size_t>(d_->minpoly->degree());
    return 1;
}

Int Ring::order() const
{
    if (!is_finite_field()) throw DomainError("order() requires a finite field");
    return ipow(Int(static_cast<unsigned long>(d_->p)), ext_degree());
}

const Ring &Ring::base() const
{
    if (d_->kind != RingKind::function_field && d_->kind != RingKind::simple_ext) {
        throw DomainError("ring " + d_->spec + " has no base ring");
    }
    return (*d_->base);
}

const std::vector<std::string> &Ring::variables() const
{
    static const std::vector<std::string> none;
    if (d_->kind == RingKind::function_field) return d_->vars;
    if (d_->kind == RingKind::simple_ext) return (*d_->base).variables();
    return none;
}

std::size_t Ring::num_variables() const { return variables().size(); }

const std::string &Ring::generator_name() const { return d_->gen; }

const std::vector<std::uint64_t> &Ring::modulus_coeffs() const { return d_->modulus; }

const Int &Ring::modulus() const { return d_->n; }

const UniPoly &Ring::minpoly() const
{
    if (d_->kind != RingKind::simple_ext) throw DomainError("ring " + d_->spec + " is not a simple extension");
    return *d_->minpoly;
}

const Ring &Ring::constants() const
{
    if (d_->kind == RingKind::function_field || d_->kind == RingKind::simple_ext) return (*d_->base).constants();
    return *this;
}

std::string Ring::spec() const { return d_->spec; }

Elem Ring::zero() const { return from_int(0L); }

Elem Ring::one() const { return from_int(1L); }

Elem Ring::from_int(long v) const { return from_int(Int(v)); }

Elem Ring::from_int(const Int &v) const
{
    switch (d_->kind) {
    case RingKind::integers:
        return Elem(*this, v);
    case RingKind::integers_mod:
        return Elem(*this, mod_floor(v, d_->n));
    case RingKind::rationals:
        return Elem(*this, Rat(v));
    case RingKind::prime_field:
        return Elem(*this, reduce_mod_p(v, d_->p));
    case RingKind::ext_field: {
        Elem::FqRep r(d_->modulus.size() - 1, 0);
        r[0] = reduce_mod_p(v, d_->p);
        return Elem(*this, std::move(r));
    }
    case RingKind::function_field: {
        auto f = std::make_shared<Elem::RatFn>();
        f->num = MPoly::constant((*d_->base).from_int(v), d_->vars.size());
        f->den = MPoly::constant((*d_->base).one(), d_->vars.size());
        return Elem(*this, std::shared_ptr<const Elem::RatFn>(f));
    }
    case RingKind::simple_ext: {
        Elem::ExtRep r(ext_degree(), (*d_->base).zero());
        r[0] = (*d_->base).from_int(v);
        return Elem(*this, std::move(r));
    }
    }
    return {};
}

Elem Ring::from_rational(const Rat &v0) const
{
    Rat v = v0;
    v.canonicalize();
    switch (d_->kind) {
    case RingKind::integers:
        if (v.get_den() != 1) throw DomainError("1/" + v.get_den().get_str() + " does not exist in Z");
        return Elem(*this, v.get_num());
    case RingKind::rationals:
        return Elem(*this, v);
    default: {
        Elem num = from_int(v.get_num());
        if (v.get_den() == 1) return num;
        Elem den = from_int(v.get_den());
        if (!den.is_unit()) throw DomainError("1/" + v.get_den().get_str() + " does not exist in " + spec());
        return num * den.inv();
    }
    }
}

Elem Ring::generator() const
{
    if (d_->kind == RingKind::ext_field) {
        detail::fp::Poly x{0, 1};
        x = detail::fp::mod(x, d_->modulus, d_->p);
        x.resize(d_->modulus.size() - 1, 0);
        return Elem(*this, std::move(x));
    }
    if (d_->kind == RingKind::simple_ext) {
        UniPoly r = UniPoly::x((*d_->base)) % *d_->minpoly;
        Elem::ExtRep v(ext_degree(), (*d_->base).zero());
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
        return Elem(*this, std::move(v));
    }
    throw DomainError("ring " + d_->spec + " has no generator");
}

Elem Ring::variable(std::size_t i) const
{
    if (d_->kind != RingKind::function_field) throw DomainError("ring " + d_->spec + " has no transcendentals");
    if (i >= d_->vars.size()) throw DomainError("variable index out of range");
    auto f = std::make_shared<Elem::RatFn>();
    f->num = MPoly::variable((*d_->base), d_->vars.size(), i);
    f->den = MPoly::constant((*d_->base).one(), d_->vars.size());
    return Elem(*this, std::shared_ptr<const Elem::RatFn>(f));
}

Elem Ring::element_from_index(std::uint64_t idx) const
{
    if (d_->kind == RingKind::prime_field) return Elem(*this, idx % d_->p);
    if (d_->kind == RingKind::ext_field) {
        Elem::FqRep r(d_->modulus.size() - 1, 0);
        for (auto &c : r) {
            c = idx % d_->p;
            idx /= d_->p;
        }
        return Elem(*this, std::move(r));
    }
    throw DomainError("element_from_index requires a finite field");
}

namespace
{

// k(t_1..t_r) inside k(t_1..t_r, ...)
bool is_prefix_field(const Ring &sub, const Ring &big)
{
    const auto &a = sub.variables(), &b = big.variables();
    return sub.base() == big.base() && a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
}

} // namespace

bool Ring::contains(const Ring &sub) const
{
    if (*this == sub) return true;
    switch (sub.kind()) {
    case RingKind::integers:
        return true;
    case RingKind::rationals:
        return characteristic() == 0 && is_field();
    default:
        break;
    }
    if (d_->kind == RingKind::ext_field && sub.kind() == RingKind::prime_field) return sub.char_p() == d_->p;
    if (d_->kind == RingKind::function_field && sub.kind() == RingKind::function_field) return is_prefix_field(sub, *this);
    if (d_->kind == RingKind::function_field || d_->kind == RingKind::simple_ext) return (*d_->base).contains(sub);
    return false;
}

Elem Ring::embed(const Elem &x) const
{
    if (x.ring() == *this) return x;
    switch (x.ring().kind()) {
    case RingKind::integers:
        return from_int(x.as_int());
    case RingKind::rationals:
        if (!contains(x.ring())) break;
        return from_rational(x.as_rat());
    default:
        break;
    }
    if (d_->kind == RingKind::ext_field && x.ring().kind() == RingKind::prime_field && x.ring().char_p() == d_->p) {
        return from_int(Int(static_cast<unsigned long>(x.as_fp())));
    }
    if (d_->kind == RingKind::function_field && x.ring().kind() == RingKind::function_field && is_prefix_field(x.ring(), *this)) {
        const auto &f = x.as_ratfn();
        auto g = std::make_shared<Elem::RatFn>();
        g->num = MPoly::from_terms(*d_->base, d_->vars.size(), f.num.terms());
        g->den = MPoly::from_terms(*d_->base, d_->vars.size(), f.den.terms());
        return Elem(*this, std::shared_ptr<const Elem::RatFn>(g));
    }
    if (d_->kind == RingKind::function_field && (*d_->base).contains(x.ring())) {
        auto f = std::make_shared<Elem::RatFn>();
        f->num = MPoly::constant((*d_->base).embed(x), d_->vars.size());
        f->den = MPoly::constant((*d_->base).one(), d_->vars.size());
        return Elem(*this, std::shared_ptr<const Elem::RatFn>(f));
    }
    if (d_->kind == RingKind::simple_ext && (*d_->base).contains(x.ring())) {
        Elem::ExtRep r(ext_degree(), (*d_->base).zero());
        r[0] = (*d_->base).embed(x);
        return Elem(*this, std::move(r));
    }
    throw DomainError("cannot embed an element of " + x.ring().spec() + " into " + spec());
}

bool Ring::operator==(const Ring &o) const
{
    if (d_ == o.d_) return true;
    const RingData &a = *d_, &b = *o.d_;
    if (a.kind != b.kind) return false;
    switch (a.kind) {
    case RingKind::integers:
    case RingKind::rationals:
        return true;
    case RingKind::integers_mod:
        return a.n == b.n;
    case RingKind::prime_field:
        return a.p == b.p;
    case RingKind::ext_field:
        return a.p == b.p && a.modulus == b.modulus;
    case RingKind::function_field:
        return a.vars == b.vars && *a.base == *b.base;
    case RingKind::simple_ext:
        // generator names are presentation only
        return *a.base == *b.base && *a.minpoly == *b.minpoly;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Elem

namespace
{

using RatFnPtr = std::shared_ptr<const Elem::RatFn>;

Elem make_ratfn(const Ring &r, MPoly num, MPoly den)
{
    if (den.is_zero()) throw DomainError("division by zero in " + r.spec());
    const std::size_t nv = r.num_variables();
    auto f = std::make_shared<Elem::RatFn>();
    if (num.is_zero()) {
        f->num = MPoly(r.base(), nv);
        f->den = MPoly::constant(r.base().one(), nv);
        return Elem(r, RatFnPtr(f));
    }
    if (!den.is_constant()) {
        MPoly g = gcd(num, den);
        if (!g.is_one()) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    Elem lc = den.leading_coeff();
    if (!lc.is_one()) {
        Elem inv = lc.inv();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    f->num = std::move(num);
    f->den = std::move(den);
    return Elem(r, RatFnPtr(f));
}

Elem::ExtRep reduce_ext(const Ring &r, std::vector<Elem> prod)
{
    const UniPoly &g = r.minpoly();
    const std::size_t d = static_cast<std::size_t>(g.degree());
    for (std::size_t k = prod.size(); k-- > d;) {
        if (prod[k].is_zero()) continue;
        const Elem c = prod[k];
        for (std::size_t j = 0; j < d; ++j) {
            if (!g.coeffs()[j].is_zero()) prod[k - d + j] -= c * g.coeffs()[j];
        }
        prod[k] = r.base().zero();
    }
    prod.resize(d, r.base().zero());
    return prod;
}

Elem::FqRep fq_mul(const Elem::FqRep &a, const Elem::FqRep &b, const std::vector<std::uint64_t> &m, std::uint64_t p)
{
    const std::size_t e = m.size() - 1;
    std::vector<std::uint64_t> prod(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = (prod[i + j] + mulmod_u64(a[i], b[j], p)) % p;
        }
    }
    for (std::size_t k = prod.size(); k-- > e;) {
        const std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j < e; ++j) prod[k - e + j] = (prod[k - e + j] + p - mulmod_u64(c, m[j], p)) % p;
        prod[k] = 0;
    }
    prod.resize(e);
    return prod;
}

const Ring &common_ring(const Elem &a, const Elem &b, Elem &ca, Elem &cb, bool &converted)
{
    converted = false;
    if (a.ring() == b.ring()) return a.ring();
    converted = true;
    if (a.ring().contains(b.ring())) {
        ca = a;
        cb = a.ring().embed(b);
        return a.ring();
    }
    if (b.ring().contains(a.ring())) {
        ca = b.ring().embed(a);
        cb = b;
        return b.ring();
    }
    throw DomainError("ring mismatch: " + a.ring().spec() + " vs " + b.ring().spec());
}

} // namespace

Elem::Elem() : ring_(), rep_(Rat(0)) {}

Elem::Elem(Ring r, Rep rep) : ring_(std::move(r)), rep_(std::move(rep)) {}

const Int &Elem::as_int() const { return std::get<Int>(rep_); }
const Rat &Elem::as_rat() const { return std::get<Rat>(rep_); }
std::uint64_t Elem::as_fp() const { return std::get<std::uint64_t>(rep_); }
const Elem::FqRep &Elem::as_fq() const { return std::get<FqRep>(rep_); }
const Elem::RatFn &Elem::as_ratfn() const { return *std::get<RatFnPtr>(rep_); }
const Elem::ExtRep &Elem::as_ext() const { return std::get<ExtRep>(rep_); }

bool Elem::is_zero() const
{
    switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
        return as_int() == 0;
    case RingKind::rationals:
        return as_rat() == 0;
    case RingKind::prime_field:
        return as_fp() == 0;
    case RingKind::ext_field:
        return std::all_of(as_fq().begin(), as_fq().end(), [](auto c) { return c == 0; });
    case RingKind::function_field:
        return as_ratfn().num.is_zero();
    case RingKind::simple_ext:
        return std::all_of(as_ext().begin(), as_ext().end(), [](const Elem &c) { return c.is_zero(); });
    }
    return false;
}

bool Elem::is_one() const
{
    switch (ring_.kind()) {
    case RingKind::integers:
        return as_int() == 1;
    case RingKind::integers_mod:
        return as_int() == 1;
    case RingKind::rationals:
        return as_rat() == 1;
    case RingKind::prime_field:
        return as_fp() == 1;
    case RingKind::ext_field: {
        const auto &v = as_fq();
        if (v[0] != 1) return false;
        return std::all_of(v.begin() + 1, v.end(), [](auto c) { return c == 0; });
    }
    case RingKind::function_field:
        return as_ratfn().num.is_one() && as_ratfn().den.is_one();
    case RingKind::simple_ext: {
        const auto &v = as_ext();
        if (!v[0].is_one()) return false;
        return std::all_of(v.begin() + 1, v.end(), [](const Elem &c) { return c.is_zero(); });
    }
    }
    return false;
}

Elem Elem::operator-() const
{
    switch (ring_.kind()) {
    case RingKind::integers:
        return Elem(ring_, Int(-as_int()));
    case RingKind::integers_mod:
        return Elem(ring_, mod_floor(-as_int(), ring_.modulus()));
    case RingKind::rationals:
        return Elem(ring_, Rat(-as_rat()));
    case RingKind::prime_field: {
        const auto p = ring_.char_p();
        return Elem(ring_, as_fp() == 0 ? std::uint64_t{0} : p - as_fp());
    }
    case RingKind::ext_field: {
        const auto p = ring_.char_p();
        FqRep r = as_fq();
        for (auto &c : r) c = c == 0 ? 0 : p - c;
        return Elem(ring_, std::move(r));
    }
    case RingKind::function_field: {
        auto f = std::make_shared<RatFn>();
        f->num = -as_ratfn().num;
        f->den = as_ratfn().den;
        return Elem(ring_, RatFnPtr(f));
    }
    case RingKind::simple_ext: {
        ExtRep r = as_ext();
        for (auto &c : r) c = -c;
        return Elem(ring_, std::move(r));
    }
    }
    return {};
}

Elem operator+(const Elem &a, const Elem &b)
{
    Elem ca, cb;
    bool conv;
    const Ring &r = common_ring(a, b, ca, cb, conv);
    if (conv) return ca + cb;
    switch (r.kind()) {
    case RingKind::integers:
        return Elem(r, Int(a.as_int() + b.as_int()));
    case RingKind::integers_mod: {
        Int s = a.as_int() + b.as_int();
        if (s >= r.modulus()) s -= r.modulus();
        return Elem(r, std::move(s));
    }
    case RingKind::rationals:
        return Elem(r, Rat(a.as_rat() + b.as_rat()));
    case RingKind::prime_field: {
        std::uint64_t s = a.as_fp() + b.as_fp();
        if (s >= r.char_p()) s -= r.char_p();
        return Elem(r, s);
    }
    case RingKind::ext_field: {
        const auto p = r.char_p();
        Elem::FqRep v = a.as_fq();
        const auto &w = b.as_fq();
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += w[i];
            if (v[i] >= p) v[i] -= p;
        }
        return Elem(r, std::move(v));
    }
    case RingKind::function_field: {
        const auto &x = a.as_ratfn();
        const auto &y = b.as_ratfn();
        if (x.num.is_zero()) return b;
        if (y.num.is_zero()) return a;
        if (x.den == y.den) return make_ratfn(r, x.num + y.num, x.den);
        if (x.den.is_one()) return make_ratfn(r, x.num * y.den + y.num, y.den);
        if (y.den.is_one()) return make_ratfn(r, x.num + y.num * x.den, x.den);
        MPoly g = gcd(x.den, y.den);
        MPoly xd = exact_div(x.den, g), yd = exact_div(y.den, g);
        return make_ratfn(r, x.num * yd + y.num * xd, xd * y.den);
    }
    case RingKind::simple_ext: {
        Elem::ExtRep v = a.as_ext();
        const auto &w = b.as_ext();
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
        return Elem(r, std::move(v));
    }
    }
    return {};
}

Elem operator-(const Elem &a, const Elem &b) { return a + (-b); }

Elem operator*(const Elem &a, const Elem &b)
{
    Elem ca, cb;
    bool conv;
    const Ring &r = common_ring(a, b, ca, cb, conv);
    if (conv) return ca * cb;
    switch (r.kind()) {
    case RingKind::integers:
        return Elem(r, Int(a.as_int() * b.as_int()));
    case RingKind::integers_mod:
        return Elem(r, mod_floor(a.as_int() * b.as_int(), r.modulus()));
    case RingKind::rationals:
        return Elem(r, Rat(a.as_rat() * b.as_rat()));
    case RingKind::prime_field:
        return Elem(r, mulmod_u64(a.as_fp(), b.as_fp(), r.char_p()));
    case RingKind::ext_field:
        return Elem(r, fq_mul(a.as_fq(), b.as_fq(), r.modulus_coeffs(), r.char_p()));
    case RingKind::function_field: {
        const auto &x = a.as_ratfn();
        const auto &y = b.as_ratfn();
        if (x.num.is_zero() || y.num.is_zero()) return r.zero();
        if (x.den.is_one() && y.den.is_one()) {
            auto f = std::make_shared<Elem::RatFn>();
            f->num = x.num * y.num;
            f->den = x.den;
            return Elem(r, RatFnPtr(f));
        }
        MPoly g1 = gcd(x.num, y.den), g2 = gcd(y.num, x.den);
        MPoly n1 = g1.is_one() ? x.num : exact_div(x.num, g1);
        MPoly d2 = g1.is_one() ? y.den : exact_div(y.den, g1);
        MPoly n2 = g2.is_one() ? y.num : exact_div(y.num, g2);
        MPoly d1 = g2.is_one() ? x.den : exact_div(x.den, g2);
        MPoly den = d1 * d2;
        MPoly num = n1 * n2;
        Elem lc = den.leading_coeff();
        auto f = std::make_shared<Elem::RatFn>();
        if (!lc.is_one()) {
            Elem inv = lc.inv();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
        f->num = std::move(num);
        f->den = std::move(den);
        return Elem(r, RatFnPtr(f));
    }
    case RingKind::simple_ext: {
        const auto &x = a.as_ext();
        const auto &y = b.as_ext();
        std::vector<Elem> prod(2 * x.size() - 1, r.base().zero());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[j].is_zero()) continue;
                prod[i + j] += x[i] * y[j];
            }
        }
        return Elem(r, reduce_ext(r, std::move(prod)));
    }
    }
    return {};
}

Elem operator*(long a, const Elem &b) { return b.ring().from_int(a) * b; }

Elem operator/(const Elem &a, const Elem &b)
{
    Elem ca, cb;
    bool conv;
    common_ring(a, b, ca, cb, conv);
    if (conv) return ca / cb;
    if (a.ring().kind() == RingKind::function_field) {
        const auto &x = a.as_ratfn();
        const auto &y = b.as_ratfn();
        if (y.num.is_zero()) throw DomainError("division by zero in " + a.ring().spec());
        if (x.num.is_zero()) return a;
        return a * b.inv();
    }
    return a * b.inv();
}

bool Elem::is_unit() const
{
    switch (ring_.kind()) {
    case RingKind::integers:
        return as_int() == 1 || as_int() == -1;
    case RingKind::integers_mod: {
        Int g;
        mpz_gcd(g.get_mpz_t(), as_int().get_mpz_t(), ring_.modulus().get_mpz_t());
        return g == 1;
    }
    default:
        return !is_zero();
    }
}

Elem Elem::inv() const
{
    switch (ring_.kind()) {
    case RingKind::integers:
        if (!is_unit()) throw DomainError(to_string() + " is not invertible in Z");
        return *this;
    case RingKind::integers_mod: {
        Int r;
        if (mpz_invert(r.get_mpz_t(), as_int().get_mpz_t(), ring_.modulus().get_mpz_t()) == 0) {
            throw DomainError(to_string() + " is not invertible in " + ring_.spec());
        }
        return Elem(ring_, mod_floor(r, ring_.modulus()));
    }
    case RingKind::rationals:
        if (as_rat() == 0) throw DomainError("division by zero in Q");
        return Elem(ring_, Rat(1 / as_rat()));
    case RingKind::prime_field:
        if (as_fp() == 0) throw DomainError("division by zero in " + ring_.spec());
        return Elem(ring_, invmod_u64(as_fp(), ring_.char_p()));
    case RingKind::ext_field: {
        if (is_zero()) throw DomainError("division by zero in " + ring_.spec());
        detail::fp::Poly a = as_fq();
        detail::fp::trim(a);
        detail::fp::Poly r = detail::fp::invmod(a, ring_.modulus_coeffs(), ring_.char_p());
        r.resize(ring_.modulus_coeffs().size() - 1, 0);
        return Elem(ring_, std::move(r));
    }
    case RingKind::function_field: {
        const auto &x = as_ratfn();
        if (x.num.is_zero()) throw DomainError("division by zero in " + ring_.spec());
        return make_ratfn(ring_, x.den, x.num);
    }
    case RingKind::simple_ext: {
        if (is_zero()) throw DomainError("division by zero in " + ring_.spec());
        UniPoly a(ring_.base(), as_ext());
        UniPoly r = invmod(a, ring_.minpoly());
        ExtRep v(ring_.ext_degree(), ring_.base().zero());
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
        return Elem(ring_, std::move(v));
    }
    }
    return {};
}

Elem Elem::pow(const Int &e) const
{
    if (e < 0) return inv().pow(Int(-e));
    Elem result = ring_.one();
    Elem base = *this;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
    }
    return result;
}

Elem Elem::pth_root() const
{
    switch (ring_.kind()) {
    case RingKind::prime_field:
        return *this;
    case RingKind::ext_field: {
        const Int q = ring_.order();
        return pow(Int(q / static_cast<unsigned long>(ring_.char_p())));
    }
    case RingKind::function_field: {
        const std::uint64_t p = ring_.char_p();
        if (p == 0) break;
        auto root = [&](const MPoly &m) {
            std::vector<detail::MTerm> terms;
            for (const auto &t : m.terms()) {
                std::array<unsigned, MPoly::max_vars> ex{};
                for (std::size_t i = 0; i < m.nvars(); ++i) {
                    unsigned e = MPoly::exponent(t.key, i);
                    if (e % p != 0) throw DomainError("element of " + ring_.spec() + " is not a p-th power");
                    ex[i] = static_cast<unsigned>(e / p);
                }
                terms.push_back({MPoly::make_key(ex), t.coef.pth_root()});
            }
            return MPoly::from_terms(m.constants(), m.nvars(), std::move(terms));
        };
        return make_ratfn(ring_, root(as_ratfn().num), root(as_ratfn().den));
    }
    default:
        break;
    }
    throw DomainError("p-th roots are not available in " + ring_.spec());
}

bool Elem::operator==(const Elem &o) const
{
    if (!(ring_ == o.ring_)) {
        if (ring_.contains(o.ring_)) return *this == ring_.embed(o);
        if (o.ring_.contains(ring_)) return o.ring_.embed(*this) == o;
        return false;
    }
    switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
        return as_int() == o.as_int();
    case RingKind::rationals:
        return as_rat() == o.as_rat();
    case RingKind::prime_field:
        return as_fp() == o.as_fp();
    case RingKind::ext_field:
        return as_fq() == o.as_fq();
    case RingKind::function_field:
        return as_ratfn().num == o.as_ratfn().num && as_ratfn().den == o.as_ratfn().den;
    case RingKind::simple_ext:
        return as_ext() == o.as_ext();
    }
    return false;
}

bool Elem::integral_value(Int &out) const
{
    switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
        out = as_int();
        return true;
    case RingKind::rationals:
        if (as_rat().get_den() != 1) return false;
        out = as_rat().get_num();
        return true;
    case RingKind::prime_field:
        out = Int(static_cast<unsigned long>(as_fp()));
        return true;
    case RingKind::ext_field: {
        const auto &v = as_fq();
        if (!std::all_of(v.begin() + 1, v.end(), [](auto c) { return c == 0; })) return false;
        out = Int(static_cast<unsigned long>(v[0]));
        return true;
    }
    default:
        return false;
    }
}

std::string Elem::to_string() const
{
    switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
        return as_int().get_str();
    case RingKind::rationals:
        return as_rat().get_str();
    case RingKind::prime_field:
        return std::to_string(as_fp());
    case RingKind::ext_field: {
        const auto &v = as_fq();
        const std::string &g = ring_.generator_name();
        std::string s;
        for (std::size_t i = v.size(); i-- > 0;) {
            if (v[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(v[i]);
                continue;
            }
            if (v[i] != 1) s += std::to_string(v[i]) + "*";
            s += g;
            if (i > 1) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
    case RingKind::function_field: {
        const auto &f = as_ratfn();
        std::string n = f.num.to_string(ring_.variables());
        if (f.den.is_one()) return n;
        std::string d = f.den.to_string(ring_.variables());
        if (needs_parens(n) || (!n.empty() && n[0] == '-')) n = "(" + n + ")";
        if (needs_parens(d) || d.find('*') != std::string::npos || d.find('^') != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
    }
    case RingKind::simple_ext: {
        const auto &v = as_ext();
        const std::string &g = ring_.generator_name();
        std::string s;
        for (std::size_t i = v.size(); i-- > 0;) {
            if (v[i].is_zero()) continue;
            std::string c = v[i].to_string();
            std::string mono = i == 0 ? "" : (i == 1 ? g : g + "^" + std::to_string(i));
            std::string term;
            if (i == 0) {
                term = c;
            } else if (v[i].is_one()) {
                term = mono;
            } else if (c == "-1") {
                term = "-" + mono;
            } else {
                if (needs_parens(c) || c.find('/') != std::string::npos) c = "(" + c + ")";
                term = c + "*" + mono;
            }
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s.empty() ? "0" : s;
    }
    }
    return "?";
}

int Elem::compare(const Elem &a, const Elem &b)
{
    if (!(a.ring() == b.ring())) {
        int c = a.ring().spec().compare(b.ring().spec());
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    switch (a.ring().kind()) {
    case RingKind::integers:
    case RingKind::integers_mod:
        return cmp(a.as_int(), b.as_int()) < 0 ? -1 : (cmp(a.as_int(), b.as_int()) > 0 ? 1 : 0);
    case RingKind::rationals:
        return cmp(a.as_rat(), b.as_rat()) < 0 ? -1 : (cmp(a.as_rat(), b.as_rat()) > 0 ? 1 : 0);
    case RingKind::prime_field:
        return a.as_fp() < b.as_fp() ? -1 : (a.as_fp() > b.as_fp() ? 1 : 0);
    case RingKind::ext_field: {
        const auto &x = a.as_fq();
        const auto &y = b.as_fq();
        for (std::size_t i = x.size(); i-- > 0;) {
            if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
        }
        return 0;
    }
    default: {
        const std::string sa = a.to_string(), sb = b.to_string();
        if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
        int c = sa.compare(sb);
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    }
}

Ring make_finite_field(std::uint64_t p, unsigned e)
{
    if (!is_prime(p)) throw DomainError("make_finite_field: " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 16) throw DomainError("make_finite_field: degree must lie in 1..16");
    if (e == 1) return Ring::prime_field(p);
    detail::fp::Poly f(e + 1, 0);
    f[e] = 1;
    for (std::uint64_t idx = 0;; ++idx) {
        std::uint64_t v = idx;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = v % p;
            v /= p;
        }
        if (v != 0) break;
        if (f[0] == 0) continue;
        if (detail::fp::is_irreducible(f, p)) return Ring::ext_field(p, f);
    }
    throw DomainError("make_finite_field: no irreducible polynomial found");
}

Elem Ring::ratfn(const MPoly &num, const MPoly &den) const
{
    if (d_->kind != RingKind::function_field) throw DomainError("ring " + d_->spec + " has no rational functions");
    if (num.nvars() != d_->vars.size() || den.nvars() != d_->vars.size() || num.constants() != *d_->base || den.constants() != *d_->base) {
        throw DomainError("polynomial does not belong to " + d_->spec);
    }
    return make_ratfn(*this, num, den);
}

} // namespace wittkit

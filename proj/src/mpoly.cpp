#include <algorithm>
#include <bit>
#include <map>

#include <wittkit/error.hpp>
#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>

namespace wittkit
{

using detail::MTerm;

namespace
{

constexpr MPoly::Key exp_mask = (MPoly::Key{1} << MPoly::exp_bits) - 1;

unsigned shift_of(std::size_t var) { return static_cast<unsigned>((MPoly::max_vars - 1 - var) * MPoly::exp_bits); }

void sort_merge(std::vector<MTerm> &terms)
{
    std::sort(terms.begin(), terms.end(), [](const MTerm &a, const MTerm &b) { return a.key > b.key; });
    std::vector<MTerm> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (!out.empty() && out.back().key == t.key) {
            out.back().coef += t.coef;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const MTerm &t) { return t.coef.is_zero(); });
    terms = std::move(out);
}

MPoly::Key add_keys(MPoly::Key a, MPoly::Key b)
{
    for (std::size_t i = 0; i < MPoly::max_vars; ++i) {
        if (MPoly::exponent(a, i) + MPoly::exponent(b, i) > exp_mask) throw DomainError("polynomial exponent overflow");
    }
    return a + b;
}

bool key_divides(MPoly::Key d, MPoly::Key k)
{
    for (std::size_t i = 0; i < MPoly::max_vars; ++i) {
        if (MPoly::exponent(d, i) > MPoly::exponent(k, i)) return false;
    }
    return true;
}

} // namespace

MPoly::MPoly() = default;
MPoly::MPoly(Ring constants, std::size_t nvars) : constants_(std::move(constants)), nvars_(nvars) {}
MPoly::MPoly(const MPoly &) = default;
MPoly::MPoly(MPoly &&) noexcept = default;
MPoly &MPoly::operator=(const MPoly &) = default;
MPoly &MPoly::operator=(MPoly &&) noexcept = default;
MPoly::~MPoly() = default;

MPoly MPoly::constant(const Elem &c, std::size_t nvars)
{
    MPoly r(c.ring(), nvars);
    if (!c.is_zero()) r.terms_.push_back({0, c});
    return r;
}

MPoly MPoly::variable(const Ring &constants, std::size_t nvars, std::size_t i)
{
    std::array<unsigned, max_vars> e{};
    e[i] = 1;
    return monomial(constants.one(), e, nvars);
}

MPoly MPoly::monomial(const Elem &c, const std::array<unsigned, max_vars> &exps, std::size_t nvars)
{
    MPoly r(c.ring(), nvars);
    if (!c.is_zero()) r.terms_.push_back({make_key(exps), c});
    return r;
}

MPoly::Key MPoly::make_key(const std::array<unsigned, max_vars> &exps)
{
    Key k = 0;
    for (std::size_t i = 0; i < max_vars; ++i) {
        if (exps[i] > exp_mask) throw DomainError("polynomial exponent overflow");
        k |= Key{exps[i]} << shift_of(i);
    }
    return k;
}

unsigned MPoly::exponent(Key k, std::size_t var) { return static_cast<unsigned>((k >> shift_of(var)) & exp_mask); }

unsigned MPoly::key_degree(Key k)
{
    unsigned d = 0;
    for (std::size_t i = 0; i < max_vars; ++i) d += exponent(k, i);
    return d;
}

bool MPoly::is_zero() const { return terms_.empty(); }

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }

bool MPoly::is_one() const { return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coef.is_one(); }

const Elem &MPoly::leading_coeff() const
{
    if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return terms_[0].coef;
}

Elem MPoly::constant_term() const
{
    if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coef;
    return constants_.zero();
}

int MPoly::total_degree() const
{
    int d = -1;
    for (const auto &t : terms_) d = std::max(d, static_cast<int>(key_degree(t.key)));
    return d;
}

int MPoly::degree_in(std::size_t var) const
{
    int d = -1;
    for (const auto &t : terms_) d = std::max(d, static_cast<int>(exponent(t.key, var)));
    return d;
}

unsigned MPoly::used_vars() const
{
    unsigned m = 0;
    for (const auto &t : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exponent(t.key, i) != 0) m |= 1u << i;
        }
    }
    return m;
}

MPoly MPoly::operator-() const
{
    MPoly r = *this;
    for (auto &t : r.terms_) t.coef = -t.coef;
    return r;
}

MPoly operator+(const MPoly &a, const MPoly &b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    MPoly r(a.constants_, std::max(a.nvars_, b.nvars_));
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].key > b.terms_[j].key)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].key > a.terms_[i].key) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Elem c = a.terms_[i].coef + b.terms_[j].coef;
            if (!c.is_zero()) r.terms_.push_back({a.terms_[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    return r;
}

MPoly operator-(const MPoly &a, const MPoly &b) { return a + (-b); }

MPoly operator*(const MPoly &a, const MPoly &b)
{
    MPoly r(a.constants_, std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero()) return r;
    if (b.terms_.size() == 1 && b.terms_[0].key == 0) return a.scaled(b.terms_[0].coef);
    if (a.terms_.size() == 1 && a.terms_[0].key == 0) return b.scaled(a.terms_[0].coef);
    std::vector<MTerm> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &x : a.terms_) {
        for (const auto &y : b.terms_) terms.push_back({add_keys(x.key, y.key), x.coef * y.coef});
    }
    sort_merge(terms);
    r.terms_ = std::move(terms);
    return r;
}

MPoly MPoly::scaled(const Elem &c) const
{
    MPoly r(constants_, nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
        Elem v = t.coef * c;
        if (!v.is_zero()) r.terms_.push_back({t.key, std::move(v)});
    }
    return r;
}

MPoly MPoly::pow(unsigned e) const
{
    MPoly r = constant(constants_.one(), nvars_);
    MPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MPoly MPoly::monic() const
{
    if (is_zero() || leading_coeff().is_one()) return *this;
    return scaled(leading_coeff().inv());
}

MPoly MPoly::derivative(std::size_t var) const
{
    std::vector<MTerm> terms;
    const Key unit = Key{1} << shift_of(var);
    for (const auto &t : terms_) {
        const unsigned e = exponent(t.key, var);
        if (e == 0) continue;
        Elem c = t.coef * constants_.from_int(static_cast<long>(e));
        if (!c.is_zero()) terms.push_back({t.key - unit, std::move(c)});
    }
    MPoly r(constants_, nvars_);
    r.terms_ = std::move(terms); // order preserved: subtracting a fixed unit keeps lex order
    return r;
}

Elem MPoly::eval(const std::vector<Elem> &point) const
{
    if (point.size() < nvars_) throw DomainError("evaluation point has too few coordinates");
    if (terms_.empty()) return nvars_ ? point[0].ring().zero() : constants_.zero();
    const Ring &target = nvars_ ? point[0].ring() : constants_;
    std::vector<std::vector<Elem>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        const int d = degree_in(i);
        powers[i].push_back(target.one());
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    Elem sum = target.zero();
    for (const auto &t : terms_) {
        Elem m = target.embed(t.coef);
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned e = exponent(t.key, i);
            if (e) m = m * powers[i][e];
        }
        sum += m;
    }
    return sum;
}

MPoly MPoly::shifted(const std::vector<Elem> &shift) const
{
    std::vector<std::vector<MPoly>> powers(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        const int d = degree_in(i);
        MPoly lin = variable(constants_, nvars_, i) + constant(constants_.embed(shift[i]), nvars_);
        powers[i].push_back(constant(constants_.one(), nvars_));
        for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * lin);
    }
    MPoly r(constants_, nvars_);
    for (const auto &t : terms_) {
        MPoly m = constant(t.coef, nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned e = exponent(t.key, i);
            if (e) m = m * powers[i][e];
        }
        r = r + m;
    }
    return r;
}

bool MPoly::operator==(const MPoly &o) const
{
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].key != o.terms_[i].key || terms_[i].coef != o.terms_[i].coef) return false;
    }
    return true;
}

std::string MPoly::to_string(const std::vector<std::string> &names) const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto &t : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            const unsigned e = exponent(t.key, i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        std::string c = t.coef.to_string();
        bool neg = false;
        if (c[0] == '-') {
            bool simple = true;
            for (std::size_t k = 1; k < c.size(); ++k) {
                if (c[k] == '+' || c[k] == '-') simple = false;
            }
            if (simple) {
                neg = true;
                c = c.substr(1);
            }
        }
        std::string term;
        if (mono.empty()) {
            term = c;
        } else if (c == "1") {
            term = mono;
        } else {
            bool compound = false;
            for (std::size_t k = 1; k < c.size(); ++k) {
                if (c[k] == '+' || c[k] == '-') compound = true;
            }
            term = (compound ? "(" + c + ")" : c) + "*" + mono;
        }
        if (s.empty()) {
            s = neg ? "-" + term : term;
        } else {
            s += (neg ? "-" : "+") + term;
        }
    }
    return s;
}

MPoly MPoly::from_terms(const Ring &constants, std::size_t nvars, std::vector<MTerm> terms)
{
    MPoly r(constants, nvars);
    sort_merge(terms);
    r.terms_ = std::move(terms);
    return r;
}

MPoly exact_div(const MPoly &a, const MPoly &b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (b.is_constant()) return a.scaled(b.leading_coeff().inv());
    const Elem inv_lc = b.leading_coeff().inv();
    const MPoly::Key lead = b.terms()[0].key;
    std::vector<MTerm> q;
    MPoly r = a;
    while (!r.is_zero()) {
        const MPoly::Key k = r.terms()[0].key;
        if (!key_divides(lead, k)) throw DomainError("polynomial is not divisible");
        MTerm t{k - lead, r.terms()[0].coef * inv_lc};
        std::vector<MTerm> sub;
        sub.reserve(b.terms().size());
        for (const auto &bt : b.terms()) sub.push_back({bt.key + t.key, bt.coef * t.coef});
        r = r - MPoly::from_terms(a.constants(), a.nvars(), std::move(sub));
        q.push_back(std::move(t));
    }
    return MPoly::from_terms(a.constants(), std::max(a.nvars(), b.nvars()), std::move(q));
}

namespace
{

// Coefficients of p as a polynomial in variable v, indexed by v-degree.
std::map<unsigned, MPoly> split_by(const MPoly &p, std::size_t v)
{
    std::map<unsigned, std::vector<MTerm>> parts;
    const MPoly::Key unit = MPoly::Key{1} << shift_of(v);
    for (const auto &t : p.terms()) {
        const unsigned e = MPoly::exponent(t.key, v);
        parts[e].push_back({t.key - unit * e, t.coef});
    }
    std::map<unsigned, MPoly> out;
    for (auto &[e, terms] : parts) out.emplace(e, MPoly::from_terms(p.constants(), p.nvars(), std::move(terms)));
    return out;
}

MPoly var_power(const MPoly &like, std::size_t v, unsigned e)
{
    std::array<unsigned, MPoly::max_vars> ex{};
    ex[v] = e;
    return MPoly::monomial(like.constants().one(), ex, like.nvars());
}

MPoly content_in(const MPoly &p, std::size_t v)
{
    MPoly g(p.constants(), p.nvars());
    for (const auto &[e, c] : split_by(p, v)) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MPoly prem(MPoly a, const MPoly &b, std::size_t v)
{
    const int db = b.degree_in(v);
    const MPoly lcb = std::prev(split_by(b, v).end())->second;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const int da = a.degree_in(v);
        const MPoly lca = std::prev(split_by(a, v).end())->second;
        a = lcb * a - lca * var_power(a, v, static_cast<unsigned>(da - db)) * b;
    }
    return a;
}

UniPoly to_uni(const MPoly &p, std::size_t v)
{
    std::vector<Elem> c(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1, p.constants().zero());
    for (const auto &t : p.terms()) c[MPoly::exponent(t.key, v)] = t.coef;
    return UniPoly(p.constants(), std::move(c));
}

// Over Q, scale to integer coefficients with content 1 so that the
// remainder sequence below does not grow its numbers.
MPoly rational_primitive(const MPoly &p)
{
    if (p.constants().kind() != RingKind::rationals || p.is_zero()) return p;
    Int den = 1, num = 0;
    for (const auto &t : p.terms()) {
        const Rat &c = t.coef.as_rat();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    Rat f(den, num);
    f.canonicalize();
    return p.scaled(p.constants().from_rational(f));
}

MPoly from_uni(const UniPoly &u, std::size_t v, std::size_t nvars)
{
    std::vector<MTerm> terms;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
        if (u.coeffs()[i].is_zero()) continue;
        std::array<unsigned, MPoly::max_vars> ex{};
        ex[v] = static_cast<unsigned>(i);
        terms.push_back({MPoly::make_key(ex), u.coeffs()[i]});
    }
    return MPoly::from_terms(u.ring(), nvars, std::move(terms));
}

} // namespace

MPoly gcd(const MPoly &a, const MPoly &b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const std::size_t nv = std::max(a.nvars(), b.nvars());
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.constants().one(), nv);
    if (a == b) return a.monic();
    const unsigned used = a.used_vars() | b.used_vars();
    if (std::popcount(used) == 1) {
        const std::size_t v = static_cast<std::size_t>(std::countr_zero(used));
        return from_uni(gcd(to_uni(a, v), to_uni(b, v)), v, nv);
    }
    const std::size_t v = static_cast<std::size_t>(31 - std::countl_zero(used));
    const MPoly ca = content_in(a, v), cb = content_in(b, v);
    const MPoly c = gcd(ca, cb);
    MPoly pa = rational_primitive(exact_div(a, ca)), pb = rational_primitive(exact_div(b, cb));
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    MPoly g;
    while (true) {
        if (pb.degree_in(v) <= 0) {
            g = MPoly::constant(a.constants().one(), nv);
            break;
        }
        MPoly r = prem(pa, pb, v);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        pa = std::move(pb);
        pb = rational_primitive(exact_div(r, content_in(r, v)));
    }
    return (c * g).monic();
}

} // namespace wittkit

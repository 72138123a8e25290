#include <algorithm>

#include <wittkit/error.hpp>
#include <wittkit/unipoly.hpp>

namespace wittkit
{

UniPoly::UniPoly() = default;

UniPoly::UniPoly(Ring r) : ring_(std::move(r)) {}

UniPoly::UniPoly(Ring r, std::vector<Elem> coeffs) : ring_(std::move(r)), c_(std::move(coeffs))
{
    for (auto &c : c_) {
        if (c.ring() != ring_) c = ring_.embed(c);
    }
    trim();
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Elem &c) { return UniPoly(c.ring(), {c}); }

UniPoly UniPoly::x(const Ring &r) { return UniPoly(r, {r.zero(), r.one()}); }

UniPoly UniPoly::monomial(const Elem &c, std::size_t deg)
{
    std::vector<Elem> v(deg + 1, c.ring().zero());
    v[deg] = c;
    return UniPoly(c.ring(), std::move(v));
}

UniPoly UniPoly::from_roots(const Ring &r, const std::vector<Elem> &roots)
{
    UniPoly p = constant(r.one());
    for (const auto &a : roots) p = p * UniPoly(r, {-r.embed(a), r.one()});
    return p;
}

bool UniPoly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

Elem UniPoly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }

const Elem &UniPoly::lc() const
{
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto &c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly &a, const UniPoly &b)
{
    const Ring &r = a.c_.empty() && !b.c_.empty() ? b.ring_ : a.ring_;
    std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), r.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(r, std::move(v));
}

UniPoly operator-(const UniPoly &a, const UniPoly &b) { return a + (-b); }

UniPoly operator*(const UniPoly &a, const UniPoly &b)
{
    if (a.c_.empty() || b.c_.empty()) return UniPoly(a.ring_);
    std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UniPoly(a.ring_, std::move(v));
}

UniPoly UniPoly::scaled(const Elem &c) const
{
    UniPoly r = *this;
    for (auto &x : r.c_) x = x * c;
    r.trim();
    return r;
}

UniPoly UniPoly::shifted_up(std::size_t k) const
{
    if (c_.empty()) return *this;
    std::vector<Elem> v(k, ring_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(ring_, std::move(v));
}

UniPoly UniPoly::truncated(std::size_t n) const
{
    if (c_.size() <= n) return *this;
    return UniPoly(ring_, std::vector<Elem>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

UniPoly UniPoly::pow(unsigned e) const
{
    UniPoly r = constant(ring_.one());
    UniPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly &a, const UniPoly &b)
{
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (!b.lc().is_unit()) throw DomainError("divisor leading coefficient is not a unit");
    if (a.degree() < b.degree()) return {UniPoly(a.ring_), a};
    const Elem inv = b.lc().inv();
    std::vector<Elem> r = a.c_;
    std::vector<Elem> q(a.c_.size() - b.c_.size() + 1, a.ring_.zero());
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const Elem c = r[k] * inv;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            if (!b.c_[j].is_zero()) r[k - db + j] -= c * b.c_[j];
        }
    }
    r.resize(db, a.ring_.zero());
    return {UniPoly(a.ring_, std::move(q)), UniPoly(a.ring_, std::move(r))};
}

bool UniPoly::divides(const UniPoly &a) const { return (a % *this).is_zero(); }

UniPoly UniPoly::monic() const
{
    if (c_.empty() || lc().is_one()) return *this;
    return scaled(lc().inv());
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1) return UniPoly(ring_);
    std::vector<Elem> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * ring_.from_int(static_cast<long>(i)));
    return UniPoly(ring_, std::move(v));
}

UniPoly UniPoly::change_ring(const Ring &target) const
{
    return map(target, [&](const Elem &c) { return target.embed(c); });
}

Elem UniPoly::eval(const Elem &x) const
{
    const Ring &r = x.ring();
    Elem acc = r.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::compose(const UniPoly &inner) const
{
    UniPoly acc(inner.ring_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + constant(inner.ring_.embed(c_[i]));
    return acc;
}

UniPoly UniPoly::taylor_shift(const Elem &c) const
{
    std::vector<Elem> v = c_;
    const Elem s = ring_.embed(c);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) v[j] += s * v[j + 1];
    }
    return UniPoly(ring_, std::move(v));
}

UniPoly UniPoly::reversed(std::size_t n) const
{
    std::vector<Elem> v(n + 1, ring_.zero());
    for (std::size_t i = 0; i < c_.size() && i <= n; ++i) v[n - i] = c_[i];
    return UniPoly(ring_, std::move(v));
}

bool UniPoly::operator==(const UniPoly &o) const
{
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return false;
    }
    return true;
}

std::string UniPoly::to_string(const std::string &var) const
{
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string c = c_[i].to_string();
        bool compound = false;
        for (std::size_t k = 1; k < c.size(); ++k) {
            if (c[k] == '+' || c[k] == '-' || c[k] == '/') compound = true;
        }
        if (c.find('/') != std::string::npos && ring_.kind() == RingKind::rationals) compound = false;
        bool neg = false;
        if (!compound && c[0] == '-') {
            neg = true;
            c = c.substr(1);
        }
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        std::string term;
        if (i == 0) {
            term = compound ? "(" + c + ")" : c;
        } else if (c == "1") {
            term = mono;
        } else {
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

int UniPoly::compare(const UniPoly &a, const UniPoly &b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        const int c = Elem::compare(a.c_[i], b.c_[i]);
        if (c) return c;
    }
    return 0;
}

namespace
{

using IntPoly = std::vector<Int>;

// Integer multiple of a with content 1 (leading entry last, no zeros on top).
IntPoly primitive_integer(const UniPoly &a)
{
    Int den = 1, g = 0;
    for (const auto &c : a.coeffs()) {
        const Rat &q = c.as_rat();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    IntPoly out;
    for (const auto &c : a.coeffs()) {
        const Rat &q = c.as_rat();
        Int v = q.get_num() * (den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    for (auto &v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

void make_primitive(IntPoly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
    Int g = 0;
    for (const auto &v : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto &v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// Primitive remainder sequence over Z; avoids the denominator growth of
// Euclid over Q.
UniPoly gcd_rational(const UniPoly &a, const UniPoly &b)
{
    IntPoly x = primitive_integer(a), y = primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        const Int lc = y.back();
        while (x.size() >= y.size()) {
            const Int lx = x.back();
            const std::size_t shift = x.size() - y.size();
            for (auto &v : x) v *= lc;
            for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= lx * y[i];
            while (!x.empty() && x.back() == 0) x.pop_back();
        }
        make_primitive(x);
        std::swap(x, y);
    }
    std::vector<Elem> c;
    for (const auto &v : x) c.push_back(a.ring().from_int(v));
    return UniPoly(a.ring(), std::move(c)).monic();
}

} // namespace

UniPoly gcd(const UniPoly &a, const UniPoly &b)
{
    if (a.ring().kind() == RingKind::rationals && !a.is_zero() && !b.is_zero()) return gcd_rational(a, b);
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const UniPoly &a, const UniPoly &b)
{
    const Ring &R = a.ring();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(R.one()), s1(R);
    UniPoly t0(R), t1 = UniPoly::constant(R.one());
    while (!r1.is_zero()) {
        auto [q, r] = UniPoly::divmod(r0, r1);
        UniPoly s = s0 - q * s1;
        UniPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem inv = r0.lc().inv();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UniPoly powmod(const UniPoly &a, const Int &e, const UniPoly &m)
{
    UniPoly r = UniPoly::constant(a.ring().one()) % m;
    UniPoly b = a % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = bits; i-- > 0;) {
        r = (r * r) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
    }
    return r;
}

UniPoly invmod(const UniPoly &a, const UniPoly &m)
{
    XGcd x = xgcd(a % m, m);
    if (x.g.degree() != 0) throw DomainError("polynomial is not invertible modulo the given modulus");
    return x.s % m;
}

Elem resultant(const UniPoly &f0, const UniPoly &g0)
{
    const Ring &R = f0.ring();
    if (f0.is_zero() || g0.is_zero()) return R.zero();
    UniPoly f = f0, g = g0;
    Elem acc = R.one();
    while (true) {
        const int n = f.degree(), m = g.degree();
        if (n == 0) return acc * f.lc().pow(static_cast<long>(m));
        if (m == 0) return acc * g.lc().pow(static_cast<long>(n));
        if (n < m) {
            // Res(f,g) = (-1)^{nm} Res(g,f)
            if ((n * m) % 2) acc = -acc;
            std::swap(f, g);
            continue;
        }
        // deg f >= deg g: Res(f, g) = (-1)^{nm} lc(g)^{n - deg r} Res(g, r), r = f mod g
        UniPoly r = f % g;
        if ((n * m) % 2) acc = -acc;
        if (r.is_zero()) return R.zero();
        acc *= g.lc().pow(static_cast<long>(n - r.degree()));
        f = std::move(g);
        g = std::move(r);
    }
}

bool is_squarefree(const UniPoly &f)
{
    if (f.degree() <= 0) return true;
    UniPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

bool is_separable(const UniPoly &f) { return is_squarefree(f); }

namespace
{

// f(x) = h(x^p) -> h^(1/p)(x)
UniPoly pth_root_poly(const UniPoly &f, std::uint64_t p)
{
    std::vector<Elem> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i].pth_root());
    return UniPoly(f.ring(), std::move(v));
}

} // namespace

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly &f0)
{
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (f0.degree() <= 0) return out;
    const std::uint64_t p = f0.ring().char_p();
    UniPoly f = f0.monic();
    // Yun's algorithm, with a recursive p-th root step in characteristic p.
    std::vector<std::pair<UniPoly, unsigned>> parts;
    UniPoly fd = f.derivative();
    if (fd.is_zero()) {
        for (auto &[g, e] : squarefree_decomposition(pth_root_poly(f, p))) out.emplace_back(g, e * static_cast<unsigned>(p));
        return out;
    }
    UniPoly c = gcd(f, fd);
    UniPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly z = w / y;
        if (z.degree() > 0) parts.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        // c is a p-th power in characteristic p
        for (auto &[g, e] : squarefree_decomposition(pth_root_poly(c, p))) parts.emplace_back(g, e * static_cast<unsigned>(p));
    }
    // merge equal factors arising from the two branches
    for (auto &[g, e] : parts) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto &q) { return q.first == g; });
        if (it != out.end()) {
            it->second += e;
        } else {
            out.emplace_back(g, e);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second) return a.second < b.second;
        return UniPoly::compare(a.first, b.first) < 0;
    });
    return out;
}

} // namespace wittkit

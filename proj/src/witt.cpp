#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include <wittkit/error.hpp>
#include <wittkit/linalg.hpp>
#include <wittkit/witt.hpp>

namespace wittkit
{

using detail::EvalPoly;
using detail::QPoly;
using detail::Var;
using detail::qadd;
using detail::qmul;
using detail::qscale;
using detail::qsub;

WittVector::WittVector(Ring r, std::vector<Elem> components) : ring_(std::move(r)), a_(std::move(components))
{
    if (a_.empty()) throw DomainError("Witt vectors need length >= 1");
    for (auto &c : a_) {
        if (c.ring() != ring_) c = ring_.embed(c);
    }
}

WittVector WittVector::zero(const Ring &r, std::size_t m) { return WittVector(r, std::vector<Elem>(m, r.zero())); }

WittVector WittVector::one(const Ring &r, std::size_t m) { return teichmueller(r.one(), m); }

bool WittVector::operator==(const WittVector &o) const { return ring_ == o.ring_ && a_ == o.a_; }

std::string WittVector::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? ", " : "") + a_[i].to_string();
    return s + ")";
}

// ---------------------------------------------------------------------------
// Universal polynomials

namespace
{

QPoly ghost_poly(unsigned n, Var offset)
{
    QPoly g;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) g = qadd(g, qscale(detail::qvar(offset + d, n / d), Rat(d)));
    }
    return g;
}

// a_n from the ghost equation gh_n(x) = target given lower components.
QPoly invert_ghost_step(unsigned n, QPoly target, const std::map<unsigned, QPoly> &lower)
{
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) target = qsub(target, qscale(detail::qpow(lower.at(d), n / d), Rat(d)));
    }
    return qscale(target, Rat(1, n));
}

class PolyCache
{
public:
    const UniversalWittPolys &get(unsigned n)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = sum_prod_.find(n);
            if (it != sum_prod_.end()) return *it->second;
        }
        std::unique_lock lock(mutex_);
        for (unsigned k = 1; k <= n; ++k) {
            if (sum_prod_.count(k) || n % k != 0) continue;
            derive_sum_prod(k);
        }
        return *sum_prod_.at(n);
    }

    const EvalPoly &frobenius(unsigned r, unsigned n)
    {
        const auto key = std::make_pair(r, n);
        {
            std::shared_lock lock(mutex_);
            auto it = frob_.find(key);
            if (it != frob_.end()) return *it->second;
        }
        std::unique_lock lock(mutex_);
        for (unsigned k = 1; k <= n; ++k) {
            if (n % k != 0 || frob_.count({r, k})) continue;
            std::map<unsigned, QPoly> lower;
            for (unsigned d = 1; d < k; ++d) {
                if (k % d == 0) lower[d] = frob_q_.at({r, d});
            }
            QPoly phi = invert_ghost_step(k, ghost_poly(r * k, 0), lower);
            auto e = std::make_unique<EvalPoly>(phi);
            WITTKIT_ASSERT(e->integral(), "Frobenius polynomial has a non-integral coefficient");
            frob_q_[{r, k}] = std::move(phi);
            frob_[{r, k}] = std::move(e);
        }
        return *frob_.at(key);
    }

private:
    void derive_sum_prod(unsigned n)
    {
        std::map<unsigned, QPoly> ls, lp;
        for (unsigned d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            if (!sum_prod_.count(d)) derive_sum_prod(d);
            ls[d] = sum_q_.at(d);
            lp[d] = prod_q_.at(d);
        }
        const QPoly ga = ghost_poly(n, 0), gb = ghost_poly(n, witt_b_offset);
        QPoly s = invert_ghost_step(n, qadd(ga, gb), ls);
        QPoly p = invert_ghost_step(n, qmul(ga, gb), lp);
        auto e = std::make_unique<UniversalWittPolys>(UniversalWittPolys{n, EvalPoly(s), EvalPoly(p)});
        WITTKIT_ASSERT(e->S.integral(), "Witt sum polynomial has a non-integral coefficient");
        WITTKIT_ASSERT(e->P.integral(), "Witt product polynomial has a non-integral coefficient");
        sum_q_[n] = std::move(s);
        prod_q_[n] = std::move(p);
        sum_prod_[n] = std::move(e);
    }

    std::shared_mutex mutex_;
    std::map<unsigned, std::unique_ptr<UniversalWittPolys>> sum_prod_;
    std::map<unsigned, QPoly> sum_q_, prod_q_;
    std::map<std::pair<unsigned, unsigned>, std::unique_ptr<EvalPoly>> frob_;
    std::map<std::pair<unsigned, unsigned>, QPoly> frob_q_;
};

PolyCache &cache()
{
    static PolyCache c;
    return c;
}

void require_compatible(const WittVector &u, const WittVector &v)
{
    if (u.ring() != v.ring()) throw DomainError("Witt vectors over different rings: " + u.ring().spec() + " vs " + v.ring().spec());
    if (u.length() != v.length()) {
        throw DomainError("Witt vectors of different lengths: " + std::to_string(u.length()) + " vs " + std::to_string(v.length()));
    }
}

} // namespace

const UniversalWittPolys &universal_polys(unsigned n)
{
    if (n == 0) throw DomainError("universal polynomials are indexed from 1");
    return cache().get(n);
}

const EvalPoly &frobenius_poly(unsigned r, unsigned n)
{
    if (r == 0 || n == 0) throw DomainError("Frobenius polynomials are indexed from 1");
    return cache().frobenius(r, n);
}

std::string witt_poly_string(const EvalPoly &p)
{
    return p.to_string([](Var v) {
        if (v >= witt_b_offset) return "b" + std::to_string(v - witt_b_offset);
        return "a" + std::to_string(v);
    });
}

// ---------------------------------------------------------------------------
// Ghost map

std::vector<Elem> ghost(const WittVector &w)
{
    const Ring &R = w.ring();
    const std::size_t m = w.length();
    std::vector<Elem> g(m, R.zero());
    for (std::size_t d = 1; d <= m; ++d) {
        if (w[d].is_zero()) continue;
        const Elem dd = R.from_int(static_cast<long>(d));
        Elem pw = w[d];
        for (std::size_t n = d; n <= m; n += d) {
            g[n - 1] += dd * pw;
            pw = pw * w[d];
        }
    }
    return g;
}

WittVector from_ghost(const Ring &R, const std::vector<Elem> &g)
{
    if (!R.torsion_free()) throw DomainError("from_ghost needs a torsion-free ring, got " + R.spec());
    const std::size_t m = g.size();
    std::vector<Elem> a(m, R.zero());
    for (std::size_t n = 1; n <= m; ++n) {
        Elem rest = R.embed(g[n - 1]);
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d == 0 && !a[d - 1].is_zero()) rest -= R.from_int(static_cast<long>(d)) * a[d - 1].pow(static_cast<long>(n / d));
        }
        if (R.kind() == RingKind::integers) {
            const Int &v = rest.as_int();
            if (!mpz_divisible_ui_p(v.get_mpz_t(), n)) {
                throw DomainError("ghost vector has no integral Witt preimage (component " + std::to_string(n) + ")");
            }
            a[n - 1] = R.from_int(Int(v / static_cast<unsigned long>(n)));
        } else {
            a[n - 1] = rest / R.from_int(static_cast<long>(n));
        }
    }
    return WittVector(R, std::move(a));
}

// ---------------------------------------------------------------------------
// Arithmetic

WittVector witt_add_universal(const WittVector &u, const WittVector &v)
{
    require_compatible(u, v);
    const Ring &R = u.ring();
    std::vector<Elem> c;
    auto value = [&](Var x) -> const Elem & { return x >= witt_b_offset ? v[x - witt_b_offset] : u[x]; };
    for (unsigned n = 1; n <= u.length(); ++n) c.push_back(universal_polys(n).S.eval(R, value));
    return WittVector(R, std::move(c));
}

WittVector witt_mul_universal(const WittVector &u, const WittVector &v)
{
    require_compatible(u, v);
    const Ring &R = u.ring();
    std::vector<Elem> c;
    auto value = [&](Var x) -> const Elem & { return x >= witt_b_offset ? v[x - witt_b_offset] : u[x]; };
    for (unsigned n = 1; n <= u.length(); ++n) c.push_back(universal_polys(n).P.eval(R, value));
    return WittVector(R, std::move(c));
}

WittVector witt_add_series(const WittVector &u, const WittVector &v)
{
    require_compatible(u, v);
    TruncSeries f = to_one_unit(u);
    for (std::size_t i = 1; i <= v.length(); ++i) f.mul_binomial(v[i], i);
    return from_one_unit(f);
}

WittVector witt_mul_series(const WittVector &u, const WittVector &v)
{
    require_compatible(u, v);
    const Ring &R = u.ring();
    const std::size_t m = u.length();
    TruncSeries f = TruncSeries::one(R, m);
    for (std::size_t i = 1; i <= m; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 1; j <= m; ++j) {
            if (v[j].is_zero()) continue;
            const std::size_t d = std::gcd(i, j);
            const std::size_t l = i / d * j;
            if (l > m) continue;
            const Elem c = u[i].pow(static_cast<long>(j / d)) * v[j].pow(static_cast<long>(i / d));
            for (std::size_t k = 0; k < d; ++k) f.mul_binomial(c, l);
        }
    }
    return from_one_unit(f);
}

WittVector witt_add(const WittVector &u, const WittVector &v)
{
    return u.length() <= universal_weight_limit ? witt_add_universal(u, v) : witt_add_series(u, v);
}

WittVector witt_mul(const WittVector &u, const WittVector &v)
{
    return u.length() <= universal_weight_limit ? witt_mul_universal(u, v) : witt_mul_series(u, v);
}

WittVector witt_neg(const WittVector &u) { return from_one_unit(to_one_unit(u).inverse()); }

WittVector witt_sub(const WittVector &u, const WittVector &v) { return witt_add(u, witt_neg(v)); }

WittVector teichmueller(const Elem &a, std::size_t m)
{
    if (m == 0) throw DomainError("Witt vectors need length >= 1");
    std::vector<Elem> c(m, a.ring().zero());
    c[0] = a;
    return WittVector(a.ring(), std::move(c));
}

WittVector verschiebung(unsigned n, const WittVector &w)
{
    if (n == 0) throw DomainError("V_n needs n >= 1");
    const Ring &R = w.ring();
    const std::size_t len = n * w.length() + n - 1;
    std::vector<Elem> c(len, R.zero());
    for (std::size_t i = 1; i <= w.length(); ++i) c[n * i - 1] = w[i];
    return WittVector(R, std::move(c));
}

namespace
{

std::size_t frobenius_target(unsigned n, const WittVector &w)
{
    if (n == 0) throw DomainError("F_n needs n >= 1");
    const std::size_t len = w.length();
    if ((len + 1) % n != 0 || (len + 1) / n < 2) {
        throw DomainError("F_" + std::to_string(n) + " needs an input of length " + std::to_string(n) + "m+" + std::to_string(n - 1) +
                          " with m >= 1, got " + std::to_string(len));
    }
    return (len + 1) / n - 1;
}

} // namespace

WittVector frobenius_universal(unsigned n, const WittVector &w)
{
    const std::size_t m = frobenius_target(n, w);
    const Ring &R = w.ring();
    std::vector<Elem> c;
    auto value = [&](Var x) -> const Elem & { return w[x]; };
    for (unsigned i = 1; i <= m; ++i) c.push_back(frobenius_poly(n, i).eval(R, value));
    return WittVector(R, std::move(c));
}

WittVector frobenius_series(unsigned n, const WittVector &w)
{
    const std::size_t m = frobenius_target(n, w);
    const Ring &R = w.ring();
    TruncSeries f = TruncSeries::one(R, m);
    for (std::size_t d = 1; d <= w.length(); ++d) {
        if (w[d].is_zero()) continue;
        const std::size_t g = std::gcd(static_cast<std::size_t>(n), d);
        if (d / g > m) continue;
        const Elem c = w[d].pow(static_cast<long>(n / g));
        for (std::size_t k = 0; k < g; ++k) f.mul_binomial(c, d / g);
    }
    return from_one_unit(f);
}

WittVector frobenius(unsigned n, const WittVector &w)
{
    const std::size_t m = frobenius_target(n, w);
    return n * m <= universal_weight_limit ? frobenius_universal(n, w) : frobenius_series(n, w);
}

WittVector restrict_to(const WittVector &w, std::size_t m)
{
    if (m == 0 || m > w.length()) {
        throw DomainError("cannot restrict a length-" + std::to_string(w.length()) + " Witt vector to length " + std::to_string(m));
    }
    return WittVector(w.ring(), std::vector<Elem>(w.components().begin(), w.components().begin() + static_cast<std::ptrdiff_t>(m)));
}

TruncSeries to_one_unit(const WittVector &w)
{
    TruncSeries f = TruncSeries::one(w.ring(), w.length());
    for (std::size_t i = 1; i <= w.length(); ++i) f.mul_binomial(w[i], i);
    return f;
}

WittVector from_one_unit(const TruncSeries &f0)
{
    if (!f0[0].is_one()) throw DomainError("a 1-unit must have constant term 1");
    const std::size_t m = f0.order();
    if (m == 0) throw DomainError("a 1-unit of order 0 carries no Witt components");
    TruncSeries f = f0;
    std::vector<Elem> a;
    a.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        Elem ai = -f[i];
        f.div_binomial(ai, i);
        a.push_back(std::move(ai));
    }
    return WittVector(f0.ring(), std::move(a));
}

WittVector witt_trace(const WittVector &w, const Ring &k)
{
    const Ring &L = w.ring();
    if (L == k) return w;
    require_separable(L, k);
    const std::size_t m = w.length();
    TruncSeries f = TruncSeries::one(k, m);
    for (std::size_t i = 1; i <= m; ++i) {
        if (w[i].is_zero()) continue;
        // prod over conjugates of (1 - σ(a_i) t^i) = reversed characteristic polynomial
        const UniPoly chi = field_charpoly(w[i], k);
        const std::size_t d = static_cast<std::size_t>(chi.degree());
        TruncSeries g(k, m);
        for (std::size_t j = 0; j <= d && j * i <= m; ++j) g[j * i] = chi[d - j];
        f = f * g;
    }
    return from_one_unit(f);
}

} // namespace wittkit

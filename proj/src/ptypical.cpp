#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include <wittkit/error.hpp>
#include <wittkit/integer.hpp>
#include <wittkit/ptypical.hpp>

namespace wittkit
{

using detail::EvalPoly;
using detail::QPoly;
using detail::Var;

PTypicalWitt::PTypicalWitt(std::uint64_t p, Ring r, std::vector<Elem> components) : p_(p), ring_(std::move(r)), y_(std::move(components))
{
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (y_.empty()) throw DomainError("p-typical Witt vectors need level >= 0");
    for (auto &c : y_) c = ring_.embed(c);
}

PTypicalWitt PTypicalWitt::zero(std::uint64_t p, const Ring &r, unsigned level)
{
    return PTypicalWitt(p, r, std::vector<Elem>(level + 1, r.zero()));
}

bool PTypicalWitt::operator==(const PTypicalWitt &o) const { return p_ == o.p_ && ring_ == o.ring_ && y_ == o.y_; }

std::string PTypicalWitt::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < y_.size(); ++i) {
        if (i) s += ", ";
        s += y_[i].to_string();
    }
    return s + ")";
}

namespace
{

void require_prime(std::uint64_t p)
{
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint64_t upow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

QPoly big_ghost_poly(std::uint64_t n)
{
    QPoly g;
    for (std::uint64_t d : divisors(n)) g = detail::qadd(g, detail::qscale(detail::qvar(static_cast<Var>(d), static_cast<unsigned>(n / d)), Rat(Int(static_cast<unsigned long>(d)))));
    return g;
}

class SplitCache
{
public:
    const EvalPoly &split(std::uint64_t p, std::uint64_t j, unsigned i)
    {
        const auto key = std::make_tuple(p, j, i);
        {
            std::shared_lock lock(mutex_);
            auto it = split_.find(key);
            if (it != split_.end()) return *it->second;
        }
        std::unique_lock lock(mutex_);
        for (unsigned k = 0; k <= i; ++k) {
            if (split_.count({p, j, k})) continue;
            QPoly target = big_ghost_poly(j * upow(p, k));
            for (unsigned s = 0; s < k; ++s) {
                const QPoly &ys = split_q_.at({p, j, s});
                target = detail::qsub(target, detail::qscale(detail::qpow(ys, static_cast<unsigned>(upow(p, k - s))), Rat(Int(static_cast<unsigned long>(upow(p, s))))));
            }
            target = detail::qscale(target, Rat(Int(1), Int(static_cast<unsigned long>(upow(p, k)))));
            auto e = std::make_unique<EvalPoly>(target);
            WITTKIT_ASSERT(e->p_integral(p), "p-typical split polynomial has a denominator divisible by p");
            split_q_[{p, j, k}] = std::move(target);
            split_[{p, j, k}] = std::move(e);
        }
        return *split_.at(key);
    }

    const EvalPoly &join(std::uint64_t p, std::uint64_t n)
    {
        const auto key = std::make_pair(p, n);
        {
            std::shared_lock lock(mutex_);
            auto it = join_.find(key);
            if (it != join_.end()) return *it->second;
        }
        std::unique_lock lock(mutex_);
        derive_join(p, n);
        return *join_.at(key);
    }

private:
    void derive_join(std::uint64_t p, std::uint64_t n)
    {
        if (join_.count({p, n})) return;
        for (std::uint64_t d : divisors(n)) {
            if (d < n) derive_join(p, d);
        }
        unsigned i = 0;
        std::uint64_t j = n;
        while (j % p == 0) {
            j /= p;
            ++i;
        }
        // gh_n(a) = w_i(y^(j))
        QPoly target;
        for (unsigned s = 0; s <= i; ++s) {
            target = detail::qadd(target, detail::qscale(detail::qvar(ptypical_var(j, s), static_cast<unsigned>(upow(p, i - s))), Rat(Int(static_cast<unsigned long>(upow(p, s))))));
        }
        for (std::uint64_t d : divisors(n)) {
            if (d == n) continue;
            target = detail::qsub(target, detail::qscale(detail::qpow(join_q_.at({p, d}), static_cast<unsigned>(n / d)), Rat(Int(static_cast<unsigned long>(d)))));
        }
        target = detail::qscale(target, Rat(Int(1), Int(static_cast<unsigned long>(n))));
        auto e = std::make_unique<EvalPoly>(target);
        WITTKIT_ASSERT(e->p_integral(p), "p-typical join polynomial has a denominator divisible by p");
        join_q_[{p, n}] = std::move(target);
        join_[{p, n}] = std::move(e);
    }

    std::shared_mutex mutex_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, unsigned>, std::unique_ptr<EvalPoly>> split_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, unsigned>, QPoly> split_q_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::unique_ptr<EvalPoly>> join_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, QPoly> join_q_;
};

SplitCache &cache()
{
    static SplitCache c;
    return c;
}

void require_zp_algebra(const Ring &r, std::uint64_t p, std::size_t m)
{
    for (std::uint64_t j = 2; j <= m; ++j) {
        if (j % p != 0 && !r.from_int(Int(static_cast<unsigned long>(j))).is_unit()) {
            throw DomainError("1/" + std::to_string(j) + " does not exist in " + r.spec() + ", which is needed for p = " + std::to_string(p) + " up to length " + std::to_string(m));
        }
    }
}

void require_compatible(const PTypicalWitt &u, const PTypicalWitt &v)
{
    if (u.prime() != v.prime()) throw DomainError("p-typical vectors for different primes");
    if (u.ring() != v.ring()) throw DomainError("p-typical vectors over different rings: " + u.ring().spec() + " vs " + v.ring().spec());
    if (u.level() != v.level()) throw DomainError("p-typical vectors of different levels");
}

} // namespace

ArtinHasseTrunc artin_hasse(std::uint64_t p, std::size_t m)
{
    require_prime(p);
    if (m == 0) throw DomainError("Artin-Hasse truncation needs m >= 1");
    // n f_n = -sum_{p^i <= n} f_{n - p^i}, from f' = f * (-sum t^(p^i - 1))
    std::vector<Rat> f(m + 1);
    f[0] = 1;
    for (std::size_t n = 1; n <= m; ++n) {
        Rat s = 0;
        for (std::uint64_t q = 1; q <= n; q *= p) s += f[n - q];
        f[n] = -s / Rat(Int(static_cast<unsigned long>(n)));
        WITTKIT_ASSERT(!mpz_divisible_ui_p(f[n].get_den_mpz_t(), p), "Artin-Hasse coefficient is not p-integral");
    }
    const Ring Q = Ring::rationals();
    std::vector<Elem> c;
    c.reserve(m + 1);
    for (const auto &x : f) c.push_back(Q.from_rational(x));
    return ArtinHasseTrunc{p, m, TruncSeries(Q, std::move(c))};
}

bool is_zp_algebra_upto(const Ring &r, std::uint64_t p, std::size_t m)
{
    try {
        require_zp_algebra(r, p, m);
    } catch (const DomainError &) {
        return false;
    }
    return true;
}

WittVector epsilon(std::uint64_t p, std::size_t m, const Ring &r)
{
    require_prime(p);
    require_zp_algebra(r, p, m);
    const ArtinHasseTrunc f = artin_hasse(p, m);
    std::vector<Elem> c;
    c.reserve(m + 1);
    for (const auto &x : f.series.coeffs()) c.push_back(r.from_rational(x.as_rat()));
    return from_one_unit(TruncSeries(r, std::move(c)));
}

unsigned n_of_j(std::uint64_t j, std::uint64_t p, std::size_t m)
{
    require_prime(p);
    if (j == 0 || j % p == 0) throw DomainError("j = " + std::to_string(j) + " is not prime to p = " + std::to_string(p));
    if (j > m) throw DomainError("j = " + std::to_string(j) + " exceeds m = " + std::to_string(m));
    unsigned n = 0;
    for (std::uint64_t q = j * p; q <= m; q *= p) ++n;
    return n;
}

std::vector<std::uint64_t> split_indices(std::uint64_t p, std::size_t m)
{
    require_prime(p);
    std::vector<std::uint64_t> js;
    for (std::uint64_t j = 1; j <= m; ++j) {
        if (j % p != 0) js.push_back(j);
    }
    return js;
}

const EvalPoly &split_poly(std::uint64_t p, std::uint64_t j, unsigned i)
{
    require_prime(p);
    if (j == 0 || j % p == 0) throw DomainError("j must be prime to p");
    return cache().split(p, j, i);
}

const EvalPoly &join_poly(std::uint64_t p, std::uint64_t n)
{
    require_prime(p);
    if (n == 0) throw DomainError("join polynomials are indexed from 1");
    return cache().join(p, n);
}

PTypicalSplit p_typical_split(const WittVector &w, std::uint64_t p)
{
    require_prime(p);
    const Ring &R = w.ring();
    const std::size_t m = w.length();
    require_zp_algebra(R, p, m);
    auto value = [&](Var x) -> const Elem & { return w[x]; };
    PTypicalSplit out;
    for (std::uint64_t j : split_indices(p, m)) {
        const unsigned n = n_of_j(j, p, m);
        std::vector<Elem> y;
        for (unsigned i = 0; i <= n; ++i) y.push_back(split_poly(p, j, i).eval(R, value));
        out.emplace(j, PTypicalWitt(p, R, std::move(y)));
    }
    return out;
}

WittVector p_typical_join(const PTypicalSplit &parts, std::uint64_t p)
{
    require_prime(p);
    if (parts.empty()) throw DomainError("nothing to join");
    const Ring R = parts.begin()->second.ring();
    std::size_t m = 0;
    for (const auto &[j, y] : parts) {
        if (y.prime() != p) throw DomainError("component " + std::to_string(j) + " is not " + std::to_string(p) + "-typical");
        if (y.ring() != R) throw DomainError("components over different rings");
        m += y.level() + 1;
    }
    const auto js = split_indices(p, m);
    if (js.size() != parts.size()) throw DomainError("components do not match a decomposition of W_" + std::to_string(m));
    for (std::uint64_t j : js) {
        auto it = parts.find(j);
        if (it == parts.end() || it->second.level() != n_of_j(j, p, m)) {
            throw DomainError("component " + std::to_string(j) + " is missing or has the wrong level for W_" + std::to_string(m));
        }
    }
    require_zp_algebra(R, p, m);
    auto value = [&](Var x) -> const Elem & { return parts.at(x & 0xFFFFFFu)[x >> 24]; };
    std::vector<Elem> a;
    a.reserve(m);
    for (std::uint64_t n = 1; n <= m; ++n) a.push_back(join_poly(p, n).eval(R, value));
    return WittVector(R, std::move(a));
}

std::vector<Elem> ghost(const PTypicalWitt &y)
{
    const Ring &R = y.ring();
    const Elem pp = R.from_int(Int(static_cast<unsigned long>(y.prime())));
    std::vector<Elem> w;
    for (std::size_t i = 0; i <= y.level(); ++i) {
        Elem s = R.zero(), ps = R.one();
        for (std::size_t s_ = 0; s_ <= i; ++s_) {
            if (!y[s_].is_zero()) s += ps * y[s_].pow(ipow(Int(static_cast<unsigned long>(y.prime())), static_cast<unsigned long>(i - s_)));
            ps = ps * pp;
        }
        w.push_back(std::move(s));
    }
    return w;
}

PTypicalWitt ptypical_teichmueller(std::uint64_t p, const Elem &a, unsigned level)
{
    std::vector<Elem> y(level + 1, a.ring().zero());
    y[0] = a;
    return PTypicalWitt(p, a.ring(), std::move(y));
}

WittVector to_big(const PTypicalWitt &y)
{
    const std::uint64_t p = y.prime();
    const std::size_t len = upow(p, y.level());
    std::vector<Elem> a(len, y.ring().zero());
    std::uint64_t q = 1;
    for (std::size_t i = 0; i <= y.level(); ++i, q *= p) a[q - 1] = y[i];
    return WittVector(y.ring(), std::move(a));
}

PTypicalWitt from_big(const WittVector &w, std::uint64_t p)
{
    std::vector<Elem> y;
    for (std::uint64_t q = 1; q <= w.length(); q *= p) y.push_back(w[q]);
    return PTypicalWitt(p, w.ring(), std::move(y));
}

// The ghost components at p-powers only see the components at p-powers, so
// p-typical arithmetic is big Witt arithmetic read off at those indices.
PTypicalWitt ptypical_add(const PTypicalWitt &u, const PTypicalWitt &v)
{
    require_compatible(u, v);
    return from_big(witt_add(to_big(u), to_big(v)), u.prime());
}

PTypicalWitt ptypical_neg(const PTypicalWitt &u) { return from_big(witt_neg(to_big(u)), u.prime()); }

PTypicalWitt ptypical_mul(const PTypicalWitt &u, const PTypicalWitt &v)
{
    require_compatible(u, v);
    return from_big(witt_mul(to_big(u), to_big(v)), u.prime());
}

PTypicalWitt ptypical_frobenius(const PTypicalWitt &y)
{
    if (y.level() == 0) throw DomainError("F needs level >= 1");
    const std::uint64_t p = y.prime();
    WittVector x = to_big(y);
    std::vector<Elem> a = x.components();
    a.resize(a.size() + p - 1, y.ring().zero());
    return from_big(frobenius(static_cast<unsigned>(p), WittVector(y.ring(), std::move(a))), p);
}

PTypicalWitt ptypical_verschiebung(const PTypicalWitt &y)
{
    std::vector<Elem> c{y.ring().zero()};
    c.insert(c.end(), y.components().begin(), y.components().end());
    return PTypicalWitt(y.prime(), y.ring(), std::move(c));
}

} // namespace wittkit

#include <utility>

#include <wittkit/detail/fp_poly.hpp>
#include <wittkit/error.hpp>
#include <wittkit/integer.hpp>

namespace wittkit::detail::fp
{

void trim(Poly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly &a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly &a, const Poly &b, std::uint64_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    trim(r);
    return r;
}

Poly sub(const Poly &a, const Poly &b, std::uint64_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

Poly mul(const Poly &a, const Poly &b, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

Poly mod(Poly a, const Poly &m, std::uint64_t p)
{
    trim(a);
    const int dm = degree(m);
    if (dm < 0) throw DomainError("polynomial division by zero");
    const std::uint64_t inv_lc = invmod_u64(m.back(), p);
    while (degree(a) >= dm) {
        const std::size_t shift = a.size() - m.size();
        const std::uint64_t c = mulmod_u64(a.back(), inv_lc, p);
        for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod_u64(c, m[j], p)) % p;
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly &a, const Poly &b, const Poly &m, std::uint64_t p) { return mod(mul(a, b, p), m, p); }

Poly powmod(Poly a, std::uint64_t e, const Poly &m, std::uint64_t p)
{
    Poly r{1};
    r = mod(r, m, p);
    a = mod(std::move(a), m, p);
    while (e) {
        if (e & 1) r = mulmod(r, a, m, p);
        e >>= 1;
        if (e) a = mulmod(a, a, m, p);
    }
    return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = invmod_u64(a.back(), p);
        for (auto &c : a) c = mulmod_u64(c, inv, p);
    }
    return a;
}

Poly invmod(const Poly &a, const Poly &m, std::uint64_t p)
{
    Poly r0 = m, r1 = mod(a, m, p);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        // q = r0 div r1
        Poly q, r = r0;
        const std::uint64_t inv_lc = invmod_u64(r1.back(), p);
        if (degree(r) >= degree(r1)) q.assign(r.size() - r1.size() + 1, 0);
        while (degree(r) >= degree(r1)) {
            const std::size_t shift = r.size() - r1.size();
            const std::uint64_t c = mulmod_u64(r.back(), inv_lc, p);
            q[shift] = c;
            for (std::size_t j = 0; j < r1.size(); ++j) r[shift + j] = (r[shift + j] + p - mulmod_u64(c, r1[j], p)) % p;
            trim(r);
        }
        Poly s = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (degree(r0) != 0) throw DomainError("polynomial is not invertible modulo the given modulus");
    const std::uint64_t inv = invmod_u64(r0[0], p);
    for (auto &c : s0) c = mulmod_u64(c, inv, p);
    return s0;
}

namespace
{

Poly frobenius_power(const Poly &x, unsigned k, const Poly &f, std::uint64_t p)
{
    Poly r = x;
    for (unsigned i = 0; i < k; ++i) r = powmod(r, p, f, p);
    return r;
}

} // namespace

bool is_irreducible(const Poly &f, std::uint64_t p)
{
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x = mod(Poly{0, 1}, f, p);
    // x^(p^n) == x mod f
    if (frobenius_power(x, static_cast<unsigned>(n), f, p) != x) return false;
    for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
        Poly h = frobenius_power(x, static_cast<unsigned>(n / r), f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (degree(g) != 0) return false;
    }
    return true;
}

} // namespace wittkit::detail::fp

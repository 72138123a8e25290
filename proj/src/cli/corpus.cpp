#include <wittkit/cli.hpp>

#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <wittkit/count.hpp>
#include <wittkit/cycles.hpp>
#include <wittkit/error.hpp>
#include <wittkit/factor.hpp>
#include <wittkit/forms.hpp>
#include <wittkit/integer.hpp>
#include <wittkit/linalg.hpp>
#include <wittkit/parse.hpp>
#include <wittkit/ptypical.hpp>
#include <wittkit/witt.hpp>

namespace wittkit::cli
{

namespace
{

using Rng = std::mt19937_64;

class Reporter
{
public:
    explicit Reporter(SuiteResult &r) : r_(r) {}

    void check(const std::string &name, const std::function<bool()> &f)
    {
        CaseResult c{name, false, ""};
        try {
            c.pass = f();
            if (!c.pass) c.detail = "check failed";
        } catch (const std::exception &e) {
            c.detail = std::string("unexpected exception: ") + e.what();
        }
        r_.cases.push_back(std::move(c));
    }

    template <class E>
    void throws(const std::string &name, const std::function<void()> &f)
    {
        CaseResult c{name, false, "no exception"};
        try {
            f();
        } catch (const E &) {
            c.pass = true;
            c.detail.clear();
        } catch (const std::exception &e) {
            c.detail = std::string("wrong exception: ") + e.what();
        }
        r_.cases.push_back(std::move(c));
    }

private:
    SuiteResult &r_;
};

long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Elem random_constant(const Ring &k, Rng &rng)
{
    switch (k.kind()) {
    case RingKind::rationals:
        return k.from_rational(Rat(uniform(rng, -9, 9), uniform(rng, 1, 4)));
    case RingKind::prime_field:
    case RingKind::ext_field:
        return k.element_from_index(static_cast<std::uint64_t>(rng() % k.order().get_ui()));
    default:
        return k.from_int(uniform(rng, -9, 9));
    }
}

Elem random_elem(const Ring &r, Rng &rng)
{
    if (r.kind() == RingKind::function_field) {
        Elem x = r.embed(random_constant(r.base(), rng));
        for (std::size_t i = 0; i < r.num_variables(); ++i) x += r.variable(i) * r.embed(random_constant(r.base(), rng));
        return x;
    }
    return random_constant(r, rng);
}

Elem random_nonzero(const Ring &r, Rng &rng)
{
    while (true) {
        Elem x = random_elem(r, rng);
        if (!x.is_zero()) return x;
    }
}

WittVector random_witt(const Ring &r, std::size_t m, Rng &rng)
{
    std::vector<Elem> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(random_elem(r, rng));
    return WittVector(r, std::move(c));
}

UniPoly one_unit_poly(const Ring &k, int d, Rng &rng)
{
    std::vector<Elem> c{k.one()};
    for (int i = 1; i <= d; ++i) c.push_back(random_constant(k, rng));
    if (c.back().is_zero()) c.back() = k.one();
    return UniPoly(k, std::move(c));
}

ParamCurve random_fy_g(const Ring &k, unsigned m, Rng &rng)
{
    while (true) {
        const UniPoly f = one_unit_poly(k, static_cast<int>(uniform(rng, 1, 3)), rng);
        const UniPoly h = UniPoly(k, {random_constant(k, rng), random_constant(k, rng)});
        const UniPoly g = f + UniPoly::monomial(random_nonzero(k, rng), m) * h;
        if (g == f || g.is_zero()) continue;
        return fy_equals_g(f, g, m);
    }
}

UniPoly upoly(const Ring &k, std::vector<long> c)
{
    std::vector<Elem> e;
    for (long v : c) e.push_back(k.from_int(v));
    return UniPoly(k, std::move(e));
}

Elem rat(const Ring &k, long a, long b) { return k.from_rational(Rat(a, b)); }

WittVector wv(const Ring &k, std::vector<Elem> c) { return WittVector(k, std::move(c)); }

// prod over j <= m prime to p of (1 - t^j)^(mu(j)/j), by binomial series.
std::vector<Rat> mobius_product(std::uint64_t p, std::size_t m)
{
    std::vector<Rat> f(m + 1, Rat(0));
    f[0] = 1;
    for (std::uint64_t j = 1; j <= m; ++j) {
        const int mu = mobius(j);
        if (j % p == 0 || mu == 0) continue;
        Rat alpha(mu, static_cast<long>(j));
        alpha.canonicalize();
        std::vector<Rat> b(m + 1, Rat(0));
        Rat c = 1;
        for (std::size_t k = 0; k * j <= m; ++k) {
            b[k * j] = c;
            c = -c * (alpha - Rat(static_cast<long>(k))) / Rat(static_cast<long>(k + 1));
        }
        std::vector<Rat> g(m + 1, Rat(0));
        for (std::size_t i = 0; i <= m; ++i) {
            for (std::size_t k = 0; i + k <= m; ++k) g[i + k] += f[i] * b[k];
        }
        f = std::move(g);
    }
    return f;
}

// ---------------------------------------------------------------------------

void suite_algebra(Reporter &R, Rng &rng)
{
    R.check("make_finite_field(2,1) is the prime field", [] { return make_finite_field(2, 1).kind() == RingKind::prime_field; });
    R.check("make_finite_field(2,2) has modulus x^2+x+1", [] { return make_finite_field(2, 2).modulus_coeffs() == std::vector<std::uint64_t>{1, 1, 1}; });
    R.check("make_finite_field(3,2) has modulus x^2+1", [] { return make_finite_field(3, 2).modulus_coeffs() == std::vector<std::uint64_t>{1, 0, 1}; });
    R.throws<DomainError>("make_finite_field rejects composite p", [] { make_finite_field(4, 1); });
    R.throws<DomainError>("make_finite_field rejects e = 17", [] { make_finite_field(2, 17); });

    const Ring F2 = Ring::prime_field(2), Q = Ring::rationals();
    R.check("x^2+1 over F2 factors as (x+1)^2", [&] {
        const auto fac = factor_univariate(upoly(F2, {1, 0, 1}));
        return fac.size() == 1 && fac[0].first == upoly(F2, {1, 1}) && fac[0].second == 2;
    });
    R.check("x^2-2 is irreducible over Q", [&] {
        const auto fac = factor_univariate(upoly(Q, {-2, 0, 1}));
        return fac.size() == 1 && fac[0].first == upoly(Q, {-2, 0, 1}) && fac[0].second == 1;
    });
    R.check("x factors as itself", [&] {
        for (const Ring &k : {Q, F2, make_finite_field(3, 2)}) {
            const auto fac = factor_univariate(UniPoly::x(k));
            if (fac.size() != 1 || fac[0].first != UniPoly::x(k) || fac[0].second != 1) return false;
        }
        return true;
    });
    R.check("factorization round trip", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5), make_finite_field(2, 3)}) {
            for (int i = 0; i < 10; ++i) {
                std::vector<Elem> c;
                for (long d = uniform(rng, 1, 6); d >= 0; --d) c.push_back(random_constant(k, rng));
                UniPoly f(k, c);
                if (f.is_zero()) continue;
                if (expand(factor_univariate(f), k) != f.monic()) return false;
            }
        }
        return true;
    });
    R.check("Res(x-2, x^2+1) = 5", [&] { return resultant(upoly(Q, {-2, 1}), upoly(Q, {1, 0, 1})) == Q.from_int(5L); });
    R.check("Res(x^2+1, x^2+1) = 0", [&] { return resultant(upoly(Q, {1, 0, 1}), upoly(Q, {1, 0, 1})).is_zero(); });
    R.check("Res(x-a, g) = g(a)", [&] {
        for (int i = 0; i < 10; ++i) {
            const Elem a = random_constant(Q, rng);
            const UniPoly g(Q, {random_constant(Q, rng), random_constant(Q, rng), Q.one()});
            if (resultant(UniPoly(Q, {-a, Q.one()}), g) != g.eval(a)) return false;
        }
        return true;
    });
    R.check("Res(f, gh) = Res(f, g) Res(f, h)", [&] {
        const Ring F7 = Ring::prime_field(7);
        for (int i = 0; i < 10; ++i) {
            const UniPoly f = one_unit_poly(F7, 3, rng), g = one_unit_poly(F7, 2, rng), h = one_unit_poly(F7, 2, rng);
            if (resultant(f, g * h) != resultant(f, g) * resultant(f, h)) return false;
        }
        return true;
    });
    R.check("ring specs parse", [] {
        for (const char *s : {"Z", "Q", "Z/6", "F2", "F9", "F3^2", "Q(t)", "F5(t,u)", "F3(s,t)"}) parse_ring(s);
        return parse_ring("F9") == make_finite_field(3, 2) && parse_ring("F3^2") == parse_ring("F9") &&
               parse_ring("Q(t)") == Ring::function_field(Ring::rationals(), {"t"});
    });
    R.throws<ParseError>("F6 is rejected", [] { parse_ring("F6"); });
    R.check("expressions parse", [] {
        const Ring K = parse_ring("Q(s,t)");
        const Elem s = K.variable(0), t = K.variable(1);
        return parse_elem(K, "3/2*s^2 - t/(s+1)") == rat(K, 3, 2) * s * s - t / (s + K.one()) && parse_elem(K, "2(s+1)^-1") == K.from_int(2L) / (s + K.one());
    });
    R.check("polynomial text format", [] {
        const Ring F3 = Ring::prime_field(3);
        const SparsePoly f = parse_poly(F3, "2*x1^2*x2 + x3", default_coordinate_names(5));
        return f.degree() == 3 && f.terms().size() == 2;
    });
    R.check("extension generator satisfies its modulus", [] {
        const Ring F = make_finite_field(5, 3);
        const Elem a = F.generator();
        Elem v = F.zero();
        for (std::size_t i = 0; i < F.modulus_coeffs().size(); ++i) v += F.from_int(static_cast<long>(F.modulus_coeffs()[i])) * a.pow(static_cast<long>(i));
        return v.is_zero();
    });
    R.check("field axioms on samples", [&] {
        for (const Ring &k : {Q, Ring::prime_field(7), make_finite_field(2, 4), parse_ring("F5(t)")}) {
            for (int i = 0; i < 20; ++i) {
                const Elem a = random_elem(k, rng), b = random_elem(k, rng), c = random_elem(k, rng);
                if ((a + b) * c != a * c + b * c || (a * b) * c != a * (b * c)) return false;
                if (!a.is_zero() && a * a.inv() != k.one()) return false;
            }
        }
        return true;
    });
}

void suite_witt(Reporter &R, Rng &rng)
{
    const Ring Q = Ring::rationals();
    const Ring Qa = Ring::function_field(Q, {"a"});
    const Elem a = Qa.variable(0), z = Qa.zero();
    R.check("ghost of a Teichmueller vector", [&] { return ghost(wv(Qa, {a, z, z, z})) == std::vector<Elem>{a, a.pow(2L), a.pow(3L), a.pow(4L)}; });
    R.check("ghost of (0,a,0,0)", [&] { return ghost(wv(Qa, {z, a, z, z})) == std::vector<Elem>{z, 2 * a, z, 2 * a.pow(2L)}; });
    R.check("ghost of zero", [&] { return ghost(WittVector::zero(Qa, 4)) == std::vector<Elem>(4, z); });
    R.check("from_ghost of (a,a^2,a^3)", [&] { return from_ghost(Qa, {a, a.pow(2L), a.pow(3L)}) == wv(Qa, {a, z, z}); });
    R.check("from_ghost of (0,2a,0,2a^2)", [&] { return from_ghost(Qa, {z, 2 * a, z, 2 * a.pow(2L)}) == wv(Qa, {z, a, z, z}); });
    R.check("from_ghost of (1,1,1) over Q", [&] { return from_ghost(Q, {Q.one(), Q.one(), Q.one()}) == WittVector::one(Q, 3); });
    R.throws<DomainError>("from_ghost rejects torsion rings", [] { from_ghost(Ring::prime_field(2), {Ring::prime_field(2).one()}); });

    const Ring Z = Ring::integers();
    R.check("S_1, S_2, P_1, P_2 on integers", [&] {
        for (int i = 0; i < 20; ++i) {
            const WittVector u = random_witt(Z, 2, rng), v = random_witt(Z, 2, rng);
            const Elem a1 = u[1], a2 = u[2], b1 = v[1], b2 = v[2];
            if (witt_add_universal(u, v) != wv(Z, {a1 + b1, a2 + b2 - a1 * b1})) return false;
            if (witt_mul_universal(u, v) != wv(Z, {a1 * b1, a1 * a1 * b2 + a2 * b1 * b1 + 2 * a2 * b2})) return false;
        }
        return true;
    });
    R.check("S_n(a, 0) = a_n", [&] {
        const WittVector u = random_witt(Z, 8, rng);
        return witt_add_universal(u, WittVector::zero(Z, 8)) == u;
    });
    const Ring F2 = Ring::prime_field(2);
    R.check("[1] + [1] = (0,1) in W_2(F_2)", [&] { return witt_add(teichmueller(F2.one(), 2), teichmueller(F2.one(), 2)) == wv(F2, {F2.zero(), F2.one()}); });
    R.check("w + 0 = w", [&] {
        for (const Ring &k : {Q, Ring::integers_mod(6), make_finite_field(3, 2)}) {
            const WittVector w = random_witt(k, 6, rng);
            if (witt_add(w, WittVector::zero(k, 6)) != w) return false;
        }
        return true;
    });
    R.check("[a][b] = [ab] for m <= 8", [&] {
        for (std::size_t m = 1; m <= 8; ++m) {
            const Elem x = random_elem(Q, rng), y = random_elem(Q, rng);
            if (witt_mul(teichmueller(x, m), teichmueller(y, m)) != teichmueller(x * y, m)) return false;
        }
        return true;
    });
    R.check("[0] = 0 and [1] = 1", [&] { return teichmueller(Q.zero(), 5) == WittVector::zero(Q, 5) && teichmueller(Q.one(), 5) == WittVector::one(Q, 5); });
    R.check("ghost([a]) = (a,...,a^m)", [&] {
        const auto g = ghost(teichmueller(a, 6));
        for (std::size_t i = 0; i < 6; ++i) {
            if (g[i] != a.pow(static_cast<long>(i + 1))) return false;
        }
        return true;
    });
    R.check("V_1 = F_1 = id", [&] {
        const WittVector w = random_witt(Q, 5, rng);
        return verschiebung(1, w) == w && frobenius(1, w) == w;
    });
    R.check("V_2[a] from W_1 to W_3 is (0,a,0)", [&] { return verschiebung(2, teichmueller(a, 1)) == wv(Qa, {z, a, z}); });
    R.check("ghost(V_2[a]) in W_4 is (0,2a,0,2a^2)", [&] { return ghost(restrict_to(verschiebung(2, teichmueller(a, 2)), 4)) == std::vector<Elem>{z, 2 * a, z, 2 * a.pow(2L)}; });
    R.check("F_n[a] = [a^n]", [&] {
        for (unsigned n = 1; n <= 4; ++n) {
            if (frobenius(n, teichmueller(a, 3 * n + n - 1)) != teichmueller(a.pow(static_cast<long>(n)), 3)) return false;
        }
        return true;
    });
    R.check("F_2 V_2 [a] = 2a in W_1", [&] { return frobenius(2, verschiebung(2, teichmueller(a, 1))) == wv(Qa, {2 * a}); });
    R.check("Phi_{2,1} = a_1^2 + 2 a_2", [&] {
        for (int i = 0; i < 10; ++i) {
            const WittVector w = random_witt(Z, 3, rng);
            if (frobenius(2, w)[1] != w[1] * w[1] + 2 * w[2]) return false;
        }
        return true;
    });
    R.throws<DomainError>("F_2 rejects length 4", [&] { frobenius(2, WittVector::zero(Q, 4)); });
    R.check("restrict((a,b,c), 2) = (a,b)", [&] {
        const WittVector w = random_witt(Q, 3, rng);
        return restrict_to(w, 2) == wv(Q, {w[1], w[2]});
    });
    R.check("R F_n = F_n R^n and R^n V_n = V_n R", [&] {
        const Ring F5t = parse_ring("F5(t)");
        for (unsigned n = 1; n <= 3; ++n) {
            for (std::size_t m = 2; m <= 4; ++m) {
                const WittVector w = random_witt(F5t, n * m + n - 1, rng);
                if (restrict_to(frobenius(n, w), m - 1) != frobenius(n, restrict_to(w, n * (m - 1) + n - 1))) return false;
                const WittVector x = random_witt(F5t, m, rng);
                if (restrict_to(verschiebung(n, x), n * (m - 1) + n - 1) != verschiebung(n, restrict_to(x, m - 1))) return false;
            }
        }
        return true;
    });
    R.check("[a] <-> 1 - a t", [&] { return to_one_unit(teichmueller(a, 4)) == TruncSeries(Qa, {Qa.one(), -a, z, z, z}); });
    R.check("1 + t over Q, m = 3, is [-1]", [&] { return from_one_unit(TruncSeries(Q, {Q.one(), Q.one(), Q.zero(), Q.zero()})) == wv(Q, {Q.from_int(-1L), Q.zero(), Q.zero()}); });
    R.check("(1-at)(1-bt) has components (a+b, -ab, -ab(a+b))", [&] {
        const Ring K = Ring::function_field(Q, {"a", "b"});
        const Elem x = K.variable(0), y = K.variable(1);
        const TruncSeries f2 = to_one_unit(teichmueller(x, 2)) * to_one_unit(teichmueller(y, 2));
        const TruncSeries f3 = to_one_unit(teichmueller(x, 3)) * to_one_unit(teichmueller(y, 3));
        return from_one_unit(f2) == wv(K, {x + y, -(x * y)}) && from_one_unit(f3) == wv(K, {x + y, -(x * y), -(x * y) * (x + y)});
    });
    R.check("Tr [theta] from F_4 to F_2 is (1,1)", [&] {
        const Ring F4 = make_finite_field(2, 2);
        return witt_trace(teichmueller(F4.generator(), 2), F2) == wv(F2, {F2.one(), F2.one()});
    });
    R.check("Tr over a trivial extension is the identity", [&] {
        const Ring F9 = make_finite_field(3, 2);
        const WittVector w = random_witt(F9, 4, rng);
        return witt_trace(w, F9) == w;
    });
    R.check("Tr is additive on W_3(F_9) over F_3", [&] {
        const Ring F9 = make_finite_field(3, 2), F3 = Ring::prime_field(3);
        for (int i = 0; i < 10; ++i) {
            const WittVector u = random_witt(F9, 3, rng), v = random_witt(F9, 3, rng);
            if (witt_trace(witt_add(u, v), F3) != witt_add(witt_trace(u, F3), witt_trace(v, F3))) return false;
        }
        return true;
    });
    R.check("ring axioms on samples", [&] {
        for (const Ring &k : {Z, Q, Ring::integers_mod(6), F2, make_finite_field(3, 2), parse_ring("F5(t)")}) {
            for (int i = 0; i < 5; ++i) {
                const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 6));
                const WittVector u = random_witt(k, m, rng), v = random_witt(k, m, rng), w = random_witt(k, m, rng);
                if (witt_add(witt_add(u, v), w) != witt_add(u, witt_add(v, w))) return false;
                if (witt_mul(witt_mul(u, v), w) != witt_mul(u, witt_mul(v, w))) return false;
                if (witt_mul(u, witt_add(v, w)) != witt_add(witt_mul(u, v), witt_mul(u, w))) return false;
                if (witt_mul(u, WittVector::one(k, m)) != u || witt_add(u, witt_neg(u)) != WittVector::zero(k, m)) return false;
            }
        }
        return true;
    });
}

void suite_ptypical(Reporter &R, Rng &rng)
{
    const Ring Q = Ring::rationals();
    auto series = [&](std::vector<Rat> c) {
        std::vector<Elem> e;
        for (const auto &x : c) e.push_back(Q.from_rational(x));
        return TruncSeries(Q, std::move(e));
    };
    R.check("Artin-Hasse p=2 to order 2 is 1 - t", [&] { return artin_hasse(2, 2).series == series({1, -1, 0}); });
    R.check("Artin-Hasse p=3 to order 3 is 1 - t + t^2/2 - t^3/2", [&] { return artin_hasse(3, 3).series == series({1, -1, Rat(1, 2), Rat(-1, 2)}); });
    R.check("Artin-Hasse agrees with the Moebius product", [&] {
        for (std::uint64_t p : {2, 3, 5}) {
            if (artin_hasse(p, 30).series != series(mobius_product(p, 30))) return false;
        }
        return true;
    });
    R.check("epsilon(2,2) over Q is (1,0)", [&] { return epsilon(2, 2, Q) == wv(Q, {Q.one(), Q.zero()}); });
    R.check("epsilon is idempotent in W_{p^r}(F_p)", [] {
        for (std::uint64_t p : {2, 3}) {
            const Ring Fp = Ring::prime_field(p);
            for (std::size_t m = p; m <= p * p * p; m *= p) {
                const WittVector e = epsilon(p, m, Fp);
                if (witt_mul(e, e) != e) return false;
            }
        }
        return true;
    });
    R.check("epsilon projects W_4(F_2) onto the j=1 component", [&] {
        const Ring F2 = Ring::prime_field(2);
        for (int i = 0; i < 10; ++i) {
            const WittVector w = random_witt(F2, 4, rng);
            const PTypicalSplit s = p_typical_split(witt_mul(w, epsilon(2, 4, F2)), 2), t = p_typical_split(w, 2);
            for (const auto &[j, y] : s) {
                if (j == 1 ? y != t.at(1) : y != PTypicalWitt::zero(2, F2, y.level())) return false;
            }
        }
        return true;
    });
    R.check("n(1,2,5) = 2, n(3,2,5) = 0, n(5,2,5) = 0", [] { return n_of_j(1, 2, 5) == 2 && n_of_j(3, 2, 5) == 0 && n_of_j(5, 2, 5) == 0; });
    R.check("sum of n(j)+1 is m for m <= 200", [] {
        for (std::uint64_t p : {2, 3, 5}) {
            for (std::size_t m = 1; m <= 200; ++m) {
                std::size_t s = 0;
                for (auto j : split_indices(p, m)) s += n_of_j(j, p, m) + 1;
                if (s != m) return false;
            }
        }
        return true;
    });
    R.check("m=3, p=2 splits into j=1 of length 2 and j=3 of length 1", [&] {
        const PTypicalSplit s = p_typical_split(random_witt(Q, 3, rng), 2);
        return s.size() == 2 && s.at(1).components().size() == 2 && s.at(3).components().size() == 1;
    });
    R.check("split and join are inverse", [&] {
        for (const Ring &k : {Ring::prime_field(2), make_finite_field(3, 2), Q}) {
            const std::uint64_t p = k.char_p() ? k.char_p() : 3;
            for (int i = 0; i < 10; ++i) {
                const WittVector w = random_witt(k, static_cast<std::size_t>(uniform(rng, 1, 8)), rng);
                if (p_typical_join(p_typical_split(w, p), p) != w) return false;
            }
        }
        return true;
    });
    R.check("split is a ring homomorphism", [&] {
        for (const Ring &k : {Ring::prime_field(3), Q}) {
            for (int i = 0; i < 5; ++i) {
                const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 8));
                const WittVector u = random_witt(k, m, rng), v = random_witt(k, m, rng);
                const PTypicalSplit su = p_typical_split(u, 3), sv = p_typical_split(v, 3), sp = p_typical_split(witt_mul(u, v), 3), ss = p_typical_split(witt_add(u, v), 3);
                for (const auto &[j, y] : sp) {
                    if (y != ptypical_mul(su.at(j), sv.at(j)) || ss.at(j) != ptypical_add(su.at(j), sv.at(j))) return false;
                }
            }
        }
        return true;
    });
    R.check("p-typical ghost of (a,0) at p=3 is (a,a^3)", [] {
        const Ring K = parse_ring("Q(a)");
        const Elem a = K.variable(0);
        return ghost(ptypical_teichmueller(3, a, 1)) == std::vector<Elem>{a, a.pow(3L)};
    });
    R.check("FV = p over F_5", [&] {
        const Ring F5 = Ring::prime_field(5);
        for (int i = 0; i < 5; ++i) {
            std::vector<Elem> c;
            for (int k = 0; k < 3; ++k) c.push_back(random_elem(F5, rng));
            const PTypicalWitt y(5, F5, c);
            PTypicalWitt s = PTypicalWitt::zero(5, F5, y.level());
            for (int k = 0; k < 5; ++k) s = ptypical_add(s, y);
            if (ptypical_frobenius(ptypical_verschiebung(y)) != s) return false;
        }
        return true;
    });
    R.check("split(V_p w) is the p-typical V of split(w)", [&] {
        for (const Ring &k : {Ring::prime_field(2), Q}) {
            for (int i = 0; i < 5; ++i) {
                const WittVector w = random_witt(k, static_cast<std::size_t>(uniform(rng, 1, 4)), rng);
                const PTypicalSplit a = p_typical_split(verschiebung(2, w), 2), b = p_typical_split(w, 2);
                for (const auto &[j, y] : b) {
                    if (a.at(j) != ptypical_verschiebung(y)) return false;
                }
            }
        }
        return true;
    });
}

void suite_cycles(Reporter &R, Rng &rng)
{
    const Ring Q = Ring::rationals();
    const Ring K = param_field(Q, "s");
    const Elem s = K.variable(0), one = K.one();
    auto pt = [&](std::vector<long> c) { return P1Point{false, upoly(Q, std::move(c))}; };
    R.check("div(s) = [0] - [inf]", [&] {
        const P1Divisor d = divisor_on_P1(s);
        return d.size() == 2 && d[0].first == pt({0, 1}) && d[0].second == 1 && d[1].first.infinite && d[1].second == -1;
    });
    R.check("div(s^2/(1+s)) = 2[0] - [-1] - [inf]", [&] {
        const P1Divisor d = divisor_on_P1(s * s / (one + s));
        std::map<std::string, long> m;
        for (const auto &[P, k] : d) m[P.to_string()] = k;
        return d.size() == 3 && m[pt({0, 1}).to_string()] == 2 && m[pt({1, 1}).to_string()] == -1 && m[P1Point::at_infinity(Q).to_string()] == -1;
    });
    R.check("divisors have degree 0", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5), make_finite_field(3, 2)}) {
            const Ring L = param_field(k, "s");
            for (int i = 0; i < 10; ++i) {
                const Elem h = (random_nonzero(L, rng) * L.variable(0) + L.embed(random_constant(k, rng))) / (L.variable(0).pow(2L) + L.embed(random_nonzero(k, rng)));
                if (h.is_zero()) continue;
                long deg = 0;
                for (const auto &[P, m] : divisor_on_P1(h)) deg += m * static_cast<long>(P.degree());
                if (deg != 0) return false;
            }
        }
        return true;
    });
    R.throws<GoodPositionError>("x = s, y = s violates good position", [&] { faces(ParamCurve(Q, s, {s}, 2)); });
    const ParamCurve C(Q, s, {(one + s + s * s) / (one + s)}, 2);
    const Ring Lz = Ring::simple_ext(Q, upoly(Q, {1, 1, 1}), "z");
    const ClosedPoint zeta = make_point(Q, {Lz.generator()}), minus1 = make_point(Q, {Q.from_int(-1L)});
    R.check("faces of x = s, y = (1+s+s^2)/(1+s)", [&] {
        const auto F = faces(C);
        ZeroCycle z0(Q, 1), zinf(Q, 1);
        z0.add(zeta, 1);
        zinf.add(minus1, 1);
        return F.size() == 2 && F[0].cycle == z0 && F[1].cycle == zinf && F[0].cycle.degree() == 2;
    });
    R.check("constant y_2 has empty faces", [&] {
        const auto F = faces(ParamCurve(Q, s, {(one + s + s * s) / (one + s), K.from_int(2L)}, 2));
        return F.size() == 4 && F[2].cycle.is_zero() && F[3].cycle.is_zero();
    });
    R.check("boundary of the example is [-1] - [zeta]", [&] {
        ZeroCycle e(Q, 1);
        e.add(minus1, 1);
        e.add(zeta, -1);
        return boundary(C) == e;
    });
    R.check("all-constant y has zero boundary", [&] { return boundary(ParamCurve(Q, s, {K.from_int(2L), K.from_int(3L)}, 2)).is_zero(); });
    // the face formula with (-1)^1 gives div f - div g for the fy=g curve
    R.check("fy=g boundary is div f - div g", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5)}) {
            for (int i = 0; i < 10; ++i) {
                const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
                const UniPoly f = one_unit_poly(k, 2, rng);
                const UniPoly g = f + UniPoly::monomial(random_nonzero(k, rng), m);
                if (boundary(fy_equals_g(f, g, m)) != divisor_cycle(f) - divisor_cycle(g)) return false;
            }
        }
        return true;
    });
    const ParamCurve E = fy_equals_g(upoly(Q, {1, 1}), upoly(Q, {1, 1, 1}), 2);
    R.check("f=1+t, g=1+t+t^2 passes modulus 2", [&] { return check_modulus(E, 2).ok; });
    R.check("f=1+t, g=1+t+t^2 fails modulus 3 at [0] with 3 > 2", [&] {
        const ModulusCheck mc = check_modulus(E, 3);
        return !mc.ok && mc.witness && *mc.witness == pt({0, 1}) && mc.lhs == 3 && mc.rhs == 2;
    });
    R.check("y_i = 1 + x^(mn) u passes modulus m", [&] {
        for (int i = 0; i < 10; ++i) {
            const unsigned m = static_cast<unsigned>(uniform(rng, 2, 3));
            const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 2));
            const Elem x = s + K.from_int(uniform(rng, -3, 3));
            std::vector<Elem> y;
            for (std::size_t j = 0; j < n; ++j) y.push_back(one + x.pow(static_cast<long>(m * n)) * (s + K.from_int(uniform(rng, 1, 5))) * K.from_int(uniform(rng, 1, 4)));
            if (!check_modulus(ParamCurve(Q, x, y, m), m).ok) return false;
        }
        return true;
    });
    R.check("fy=g curves pass the modulus and good position", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5)}) {
            for (int i = 0; i < 15; ++i) {
                const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
                const ParamCurve D = random_fy_g(k, m, rng);
                if (!check_modulus(D, m).ok) return false;
                faces(D);
            }
        }
        return true;
    });
    R.check("zero and pole faces have equal degree when deg f = deg g", [&] {
        const Ring F5 = Ring::prime_field(5);
        for (int i = 0; i < 10; ++i) {
            const UniPoly f = one_unit_poly(F5, 3, rng);
            const UniPoly g = f + UniPoly::monomial(F5.from_int(static_cast<long>(uniform(rng, 1, 4))), 2);
            const auto F = faces(fy_equals_g(f, g, 2));
            if (F[0].cycle.degree() != F[1].cycle.degree()) return false;
        }
        return true;
    });
    R.check("faces commute with base change F_3 -> F_9", [&] {
        const Ring F3 = Ring::prime_field(3), F9 = make_finite_field(3, 2);
        for (int i = 0; i < 10; ++i) {
            const UniPoly f = one_unit_poly(F3, 3, rng);
            const UniPoly g = f + UniPoly::monomial(F3.one(), 2) * UniPoly(F3, {F3.one(), F3.one()});
            const auto a = faces(fy_equals_g(f, g, 2)), b = faces(fy_equals_g(f.change_ring(F9), g.change_ring(F9), 2));
            for (std::size_t j = 0; j < a.size(); ++j) {
                if (a[j].cycle.degree() != b[j].cycle.degree()) return false;
            }
        }
        return true;
    });
}

void suite_forms(Reporter &R, Rng &rng)
{
    const Ring Q = Ring::rationals();
    const Ring Kst = parse_ring("Q(s,t)");
    const Elem s = Kst.variable(0), t = Kst.variable(1);
    R.check("d of a constant is 0", [&] { return d(Kst.from_int(7L)).is_zero() && d(rat(Kst, 2, 3)).is_zero(); });
    R.check("dlog(st) = ds/s + dt/t", [&] { return dlog(s * t) == dlog(s) + dlog(t) && dlog(s) == d(s).scaled(s.inv()); });
    R.check("dlog a ^ dlog(1-a) = 0", [&] {
        const Ring Ka = parse_ring("Q(a)");
        const Elem a = Ka.variable(0);
        return wedge(dlog(a), dlog(Ka.one() - a)).is_zero() && wedge(dlog(s), dlog(Kst.one() - s)).is_zero();
    });
    R.check("d d = 0, Leibniz and anticommutation", [&] {
        for (int i = 0; i < 5; ++i) {
            const Elem a = random_elem(Kst, rng) / (random_elem(Kst, rng) + Kst.one() + s * s), b = random_elem(Kst, rng);
            if (!d(d(a)).is_zero() || d(a * b) != d(b).scaled(a) + d(a).scaled(b)) return false;
            if (wedge(d(a), d(b)) != -wedge(d(b), d(a))) return false;
        }
        return true;
    });
    const Ring K = param_field(Q, "s");
    const Elem u = K.variable(0);
    const Ring L = Ring::simple_ext(K, UniPoly(K, {-u, K.zero(), K.one()}), "r");
    const Elem r = L.generator();
    R.check("Tr (1/2) s^(-3/2) ds from Q(sqrt s) is 0", [&] { return trace_form(d(r).scaled(r.pow(-2L)), K).is_zero(); });
    R.check("trace over a trivial extension is the identity", [&] {
        const DiffForm w = d(u).scaled(u + K.one());
        return trace_form(w, K) == w;
    });
    R.check("projection formula Tr(c w) = Tr(c) w", [&] {
        for (int i = 0; i < 5; ++i) {
            const Elem c = L.embed(random_elem(K, rng)) + r * L.embed(random_elem(K, rng));
            const DiffForm w = d(u).scaled(random_nonzero(K, rng));
            DiffForm wl(L, 1);
            wl.add_term(1, L.embed(w.coefficient(1)));
            if (trace_form(wl.scaled(c), K) != w.scaled(field_trace(c, K))) return false;
        }
        return true;
    });
    R.check("ds/s has residues 1 at 0 and -1 at infinity", [&] {
        const RationalOneForm w{u.inv()};
        return residue(w, P1Point{false, UniPoly::x(Q)}) == Q.one() && residue(w, P1Point::at_infinity(Q)) == Q.from_int(-1L);
    });
    R.check("ds/(s^2-1) has residues 1/2, -1/2, 0", [&] {
        const RationalOneForm w{(u * u - K.one()).inv()};
        return residue(w, P1Point{false, upoly(Q, {-1, 1})}) == rat(Q, 1, 2) && residue(w, P1Point{false, upoly(Q, {1, 1})}) == rat(Q, -1, 2) &&
               residue(w, P1Point::at_infinity(Q)).is_zero();
    });
    R.check("residues sum to zero", [&] {
        for (const Ring &k : {Q, Ring::prime_field(7)}) {
            const Ring Ks = param_field(k, "s");
            const Elem x = Ks.variable(0);
            for (int i = 0; i < 20; ++i) {
                Elem den = Ks.one();
                for (long j = uniform(rng, 1, 3); j > 0; --j) den *= x * x * Ks.embed(random_constant(k, rng)) + x + Ks.embed(random_constant(k, rng));
                const Elem h = (Ks.embed(random_constant(k, rng)) * x.pow(uniform(rng, 0, 4)) + Ks.embed(random_constant(k, rng))) / den;
                Elem sum = k.zero();
                for (const auto &[P, v] : residues(RationalOneForm{h})) sum += v;
                if (!sum.is_zero()) return false;
            }
        }
        return true;
    });
    R.check("[x=2] evaluates to 1/2", [&] {
        ZeroCycle z(Q, 1);
        z.add(make_point(Q, {Q.from_int(2L)}), 1);
        return eval_cycle_mod2(z) == DiffForm::scalar(rat(Q, 1, 2));
    });
    R.check("(s,s) evaluates to s^-2 ds", [&] {
        ZeroCycle z(K, 2);
        z.add(make_point(K, {u, u}), 1);
        return eval_cycle_mod2(z) == d(u).scaled(u.pow(-2L));
    });
    R.check("(sqrt s, sqrt s) evaluates to 0", [&] {
        ZeroCycle z(K, 2);
        z.add(make_point(K, {r, r}), 1);
        return eval_cycle_mod2(z).is_zero();
    });
    R.check("{s} gives (1,s) and ds/s, and evaluation agrees", [&] {
        const MilnorImage im = milnor_dlog({u});
        ZeroCycle z(K, 2);
        z.add(make_point(K, {K.one(), u}), 1);
        return im.cycle == z && im.form == dlog(u) && eval_cycle_mod2(im.cycle) == im.form;
    });
    R.check("a constant symbol gives 0", [&] { return milnor_dlog({K.from_int(3L)}).form.is_zero(); });
    R.check("{s, 1-s} gives 0", [&] {
        const MilnorImage im = milnor_dlog({s, Kst.one() - s});
        return im.form.is_zero() && eval_cycle_mod2(im.cycle).is_zero();
    });
    R.check("dlog diagram commutes on random symbols", [&] {
        for (const Ring &k : {Kst, parse_ring("F5(s,t)")}) {
            for (int i = 0; i < 5; ++i) {
                std::vector<Elem> sym;
                for (long j = uniform(rng, 1, 2); j > 0; --j) {
                    Elem a = random_nonzero(k, rng);
                    while (a.is_one()) a = random_nonzero(k, rng);
                    sym.push_back(a);
                }
                const MilnorImage im = milnor_dlog(sym);
                if (eval_cycle_mod2(im.cycle) != im.form) return false;
            }
        }
        return true;
    });
    R.check("[x=-1] over Q, m-1 = 3, evaluates to (-1,0,0)", [&] {
        ZeroCycle z(Q, 1);
        z.add(make_point(Q, {Q.from_int(-1L)}), 1);
        return eval_cycle_general(z, 4) == wv(Q, {Q.from_int(-1L), Q.zero(), Q.zero()});
    });
    R.check("div f for split f is the Witt sum of [a_j]", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5), make_finite_field(3, 2)}) {
            for (int i = 0; i < 5; ++i) {
                UniPoly f = UniPoly::constant(k.one());
                WittVector sum = WittVector::zero(k, 4);
                for (long j = uniform(rng, 1, 3); j > 0; --j) {
                    const Elem a = random_nonzero(k, rng);
                    f = f * UniPoly(k, {k.one(), -a});
                    sum = witt_add(sum, teichmueller(a, 4));
                }
                if (eval_cycle_general(divisor_cycle(f), 5) != sum || sum != from_one_unit(TruncSeries::from_poly(f, 4))) return false;
            }
        }
        return true;
    });
    R.check("div(1+t+t^2) over Q, m-1 = 2, is from_one_unit(1+t+t^2)", [&] {
        const UniPoly f = upoly(Q, {1, 1, 1});
        const WittVector w = eval_cycle_general(divisor_cycle(f), 3);
        return w == from_one_unit(TruncSeries::from_poly(f, 2)) && w[1] == Q.from_int(-1L);
    });
    R.check("evaluation agrees with from_one_unit on random f", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5), make_finite_field(3, 2)}) {
            for (int i = 0; i < 5; ++i) {
                const UniPoly f = one_unit_poly(k, static_cast<int>(uniform(rng, 1, 4)), rng);
                const unsigned m = static_cast<unsigned>(uniform(rng, 2, 5));
                if (eval_cycle_general(divisor_cycle(f), m) != from_one_unit(TruncSeries::from_poly(f, m - 1))) return false;
            }
        }
        return true;
    });
    R.check("evaluation kills boundaries of fy=g curves", [&] {
        for (const Ring &k : {Q, Ring::prime_field(5)}) {
            for (int i = 0; i < 5; ++i) {
                const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
                if (eval_cycle_general(boundary(random_fy_g(k, m, rng)), m) != WittVector::zero(k, m - 1)) return false;
            }
        }
        return true;
    });
}

void suite_count(Reporter &R, Rng &rng)
{
    const Ring F2 = Ring::prime_field(2), F3 = Ring::prime_field(3);
    R.check("P^2 over F_2 has 7 points", [&] { return count_points(VarietySpec{F2, true, 2, {}}) == 7; });
    R.check("x^2+y^2-1 over F_3 has 4 points", [&] { return count_points(VarietySpec{F3, false, 2, {parse_poly(F3, "x^2+y^2-1", {"x", "y"})}}) == 4; });
    const VarietySpec fermat{F2, true, 3, {parse_poly(F2, "x^3+y^3+z^3+w^3", default_coordinate_names(4))}};
    R.check("Fermat cubic over F_2 has 7 points", [&] { return count_points(fermat) == 7; });
    R.check("|P^n(F_q)| examples", [] { return proj_space_count(0, 7) == 1 && proj_space_count(2, 2) == 7 && proj_space_count(3, 3) == 40; });
    R.check("|P^n(F_q)| agrees with enumeration for n <= 3, q <= 9", [] {
        for (unsigned n = 0; n <= 3; ++n) {
            for (const char *f : {"F2", "F3", "F4", "F5", "F7", "F8", "F9"}) {
                const Ring k = parse_ring(f);
                if (Int(static_cast<unsigned long>(count_points(VarietySpec{k, true, n, {}}))) != proj_space_count(n, k.order())) return false;
            }
        }
        return true;
    });
    R.check("Ax-Katz levels", [] { return axkatz_level(3, {3}) == 1 && axkatz_level(3, {2, 2}) == 0 && axkatz_level(5, {2, 1}) == 2; });
    R.check("Fermat cubic: 7 = 7 mod 2 at kappa 1", [&] {
        const auto v = check_congruence(fermat);
        return v.kappa == 1 && v.pass && v.ax_pass;
    });
    R.check("degree-2 hypersurfaces in P^4 over F_3 count to 121 mod 9", [&] {
        const auto names = default_coordinate_names(5);
        for (int i = 0; i < 2; ++i) {
            SparsePoly f(F3, 5);
            while (f.is_zero()) {
                for (std::size_t a = 0; a < 5; ++a) {
                    for (std::size_t b = a; b < 5; ++b) {
                        SparsePoly::Exps e(5, 0);
                        ++e[a];
                        ++e[b];
                        f.add_term(e, F3.from_int(uniform(rng, 0, 2)));
                    }
                }
            }
            const auto v = check_congruence(VarietySpec{F3, true, 4, {f}});
            if (v.kappa != 2 || v.lhs != 121 % 9 || !v.pass) return false;
        }
        return true;
    });
    R.check("kappa 0 always passes", [&] { return check_congruence(fermat, 0u).pass; });
    R.throws<DomainError>("inhomogeneous projective equations are rejected", [&] { count_points(VarietySpec{F3, true, 2, {parse_poly(F3, "x^2+y", {"x", "y", "z"})}}); });
    R.throws<BudgetError>("budget overruns are reported", [&] { count_points(VarietySpec{F3, true, 4, {}}, 1, CountOptions{100, 1, 0}); });
    R.check("y^2 = x^3 - x over F_5: N_1 = 8, a_5 = -2, N_2 = 32", [] {
        const auto e = elliptic_frobenius(-1, 0, 5, 2);
        return e.enumerated[0] == 8 && e.a_p == -2 && e.predicted[1] == 32 && e.enumerated[1] == 32 && e.tower_matches;
    });
    R.check("Hasse bound on random curves", [&] {
        for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
            for (int i = 0; i < 2; ++i) {
                long a, b;
                do {
                    a = uniform(rng, 0, static_cast<long>(p) - 1);
                    b = uniform(rng, 0, static_cast<long>(p) - 1);
                } while ((4 * a * a * a + 27 * b * b) % static_cast<long>(p) == 0);
                if (!elliptic_frobenius(a, b, p, 1).hasse) return false;
            }
        }
        return true;
    });
    R.check("counts do not depend on chunking", [&] {
        const VarietySpec X{F3, true, 3, {parse_poly(F3, "x^2*y + z^3 - w^3 + x*y*z", default_coordinate_names(4))}};
        const auto n = count_points(X, 2, CountOptions{default_budget(), 1, 1});
        return count_points(X, 2, CountOptions{default_budget(), 4, 17}) == n && count_points(X, 2, CountOptions{default_budget(), 2, 3}) == n;
    });
}

void suite_cli(Reporter &R, Rng &)
{
    auto run = [](std::vector<std::string> args, std::string &out) {
        std::ostringstream o, e;
        const int code = dispatch(args, o, e);
        out = o.str();
        return code;
    };
    // [1] + [1] has ghost (2,2,2): a_3 = (2 - 2^3) / 3 = -2.
    R.check("witt add [1] + [1] gives [2,-1] at length 2 and [2,-1,-2] at length 3", [&] {
        std::string o2, o3;
        return run({"witt", "add", "--ring", "Q", "--len", "2", "[1,0]", "[1,0]", "--format", "text"}, o2) == 0 && o2 == "[2,-1]\n" &&
               run({"witt", "add", "--ring", "Q", "--len", "3", "[1,0,0]", "[1,0,0]", "--format", "text"}, o3) == 0 && o3 == "[2,-1,-2]\n";
    });
    R.check("count --field F2 --projective 2 reports N = [7]", [&] {
        std::string out;
        return run({"count", "--field", "F2", "--projective", "2"}, out) == 0 && out.find("\"result\":{\"N\":[7]}") != std::string::npos && out.find("\"schema\":1") != std::string::npos;
    });
    R.check("unknown subcommands exit with 2", [&] {
        std::string out;
        return run({"frobnicate"}, out) == 2;
    });
    R.check("domain errors exit with 1", [&] {
        std::string out;
        return run({"witt", "frob", "2", "[1,0,0,0]"}, out) == 1;
    });
    R.check("identical inputs give identical output", [&] {
        std::string a, b;
        run({"ptypical", "split", "--p", "2", "--ring", "F4", "[1,a,0,1,a]"}, a);
        run({"ptypical", "split", "--p", "2", "--ring", "F4", "[1,a,0,1,a]"}, b);
        return !a.empty() && a == b;
    });
}

const std::map<std::string, void (*)(Reporter &, Rng &)> &suites()
{
    static const std::map<std::string, void (*)(Reporter &, Rng &)> s{
        {"algebra", suite_algebra}, {"witt", suite_witt}, {"ptypical", suite_ptypical}, {"cycles", suite_cycles}, {"forms", suite_forms}, {"count", suite_count}, {"cli", suite_cli},
    };
    return s;
}

} // namespace

bool SuiteResult::passed() const
{
    for (const auto &c : cases) {
        if (!c.pass) return false;
    }
    return true;
}

const std::vector<std::string> &corpus_suites()
{
    static const std::vector<std::string> names{"algebra", "witt", "ptypical", "cycles", "forms", "count", "cli"};
    return names;
}

SuiteResult run_suite(const std::string &name, std::uint64_t seed)
{
    SuiteResult r;
    r.name = name;
    r.seed = seed;
    const auto it = suites().find(name);
    if (it == suites().end()) throw DomainError("unknown corpus suite '" + name + "'");
    Rng rng(seed);
    Reporter rep(r);
    it->second(rep, rng);
    return r;
}

} // namespace wittkit::cli

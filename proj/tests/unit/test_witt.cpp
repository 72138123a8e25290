#include <doctest.h>

#include <wittkit/error.hpp>
#include <wittkit/witt.hpp>

#include "../support/gen.hpp"

using namespace wittkit;
using namespace wittkit::testgen;

namespace
{

WittVector wv(const Ring &r, std::vector<long> c)
{
    std::vector<Elem> e;
    for (long x : c) e.push_back(r.from_int(x));
    return WittVector(r, e);
}

std::vector<Ring> sample_rings()
{
    return {Ring::integers(), Ring::rationals(), Ring::integers_mod(6), Ring::prime_field(2), make_finite_field(3, 2),
            Ring::function_field(Ring::prime_field(5), {"t"})};
}

} // namespace

TEST_CASE("universal polynomials S_2, P_2 and Phi_{2,1}")
{
    Rng rng(1);
    const Ring Z = Ring::integers();
    for (int k = 0; k < 20; ++k) {
        WittVector a = random_witt(Z, 2, rng), b = random_witt(Z, 2, rng);
        WittVector s = witt_add(a, b), p = witt_mul(a, b);
        CHECK(s[1] == a[1] + b[1]);
        CHECK(s[2] == a[2] + b[2] - a[1] * b[1]);
        CHECK(p[1] == a[1] * b[1]);
        CHECK(p[2] == a[1] * a[1] * b[2] + a[2] * b[1] * b[1] + Z.from_int(2) * a[2] * b[2]);
        WittVector w = random_witt(Z, 3, rng);
        CHECK(frobenius(2, w)[1] == w[1] * w[1] + Z.from_int(2) * w[2]);
        // S_n(a, 0) = a_n
        CHECK(witt_add(a, WittVector::zero(Z, 2)) == a);
    }
    CHECK(universal_polys(12).S.integral());
    CHECK(universal_polys(12).P.integral());
}

TEST_CASE("Teichmueller sum and product")
{
    const Ring F2 = Ring::prime_field(2);
    CHECK(witt_add(teichmueller(F2.one(), 2), teichmueller(F2.one(), 2)) == wv(F2, {0, 1}));
    Rng rng(2);
    for (const Ring &R : sample_rings()) {
        for (std::size_t m = 1; m <= 8; ++m) {
            Elem a = random_elem(R, rng), b = random_elem(R, rng);
            CHECK(witt_mul(teichmueller(a, m), teichmueller(b, m)) == teichmueller(a * b, m));
        }
        const WittVector w = random_witt(R, 5, rng);
        CHECK(witt_mul(WittVector::one(R, 5), w) == w);
    }
    const Ring Q = Ring::rationals();
    CHECK(teichmueller(Q.zero(), 4) == WittVector::zero(Q, 4));
}

TEST_CASE("ghost examples")
{
    const Ring Qa = Ring::function_field(Ring::rationals(), {"a"});
    const Elem a = Qa.variable(0);
    auto g = ghost(teichmueller(a, 4));
    CHECK(g[0] == a);
    CHECK(g[3] == a.pow(4L));
    WittVector v(Qa, {Qa.zero(), a, Qa.zero(), Qa.zero()});
    g = ghost(v);
    CHECK(g == std::vector<Elem>{Qa.zero(), 2 * a, Qa.zero(), 2 * a * a});
    CHECK(from_ghost(Qa, g) == v);
    CHECK(from_ghost(Qa, {a, a * a, a.pow(3L)}) == teichmueller(a, 3));
    const Ring Q = Ring::rationals();
    CHECK(from_ghost(Q, {Q.one(), Q.one(), Q.one()}) == wv(Q, {1, 0, 0}));
    CHECK(ghost(WittVector::zero(Q, 3)) == std::vector<Elem>(3, Q.zero()));
    const Ring Z = Ring::integers();
    CHECK_THROWS_AS(from_ghost(Z, {Z.from_int(1), Z.from_int(2)}), DomainError);
    CHECK_THROWS_AS(from_ghost(Ring::prime_field(3), {Ring::prime_field(3).one()}), DomainError);
}

TEST_CASE("Verschiebung, Frobenius, restriction examples")
{
    const Ring Qa = Ring::function_field(Ring::rationals(), {"a"});
    const Elem a = Qa.variable(0);
    CHECK(verschiebung(2, teichmueller(a, 1)) == WittVector(Qa, {Qa.zero(), a, Qa.zero()}));
    WittVector v2 = verschiebung(2, teichmueller(a, 2));
    auto g = ghost(restrict_to(v2, 4));
    CHECK(g == std::vector<Elem>{Qa.zero(), 2 * a, Qa.zero(), 2 * a * a});
    CHECK(verschiebung(1, teichmueller(a, 3)) == teichmueller(a, 3));
    CHECK(frobenius(1, teichmueller(a, 3)) == teichmueller(a, 3));
    for (unsigned n = 1; n <= 4; ++n) CHECK(frobenius(n, teichmueller(a, 2 * n + n - 1)) == teichmueller(a.pow(static_cast<long>(n)), 2));
    const WittVector fv = frobenius(2, verschiebung(2, teichmueller(a, 1)));
    CHECK(fv == WittVector(Qa, {2 * a}));
    CHECK_THROWS_AS(frobenius(2, teichmueller(a, 4)), DomainError);
    CHECK(restrict_to(WittVector(Qa, {a, a + Qa.one(), a * a}), 2) == WittVector(Qa, {a, a + Qa.one()}));
    CHECK_THROWS_AS(restrict_to(teichmueller(a, 2), 3), DomainError);
}

TEST_CASE("1-units")
{
    const Ring Q = Ring::rationals();
    TruncSeries f(Q, {Q.one(), Q.one(), Q.zero(), Q.zero()});
    CHECK(from_one_unit(f) == wv(Q, {-1, 0, 0}));
    const Ring Qab = Ring::function_field(Q, {"a", "b"});
    const Elem a = Qab.variable(0), b = Qab.variable(1);
    TruncSeries g(Qab, {Qab.one(), -(a + b), a * b, Qab.zero()});
    // ghost_3 = a^3 + b^3 forces the third component
    CHECK(from_one_unit(g) == WittVector(Qab, {a + b, -(a * b), -(a * a * b) - a * b * b}));
    CHECK(to_one_unit(teichmueller(a, 3)) == TruncSeries(Qab, {Qab.one(), -a, Qab.zero(), Qab.zero()}));
    CHECK_THROWS_AS(from_one_unit(TruncSeries(Q, {Q.from_int(2), Q.one()})), DomainError);
}

TEST_CASE("Witt trace")
{
    const Ring F4 = make_finite_field(2, 2), F2 = Ring::prime_field(2);
    CHECK(witt_trace(teichmueller(F4.generator(), 2), F2) == wv(F2, {1, 1}));
    Rng rng(3);
    const Ring F9 = make_finite_field(3, 2), F3 = Ring::prime_field(3);
    for (int k = 0; k < 30; ++k) {
        WittVector u = random_witt(F9, 3, rng), v = random_witt(F9, 3, rng);
        CHECK(witt_trace(witt_add(u, v), F3) == witt_add(witt_trace(u, F3), witt_trace(v, F3)));
        WittVector w = random_witt(F3, 3, rng);
        CHECK(witt_trace(w, F3) == w);
    }
    // Teichmueller input: sum of conjugate Teichmuellers
    for (int k = 0; k < 10; ++k) {
        Elem x = random_elem(F9, rng);
        WittVector lhs = witt_trace(teichmueller(x, 4), F3);
        WittVector rhs = witt_add(teichmueller(x, 4), teichmueller(x.pow(3L), 4));
        // rhs lives over F9 with components in F3
        std::vector<Elem> c;
        for (const auto &e : rhs.components()) {
            Int v;
            REQUIRE(e.integral_value(v));
            c.push_back(F3.from_int(v));
        }
        CHECK(lhs == WittVector(F3, c));
    }
    // over a simple extension Q(s)(θ), θ^2 = s
    const Ring Qs = Ring::function_field(Ring::rationals(), {"s"});
    const Elem s = Qs.variable(0);
    const Ring L = Ring::simple_ext(Qs, UniPoly(Qs, {-s, Qs.zero(), Qs.one()}), "th");
    const Elem th = L.generator();
    // (1 - θ t)(1 + θ t) = 1 - s t^2
    CHECK(witt_trace(teichmueller(th, 3), Qs) == WittVector(Qs, {Qs.zero(), s, Qs.zero()}));
}

TEST_CASE("routes agree and ring axioms hold on small samples")
{
    Rng rng(4);
    for (const Ring &R : sample_rings()) {
        for (int k = 0; k < 15; ++k) {
            const std::size_t m = static_cast<std::size_t>(uniform(rng, 1, 8));
            WittVector u = random_witt(R, m, rng), v = random_witt(R, m, rng), w = random_witt(R, m, rng);
            CHECK(witt_add_universal(u, v) == witt_add_series(u, v));
            CHECK(witt_mul_universal(u, v) == witt_mul_series(u, v));
            CHECK(witt_mul(u, witt_add(v, w)) == witt_add(witt_mul(u, v), witt_mul(u, w)));
            CHECK(witt_add(u, witt_neg(u)) == WittVector::zero(R, m));
            const unsigned n = static_cast<unsigned>(uniform(rng, 1, 3));
            WittVector big = random_witt(R, n * m + n - 1, rng);
            CHECK(frobenius_universal(n, big) == frobenius_series(n, big));
        }
    }
}

TEST_CASE("ghost side agrees over Q beyond the polynomial limit")
{
    Rng rng(5);
    const Ring Q = Ring::rationals();
    for (std::size_t m : {3, 12, 20, 30}) {
        WittVector u = random_witt(Q, m, rng), v = random_witt(Q, m, rng);
        auto gu = ghost(u), gv = ghost(v);
        std::vector<Elem> gs, gp;
        for (std::size_t i = 0; i < m; ++i) {
            gs.push_back(gu[i] + gv[i]);
            gp.push_back(gu[i] * gv[i]);
        }
        CHECK(witt_add(u, v) == from_ghost(Q, gs));
        CHECK(witt_mul(u, v) == from_ghost(Q, gp));
        WittVector big = random_witt(Q, 3 * m + 2, rng);
        auto gb = ghost(big);
        std::vector<Elem> gf;
        for (std::size_t i = 1; i <= m; ++i) gf.push_back(gb[3 * i - 1]);
        CHECK(frobenius(3, big) == from_ghost(Q, gf));
    }
}

#include <doctest.h>

#include <wittkit/error.hpp>
#include <wittkit/forms.hpp>
#include <wittkit/linalg.hpp>

#include "../support/curves.hpp"

using namespace wittkit;
using namespace wittkit::testgen;

namespace
{

UniPoly poly(const Ring &k, std::vector<long> c)
{
    std::vector<Elem> e;
    for (long v : c) e.push_back(k.from_int(v));
    return UniPoly(k, std::move(e));
}

Elem half(const Ring &k) { return k.from_int(2L).inv(); }

// random element of Q(s,t) or F_p(s,t) that is neither 0 nor 1
Elem random_symbol_entry(const Ring &K, Rng &rng)
{
    while (true) {
        Elem a = random_elem(K, rng);
        if (!a.is_zero() && !a.is_one()) return a;
    }
}

} // namespace

TEST_CASE("d, dlog, wedge")
{
    const Ring Q = Ring::rationals();
    const Ring K = Ring::function_field(Q, {"s", "t"});
    const Elem s = K.variable(0), t = K.variable(1);
    CHECK(d(K.from_int(7L)).is_zero());
    CHECK(d(K.from_rational(Rat(3, 5))).is_zero());

    DiffForm ds(K, 1), dt(K, 1);
    ds.add_term(1, K.one());
    dt.add_term(2, K.one());
    CHECK(d(s) == ds);
    CHECK(dlog(s * t) == ds.scaled(s.inv()) + dt.scaled(t.inv()));
    CHECK(wedge(ds, dt) == -wedge(dt, ds));
    CHECK(wedge(ds, ds).is_zero());
    CHECK_THROWS_AS(dlog(K.zero()), DomainError);
    CHECK(wedge(dlog(s), dlog(K.one() - s)).is_zero());

    const Ring Qa = Ring::function_field(Q, {"a"});
    const Elem a = Qa.variable(0);
    CHECK(wedge(dlog(a), dlog(Qa.one() - a)).is_zero());
    CHECK(wedge(dlog(a), dlog(Qa.one() - a)).degree() == 2);

    Rng rng(31);
    for (const Ring &k : {Q, Ring::prime_field(5)}) {
        const Ring R3 = Ring::function_field(k, {"s", "t", "u"});
        for (int i = 0; i < 20; ++i) {
            const Elem f = random_elem(R3, rng), g = random_elem(R3, rng);
            CHECK(d(d(f)).is_zero());
            CHECK(d(f * g) == d(g).scaled(f) + d(f).scaled(g));
            CHECK(wedge(d(f), d(g)) == -wedge(d(g), d(f)));
        }
        const Ring R = Ring::function_field(k, {"s", "t"});
        for (int i = 0; i < 30; ++i) {
            const Elem f = random_elem(R, rng), g = random_elem(R, rng);
            const DiffForm w = d(f).scaled(g), eta = d(random_elem(R, rng));
            CHECK(d(d(w)).is_zero());
            // graded commutativity: 1-forms anticommute, 0-forms commute
            CHECK(wedge(w, eta) == -wedge(eta, w));
            CHECK(wedge(DiffForm::scalar(g), eta) == wedge(eta, DiffForm::scalar(g)));
            CHECK(wedge(wedge(DiffForm::scalar(f), w), eta) == wedge(DiffForm::scalar(f), wedge(w, eta)));
            // d(f w) = df ^ w + f dw
            CHECK(d(w.scaled(f)) == wedge(d(f), w) + d(w).scaled(f));
            CHECK(d(wedge(w, eta)) == wedge(d(w), eta) - wedge(w, d(eta)));
        }
    }
}

TEST_CASE("forms over a simple extension")
{
    const Ring Q = Ring::rationals();
    const Ring K = Ring::function_field(Q, {"s"});
    const Elem s = K.variable(0);
    // L = Q(s)(r), r^2 = s
    const Ring L = Ring::simple_ext(K, UniPoly(K, {-s, K.zero(), K.one()}), "r");
    const Elem r = L.generator();
    // 2 r dr = ds
    CHECK(partial(r, 0) == (L.from_int(2L) * r).inv());
    CHECK(d(r * r) == d(L.embed(s)));
    // Tr((1/2) s^(-3/2) ds) = 0
    const DiffForm w = d(r).scaled(L.embed(s).inv());
    CHECK(w.coefficient(1) == half(L) * r * L.embed(s).pow(-2L));
    CHECK(trace_form(w, K).is_zero());
    // trivial extension is the identity
    CHECK(trace_form(d(s), K) == d(s));
    // projection formula
    Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const Elem c = random_elem(L, rng);
        const DiffForm om = d(random_elem(K, rng));
        DiffForm lifted(L, 1);
        for (const auto &[m, v] : om.terms()) lifted.add_term(m, v);
        CHECK(trace_form(lifted.scaled(c), K) == om.scaled(field_trace(c, K)));
        const Elem e = random_elem(L, rng);
        CHECK(d(c * e) == d(e).scaled(c) + d(c).scaled(e));
    }
    const Ring F3t = Ring::function_field(Ring::prime_field(3), {"t"});
    const Elem tt = F3t.variable(0);
    const Ring Linsep = Ring::simple_ext(F3t, UniPoly(F3t, {-tt, F3t.zero(), F3t.zero(), F3t.one()}), "r");
    CHECK_THROWS_AS(trace_form(DiffForm::scalar(Linsep.generator()), F3t), DomainError);
}

TEST_CASE("residues on P^1")
{
    const Ring Q = Ring::rationals();
    const Ring K = param_field(Q, "s");
    const Elem s = K.variable(0);
    const P1Point zero{false, poly(Q, {0, 1})}, one{false, poly(Q, {-1, 1})}, minus_one{false, poly(Q, {1, 1})};
    const P1Point inf = P1Point::at_infinity(Q);
    const RationalOneForm w1{s.inv()};
    CHECK(residue(w1, zero) == Q.one());
    CHECK(residue(w1, inf) == Q.from_int(-1L));
    const RationalOneForm w2{(s * s - K.one()).inv()};
    CHECK(residue(w2, one) == half(Q));
    CHECK(residue(w2, minus_one) == -half(Q));
    CHECK(residue(w2, inf).is_zero());
    CHECK(residue(w2, zero).is_zero());
    // ds / (s^2 + 1): a degree two pole with zero trace residue; s ds / (s^2 + 1) has trace 1
    const P1Point i2{false, poly(Q, {1, 0, 1})};
    CHECK(residue(RationalOneForm{(s * s + K.one()).inv()}, i2).is_zero());
    CHECK(residue(RationalOneForm{s / (s * s + K.one())}, i2) == Q.one());
    // higher order pole: d(1/s) has no residue, 1/s^2 + 1/s does
    CHECK(residue(RationalOneForm{s.pow(-2L)}, zero).is_zero());
    CHECK(residue(RationalOneForm{s.pow(-2L) + s.inv()}, zero) == Q.one());
    // s ds has a pole at infinity of order 3 and no residue; s^2/(s+1) has residue -1 there
    CHECK(residue(RationalOneForm{s}, inf).is_zero());
    CHECK(residue(RationalOneForm{s * s / (s + K.one())}, inf) == Q.from_int(-1L));

    Rng rng(33);
    for (const Ring &k : {Q, Ring::prime_field(7), make_finite_field(3, 2)}) {
        const Ring Ks = param_field(k, "s");
        for (int i = 0; i < 60; ++i) {
            const UniPoly a = random_poly(k, static_cast<int>(uniform(rng, 0, 5)), rng);
            const UniPoly b = random_poly(k, static_cast<int>(uniform(rng, 1, 5)), rng);
            if (a.is_zero() || b.is_zero()) continue;
            Elem total = k.zero();
            for (const auto &[P, r] : residues(RationalOneForm{from_univariate(Ks, a, b)})) total += r;
            CHECK(total.is_zero());
        }
    }
}

TEST_CASE("cycle evaluation, modulus 2")
{
    const Ring Q = Ring::rationals();
    {
        ZeroCycle z(Q, 1);
        z.add(make_point(Q, {Q.from_int(2L)}), 1);
        CHECK(eval_cycle_mod2(z) == DiffForm::scalar(half(Q)));
    }
    const Ring K = Ring::function_field(Q, {"s"});
    const Elem s = K.variable(0);
    {
        ZeroCycle z(K, 2);
        z.add(make_point(K, {s, s}), 1);
        CHECK(eval_cycle_mod2(z) == d(s).scaled(s.pow(-2L)));
    }
    {
        const Ring L = Ring::simple_ext(K, UniPoly(K, {-s, K.zero(), K.one()}), "r");
        const Elem r = L.generator();
        ZeroCycle z(K, 2);
        z.add(make_point(K, {r, r}), 1);
        CHECK(eval_cycle_mod2(z).is_zero());
        // (r, 1 + r): trace of (1/r) dr/(1+r)
        ZeroCycle z2(K, 2);
        z2.add(make_point(K, {r, L.one() + r}), 1);
        const Elem c = (r * (L.one() + r)).inv() * partial(r, 0);
        CHECK(eval_cycle_mod2(z2) == d(s).scaled(field_trace(c, K)));
    }
    // finite constant field, n = 2: forms vanish
    const Ring F5 = Ring::prime_field(5);
    ZeroCycle z(F5, 2);
    z.add(make_point(F5, {F5.from_int(2L), F5.from_int(3L)}), 1);
    CHECK(eval_cycle_mod2(z).is_zero());
}

TEST_CASE("dlog of Milnor symbols")
{
    const Ring Q = Ring::rationals();
    const Ring K = Ring::function_field(Q, {"s"});
    const Elem s = K.variable(0);
    {
        const MilnorImage m = milnor_dlog({s});
        CHECK(m.form == dlog(s));
        CHECK(eval_cycle_mod2(m.cycle) == m.form);
        REQUIRE(m.cycle.terms().size() == 1);
        CHECK(m.cycle.terms().begin()->first.coords() == std::vector<Elem>{K.one(), s});
    }
    CHECK(milnor_dlog({K.from_int(3L)}).form.is_zero());
    CHECK(milnor_dlog({s, K.one() - s}).form.is_zero());
    CHECK(eval_cycle_mod2(milnor_dlog({s, K.one() - s}).cycle).is_zero());
    CHECK_THROWS_AS(milnor_dlog({K.one()}), DomainError);
    CHECK_THROWS_AS(milnor_dlog({K.zero()}), DomainError);

    Rng rng(34);
    for (const Ring &k : {Q, Ring::prime_field(5)}) {
        const Ring R = Ring::function_field(k, {"s", "t"});
        for (int i = 0; i < 20; ++i) {
            std::vector<Elem> sym;
            const long n = uniform(rng, 1, 3);
            for (long j = 0; j < n; ++j) sym.push_back(random_symbol_entry(R, rng));
            const MilnorImage m = milnor_dlog(sym);
            CHECK(eval_cycle_mod2(m.cycle) == m.form);
        }
    }
}

TEST_CASE("Witt-valued evaluation for n = 1")
{
    const Ring Q = Ring::rationals();
    {
        ZeroCycle z(Q, 1);
        z.add(make_point(Q, {Q.from_int(-1L)}), 1);
        CHECK(eval_cycle_general(z, 4) == WittVector(Q, {Q.from_int(-1L), Q.zero(), Q.zero()}));
    }
    {
        const UniPoly f = poly(Q, {1, 1, 1});
        const WittVector w = eval_cycle_general(divisor_cycle(f), 3);
        CHECK(w == from_one_unit(TruncSeries::from_poly(f, 2)));
        CHECK(w[1] == Q.from_int(-1L));
    }
    Rng rng(35);
    for (const Ring &k : {Q, Ring::prime_field(5), make_finite_field(3, 2)}) {
        for (int i = 0; i < 15; ++i) {
            const unsigned m = static_cast<unsigned>(uniform(rng, 2, 7));
            std::vector<Elem> c{k.one()};
            const long deg = uniform(rng, 1, 5);
            for (long j = 1; j <= deg; ++j) c.push_back(random_constant(k, rng));
            if (c.back().is_zero()) c.back() = k.one();
            const UniPoly f(k, c);
            CHECK(eval_cycle_general(divisor_cycle(f), m) == from_one_unit(TruncSeries::from_poly(f, m - 1)));
            // boundary of fy = g with g = f mod t^m evaluates to zero
            const UniPoly g = f + UniPoly::monomial(random_nonzero(k, rng), m);
            CHECK(eval_cycle_general(boundary(fy_equals_g(f, g, m)), m) == WittVector::zero(k, m - 1));
        }
        // split polynomials: the sum of Teichmueller lifts
        const Elem a = random_nonzero(k, rng), b = random_nonzero(k, rng);
        const UniPoly f = poly(k, {1}) * UniPoly(k, {k.one(), -a}) * UniPoly(k, {k.one(), -b});
        CHECK(eval_cycle_general(divisor_cycle(f), 5) == witt_add(teichmueller(a, 4), teichmueller(b, 4)));
    }
    ZeroCycle z2(Q, 2);
    CHECK_THROWS_AS(eval_cycle_general(z2, 3), DomainError);
    CHECK_THROWS_AS(eval_cycle_general(ZeroCycle(Q, 1), 1), DomainError);
}

TEST_CASE("evaluation kills boundaries")
{
    Rng rng(36);
    for (const Ring &k : {Ring::rationals(), Ring::prime_field(5), make_finite_field(3, 2)}) {
        for (unsigned m = 2; m <= 4; ++m) {
            for (int i = 0; i < 5; ++i) {
                const ParamCurve C = random_fy_g(k, m, rng);
                CHECK(eval_cycle_general(boundary(C), m) == WittVector::zero(k, m - 1));
                if (m == 2) CHECK(eval_cycle_mod2(boundary(C)).is_zero());
            }
        }
    }
    const Ring Qs = Ring::function_field(Ring::rationals(), {"s"});
    for (std::size_t n = 1; n <= 3; ++n) {
        int done = 0, tries = 0;
        while (done < 4 && tries < 200) {
            ++tries;
            const auto C = random_curve(Qs, n, 2, rng);
            if (!C) continue;
            const ZeroCycle z = boundary(*C);
            CHECK(eval_cycle_mod2(z).is_zero());
            ++done;
        }
        CHECK(done == 4);
    }
}

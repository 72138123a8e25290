#include <doctest.h>

#include <wittkit/cycles.hpp>
#include <wittkit/error.hpp>

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

long face_degree(const Face &f) { return f.cycle.degree(); }

} // namespace

TEST_CASE("divisors on P^1")
{
    const Ring Q = Ring::rationals();
    const Ring K = param_field(Q, "s");
    const Elem s = K.variable(0);
    {
        const auto D = divisor_on_P1(s);
        REQUIRE(D.size() == 2);
        CHECK(D[0].first.phi == poly(Q, {0, 1}));
        CHECK(D[0].second == 1);
        CHECK(D[1].first.infinite);
        CHECK(D[1].second == -1);
    }
    {
        const auto D = divisor_on_P1(s * s / (K.one() + s));
        REQUIRE(D.size() == 3);
        CHECK(D[0].first.phi == poly(Q, {0, 1}));
        CHECK(D[0].second == 2);
        CHECK(D[1].first.phi == poly(Q, {1, 1}));
        CHECK(D[1].second == -1);
        CHECK(D[2].first.infinite);
        CHECK(D[2].second == -1);
    }
    CHECK_THROWS_AS(divisor_on_P1(K.zero()), DomainError);

    Rng rng(21);
    for (const Ring &k : {Q, Ring::prime_field(5), make_finite_field(3, 2)}) {
        const Ring Ks = param_field(k, "s");
        for (int i = 0; i < 170; ++i) {
            const UniPoly a = random_poly(k, static_cast<int>(uniform(rng, 0, 4)), rng);
            const UniPoly b = random_poly(k, static_cast<int>(uniform(rng, 0, 4)), rng);
            if (a.is_zero() || b.is_zero()) continue;
            const Elem h = from_univariate(Ks, a, b);
            long total = 0;
            for (const auto &[P, e] : divisor_on_P1(h)) {
                total += e * static_cast<long>(P.degree());
                CHECK(order_at(h, P) == e);
            }
            CHECK(total == 0);
        }
    }
}

TEST_CASE("closed points have one canonical presentation")
{
    const Ring Q = Ring::rationals();
    const UniPoly mu = poly(Q, {1, 1, 1});
    const Ring L = Ring::simple_ext(Q, mu, "z");
    const Elem z = L.generator();
    // z and its conjugate -1 - z present the same point
    CHECK(make_point(Q, {z}) == make_point(Q, {-L.one() - z}));
    CHECK(make_point(Q, {z}).minpoly() == mu);
    // (z, z^2) and (z^2, z) are the same closed point of dimension 2
    CHECK(make_point(Q, {z, z * z}) == make_point(Q, {z * z, z}));
    CHECK(make_point(Q, {z, z * z}) != make_point(Q, {z, z}));
    // rational coordinates written over an extension
    const CanonicalPoint c = canonical_point(Q, {L.from_int(2L)});
    CHECK(c.index == 2);
    CHECK(c.point == make_point(Q, {Q.from_int(2L)}));
    CHECK_THROWS_AS(make_point(Q, {L.from_int(2L)}), DomainError);
    CHECK_THROWS_AS(make_point(Q, {Q.zero()}), DomainError);
    CHECK_THROWS_AS(make_point(Q, {Q.one(), Q.one()}), DomainError);

    // over F_9 viewed over F_3, the conjugate of a is a^3
    const Ring F3 = Ring::prime_field(3);
    const Ring F9 = make_finite_field(3, 2);
    const Elem a = F9.generator();
    CHECK(make_point(F3, {a}) == make_point(F3, {a.pow(3L)}));
    CHECK(make_point(F3, {a}).degree() == 2);

    ZeroCycle zc(Q, 1);
    zc.add(make_point(Q, {z}), 1);
    zc.add(make_point(Q, {-L.one() - z}), 2);
    CHECK(zc.terms().size() == 1);
    CHECK(zc.degree() == 6);
    CHECK((zc - zc).is_zero());
}

TEST_CASE("faces and boundary")
{
    const Ring Q = Ring::rationals();
    const Ring K = param_field(Q, "s");
    const Elem s = K.variable(0);
    CHECK_THROWS_AS(faces(ParamCurve(Q, s, {s})), GoodPositionError);
    try {
        faces(ParamCurve(Q, s, {s}));
    } catch (const GoodPositionError &e) {
        CHECK(e.face_index() == 1);
        CHECK(!e.face_at_infinity());
    }

    const ParamCurve C(Q, s, {(K.one() + s + s * s) / (K.one() + s)});
    const auto F = faces(C);
    REQUIRE(F.size() == 2);
    const Ring Lz = Ring::simple_ext(Q, poly(Q, {1, 1, 1}), "z");
    ZeroCycle zeta(Q, 1), minus_one(Q, 1);
    zeta.add(make_point(Q, {Lz.generator()}), 1);
    minus_one.add(make_point(Q, {Q.from_int(-1L)}), 1);
    CHECK(F[0].cycle == zeta);
    CHECK(F[1].cycle == minus_one);
    CHECK(boundary(C) == (zeta - minus_one).scaled(-1));

    // n = 2 with a constant second coordinate: its faces are empty
    const ParamCurve C2(Q, s, {(K.one() + s + s * s) / (K.one() + s), K.from_int(3L)});
    const auto F2 = faces(C2);
    REQUIRE(F2.size() == 4);
    CHECK(F2[2].cycle.is_zero());
    CHECK(F2[3].cycle.is_zero());
    CHECK(F2[0].cycle.terms().begin()->first.y(1) == Q.from_int(3L));

    // all y constant
    CHECK(boundary(ParamCurve(Q, s, {K.from_int(2L), K.from_int(5L)})).is_zero());
}

TEST_CASE("fy = g curves")
{
    const Ring Q = Ring::rationals();
    const UniPoly f = poly(Q, {1, 1}), g = poly(Q, {1, 1, 1});
    const ParamCurve C = fy_equals_g(f, g, 2);
    CHECK(check_modulus(C, 2).ok);
    const ModulusCheck bad = check_modulus(C, 3);
    CHECK(!bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->phi == poly(Q, {0, 1}));
    CHECK(bad.lhs == 3);
    CHECK(bad.rhs == 2);
    CHECK(boundary(C) == divisor_cycle(f) - divisor_cycle(g));

    Rng rng(22);
    for (const Ring &k : {Q, Ring::prime_field(5)}) {
        int done = 0;
        while (done < 100) {
            const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
            const UniPoly a = random_one_unit_poly(k, static_cast<int>(uniform(rng, 1, 4)), rng);
            const UniPoly b = a + UniPoly::monomial(random_nonzero(k, rng), m) * random_poly(k, static_cast<int>(uniform(rng, 0, 2)), rng);
            if (a == b || b.is_zero()) continue;
            const ParamCurve Cab = fy_equals_g(a, b, m);
            CHECK(check_modulus(Cab, m).ok);
            CHECK(boundary(Cab) == divisor_cycle(a) - divisor_cycle(b));
            ++done;
        }
    }
}

TEST_CASE("modulus condition on y = 1 + x^(mn) u")
{
    const Ring Q = Ring::rationals();
    const Ring K = param_field(Q, "s");
    const Elem s = K.variable(0);
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        const unsigned m = static_cast<unsigned>(uniform(rng, 2, 4));
        const Elem x = from_univariate(K, random_poly(Q, static_cast<int>(uniform(rng, 1, 3)), rng), poly(Q, {1}));
        std::vector<Elem> y;
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
        for (std::size_t j = 0; j < n; ++j) {
            const Elem u = from_univariate(K, random_poly(Q, 1, rng), random_poly(Q, 2, rng));
            if (u.is_zero()) continue;
            y.push_back(K.one() + x.pow(static_cast<long>(m * n)) * u);
        }
        if (y.empty()) continue;
        bool degenerate = false;
        for (const auto &v : y) degenerate = degenerate || v.is_zero() || v.is_one();
        if (degenerate || x.is_zero()) continue;
        CHECK(check_modulus(ParamCurve(Q, x, y), m).ok);
    }
    // x with a zero at infinity
    const ParamCurve C(Q, s.inv(), {K.one() + s.pow(-2L)});
    CHECK(check_modulus(C, 2).ok);
    CHECK(!check_modulus(C, 3).ok);
    CHECK(check_modulus(C, 3).witness->infinite);
}

TEST_CASE("face degrees and base change")
{
    Rng rng(24);
    const Ring F3 = Ring::prime_field(3), F9 = make_finite_field(3, 2);
    const Ring K3 = param_field(F3, "s"), K9 = param_field(F9, "s");
    int done = 0;
    while (done < 30) {
        // deg f = deg g keeps the faces away from s = inf
        const int d = static_cast<int>(uniform(rng, 1, 4));
        std::vector<long> cf{1}, cg{1};
        for (int i = 1; i <= d; ++i) {
            cf.push_back(uniform(rng, 0, 2));
            cg.push_back(uniform(rng, 0, 2));
        }
        cf.back() = 1;
        cg.back() = 2;
        const Elem y3 = from_univariate(K3, poly(F3, cg), poly(F3, cf));
        const Elem y9 = from_univariate(K9, poly(F9, cg), poly(F9, cf));
        const ParamCurve C3(F3, K3.variable(0), {y3}), C9(F9, K9.variable(0), {y9});
        const auto A = faces(C3), B = faces(C9);
        CHECK(face_degree(A[0]) == face_degree(A[1]));
        CHECK(face_degree(A[0]) == face_degree(B[0]));
        CHECK(face_degree(A[1]) == face_degree(B[1]));
        CHECK(B[0].cycle.terms().size() >= A[0].cycle.terms().size());
        ++done;
    }
}

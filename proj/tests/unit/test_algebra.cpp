#include <doctest.h>

#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>

using namespace wittkit;

TEST_CASE("smoke")
{
    Ring Q = Ring::rationals();
    UniPoly f(Q, {Q.from_int(-2), Q.one()});
    UniPoly g(Q, {Q.one(), Q.zero(), Q.one()});
    CHECK(resultant(f, g) == Q.from_int(5));
    Ring F = Ring::function_field(Q, {"t", "u"});
    Elem t = F.variable(0), u = F.variable(1);
    Elem a = (t * t - u * u) / (t - u);
    CHECK(a == t + u);
    CHECK(a.to_string() == "t+u");
}

#include <wittkit/factor.hpp>

TEST_CASE("factor quick")
{
    Ring F2 = Ring::prime_field(2);
    auto fac = factor_univariate(UniPoly(F2, {F2.one(), F2.zero(), F2.one()}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].second == 2);
    CHECK(fac[0].first.to_string() == "x+1");
    Ring Q = Ring::rationals();
    // (x^2-2)(x^3+x+1)(x-3)^2
    UniPoly a(Q, {Q.from_int(-2), Q.zero(), Q.one()});
    UniPoly b(Q, {Q.one(), Q.one(), Q.zero(), Q.one()});
    UniPoly c(Q, {Q.from_int(-3), Q.one()});
    auto f = a * b * c * c;
    auto fq = factor_univariate(f);
    CHECK(fq.size() == 3);
    CHECK(expand(fq, Q) == f);
    // x^4+1 irreducible over Q, splits mod every prime
    UniPoly x4(Q, {Q.one(), Q.zero(), Q.zero(), Q.zero(), Q.one()});
    CHECK(factor_univariate(x4).size() == 1);
    Ring Qt = Ring::function_field(Q, {"s"});
    Elem s = Qt.variable(0);
    // (u^2 - s)(u - s^2 - 1)(u^2+s*u+1)
    UniPoly g1(Qt, {-s, Qt.zero(), Qt.one()});
    UniPoly g2(Qt, {-(s * s + Qt.one()), Qt.one()});
    UniPoly g3(Qt, {Qt.one(), s, Qt.one()});
    auto ft = factor_univariate(g1 * g2 * g3);
    CHECK(ft.size() == 3);
    CHECK(expand(ft, Qt) == g1 * g2 * g3);
    // u^2 - s^2 splits
    UniPoly g4(Qt, {-(s * s), Qt.zero(), Qt.one()});
    CHECK(factor_univariate(g4).size() == 2);
    Ring F9 = make_finite_field(3, 2);
    CHECK(F9.modulus_coeffs() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(make_finite_field(2, 2).modulus_coeffs() == std::vector<std::uint64_t>{1, 1, 1});
    Ring F3t = Ring::function_field(Ring::prime_field(3), {"t"});
    Elem t = F3t.variable(0);
    UniPoly h(F3t, {-t, F3t.zero(), F3t.zero(), F3t.one()}); // u^3 - t inseparable, irreducible
    CHECK_THROWS(factor_univariate(h));
}

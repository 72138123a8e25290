#include <doctest.h>

#include <wittkit/error.hpp>
#include <wittkit/ptypical.hpp>

#include "../support/gen.hpp"
#include "../support/oracles.hpp"

using namespace wittkit;
using namespace wittkit::testgen;

namespace
{

std::vector<Rat> rat_coeffs(const TruncSeries &f)
{
    std::vector<Rat> r;
    for (const auto &c : f.coeffs()) r.push_back(c.as_rat());
    return r;
}

Rat q(long a, long b = 1)
{
    Rat r(a, b);
    r.canonicalize();
    return r;
}

// split(w)_j read off F_j(w): components of F_j(w) at 1, p, p^2, ...
PTypicalWitt split_via_frobenius(const WittVector &w, std::uint64_t p, std::uint64_t j)
{
    const unsigned n = n_of_j(j, p, w.length());
    std::size_t M = 1;
    for (unsigned i = 0; i < n; ++i) M *= p;
    std::vector<Elem> a = w.components();
    a.resize(j * M + j - 1, w.ring().zero());
    return from_big(frobenius(static_cast<unsigned>(j), WittVector(w.ring(), a)), p);
}

} // namespace

TEST_CASE("Artin-Hasse truncations")
{
    CHECK(rat_coeffs(artin_hasse(2, 2).series) == std::vector<Rat>{q(1), q(-1), q(0)});
    CHECK(rat_coeffs(artin_hasse(3, 3).series) == std::vector<Rat>{q(1), q(-1), q(1, 2), q(-1, 2)});
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const auto f = rat_coeffs(artin_hasse(p, 40).series);
        CHECK(f == oracle::artin_hasse_mobius(p, 40));
        for (const auto &c : f) CHECK(!mpz_divisible_ui_p(c.get_den_mpz_t(), p));
    }
    CHECK_THROWS_AS(artin_hasse(4, 3), DomainError);
    CHECK_THROWS_AS(artin_hasse(2, 0), DomainError);
}

TEST_CASE("n(j) and the component count")
{
    CHECK(n_of_j(1, 2, 5) == 2);
    CHECK(n_of_j(3, 2, 5) == 0);
    CHECK(n_of_j(5, 2, 5) == 0);
    CHECK_THROWS_AS(n_of_j(2, 2, 5), DomainError);
    CHECK_THROWS_AS(n_of_j(7, 2, 5), DomainError);
    for (std::uint64_t p : {2, 3, 5}) {
        for (std::size_t m = 1; m <= 200; ++m) {
            std::size_t total = 0;
            for (std::uint64_t j : split_indices(p, m)) total += n_of_j(j, p, m) + 1;
            CHECK(total == m);
        }
    }
}

TEST_CASE("epsilon")
{
    const Ring Q = Ring::rationals();
    CHECK(epsilon(2, 2, Q) == WittVector(Q, {Q.one(), Q.zero()}));
    // idempotent in W_{p^r}(F_p)
    for (std::uint64_t p : {2, 3}) {
        const Ring Fp = Ring::prime_field(p);
        std::size_t m = 1;
        for (unsigned r = 0; r <= 3; ++r, m *= p) {
            const WittVector e = epsilon(p, m, Fp);
            CHECK(witt_mul(e, e) == e);
        }
    }
    // its ghost is the indicator of p-powers
    const auto g = ghost(epsilon(3, 20, Q));
    for (std::size_t n = 1; n <= 20; ++n) CHECK(g[n - 1] == ((n == 1 || n == 3 || n == 9) ? Q.one() : Q.zero()));
    CHECK_THROWS_AS(epsilon(2, 3, Ring::integers()), DomainError);
    CHECK_THROWS_AS(epsilon(2, 5, Ring::prime_field(5)), DomainError);
    CHECK_NOTHROW(epsilon(2, 4, Ring::prime_field(5)));
    CHECK_NOTHROW(epsilon(2, 20, Ring::integers_mod(8)));
}

TEST_CASE("split and join")
{
    Rng rng(11);
    const Ring F2 = Ring::prime_field(2), Q = Ring::rationals();
    {
        auto s = p_typical_split(random_witt(Q, 3, rng), 2);
        REQUIRE(s.size() == 2);
        CHECK(s.at(1).level() == 1);
        CHECK(s.at(3).level() == 0);
    }
    std::vector<Ring> rings{F2, make_finite_field(3, 2), Q, Ring::integers_mod(9), Ring::function_field(Ring::prime_field(3), {"t"})};
    for (const Ring &R : rings) {
        for (std::uint64_t p : {2, 3}) {
            for (std::size_t m = 1; m <= 10; ++m) {
                if (!is_zp_algebra_upto(R, p, m)) continue;
                const WittVector u = random_witt(R, m, rng), v = random_witt(R, m, rng);
                const auto su = p_typical_split(u, p), sv = p_typical_split(v, p);
                CHECK(p_typical_join(su, p) == u);
                const auto sum = p_typical_split(witt_add(u, v), p), prod = p_typical_split(witt_mul(u, v), p);
                for (const auto &[j, y] : su) {
                    CHECK(y == split_via_frobenius(u, p, j));
                    CHECK(sum.at(j) == ptypical_add(y, sv.at(j)));
                    CHECK(prod.at(j) == ptypical_mul(y, sv.at(j)));
                }
                // join of arbitrary components, then split again
                PTypicalSplit x;
                for (const auto &[j, y] : su) {
                    std::vector<Elem> c;
                    for (unsigned i = 0; i <= y.level(); ++i) c.push_back(random_elem(R, rng));
                    x.emplace(j, PTypicalWitt(p, R, c));
                }
                CHECK(p_typical_split(p_typical_join(x, p), p) == x);
            }
        }
    }
    // ghost characterization over Q
    const WittVector w = random_witt(Q, 12, rng);
    const auto gw = ghost(w);
    for (const auto &[j, y] : p_typical_split(w, 3)) {
        const auto gy = ghost(y);
        std::size_t q = 1;
        for (unsigned i = 0; i <= y.level(); ++i, q *= 3) CHECK(gy[i] == gw[j * q - 1]);
    }
    CHECK_THROWS_AS(p_typical_split(random_witt(Ring::integers(), 3, rng), 2), DomainError);
    // level 2 at j = 1 means m >= 4, which also needs j = 3
    PTypicalSplit bad{{1, PTypicalWitt::zero(2, F2, 2)}};
    CHECK_THROWS_AS(p_typical_join(bad, 2), DomainError);
}

TEST_CASE("epsilon cuts out the j = 1 component")
{
    Rng rng(12);
    for (std::uint64_t p : {2, 3}) {
        const Ring Fp = Ring::prime_field(p);
        std::size_t m = p;
        for (unsigned r = 1; r <= 3; ++r, m *= p) {
            const WittVector e = epsilon(p, m, Fp);
            for (int k = 0; k < 5; ++k) {
                const WittVector w = random_witt(Fp, m, rng);
                const auto sw = p_typical_split(w, p), se = p_typical_split(witt_mul(w, e), p);
                CHECK(se.at(1) == sw.at(1));
                for (const auto &[j, y] : se) {
                    if (j != 1) CHECK(y == PTypicalWitt::zero(p, Fp, y.level()));
                }
            }
        }
    }
    // W_4(F_2): w * eps equals the join of (split(w)_1, 0, ...)
    const Ring F2 = Ring::prime_field(2);
    for (int k = 0; k < 20; ++k) {
        const WittVector w = random_witt(F2, 4, rng);
        auto s = p_typical_split(w, 2);
        for (auto &[j, y] : s) {
            if (j != 1) y = PTypicalWitt::zero(2, F2, y.level());
        }
        CHECK(witt_mul(w, epsilon(2, 4, F2)) == p_typical_join(s, 2));
    }
}

TEST_CASE("p-typical Teichmueller, Frobenius, Verschiebung")
{
    const Ring Qa = Ring::function_field(Ring::rationals(), {"a"});
    const Elem a = Qa.variable(0);
    CHECK(ghost(ptypical_teichmueller(3, a, 1)) == std::vector<Elem>{a, a.pow(3L)});
    Rng rng(13);
    const Ring F5 = Ring::prime_field(5);
    for (int k = 0; k < 10; ++k) {
        std::vector<Elem> c;
        for (int i = 0; i < 3; ++i) c.push_back(random_elem(F5, rng));
        const PTypicalWitt y(5, F5, c);
        PTypicalWitt s = PTypicalWitt::zero(5, F5, 2);
        for (int i = 0; i < 5; ++i) s = ptypical_add(s, y);
        CHECK(ptypical_frobenius(ptypical_verschiebung(y)) == s);
    }
    // F is multiplicative and V additive, seen on ghosts over Q
    const Ring Q = Ring::rationals();
    for (std::uint64_t p : {2, 3}) {
        for (int k = 0; k < 5; ++k) {
            std::vector<Elem> c1, c2;
            for (int i = 0; i < 3; ++i) {
                c1.push_back(random_elem(Q, rng));
                c2.push_back(random_elem(Q, rng));
            }
            const PTypicalWitt u(p, Q, c1), v(p, Q, c2);
            const auto gu = ghost(u), gv = ghost(v);
            const auto gs = ghost(ptypical_add(u, v)), gm = ghost(ptypical_mul(u, v)), gf = ghost(ptypical_frobenius(u));
            const auto gvu = ghost(ptypical_verschiebung(u));
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(gs[i] == gu[i] + gv[i]);
                CHECK(gm[i] == gu[i] * gv[i]);
                CHECK(gvu[i + 1] == Q.from_int(static_cast<long>(p)) * gu[i]);
            }
            for (std::size_t i = 0; i < 2; ++i) CHECK(gf[i] == gu[i + 1]);
            CHECK(ptypical_add(u, ptypical_neg(u)) == PTypicalWitt::zero(p, Q, 2));
        }
    }
    // split(V_p w)_j = V(split(w)_j), and vanishes for j > m
    const Ring F9 = make_finite_field(3, 2);
    for (std::size_t m = 1; m <= 5; ++m) {
        for (std::uint64_t p : {2, 3}) {
            const Ring &R = p == 3 ? F9 : Q;
            const WittVector w = random_witt(R, m, rng);
            const auto sw = p_typical_split(w, p), sv = p_typical_split(verschiebung(static_cast<unsigned>(p), w), p);
            for (const auto &[j, y] : sv) {
                if (j <= m) {
                    CHECK(y == ptypical_verschiebung(sw.at(j)));
                } else {
                    CHECK(y == PTypicalWitt::zero(p, R, y.level()));
                }
            }
        }
    }
    CHECK_THROWS_AS(ptypical_frobenius(ptypical_teichmueller(2, a, 0)), DomainError);
}

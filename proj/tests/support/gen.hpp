#ifndef WITTKIT_TESTS_GEN_HPP
#define WITTKIT_TESTS_GEN_HPP

// Small hand-rolled generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>
#include <wittkit/witt.hpp>

namespace wittkit::testgen
{

using Rng = std::mt19937_64;

inline long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Elem random_constant(const Ring &k, Rng &rng)
{
    switch (k.kind()) {
    case RingKind::integers:
        return k.from_int(uniform(rng, -9, 9));
    case RingKind::integers_mod:
        return k.from_int(uniform(rng, 0, 1000));
    case RingKind::rationals:
        return k.from_rational(Rat(uniform(rng, -9, 9), uniform(rng, 1, 5)));
    case RingKind::prime_field:
    case RingKind::ext_field:
        return k.element_from_index(static_cast<std::uint64_t>(rng() % k.order().get_ui()));
    default:
        break;
    }
    return k.zero();
}

// Low-degree polynomial in the transcendentals, sometimes over a small
// denominator, keeping rational function growth modest.
inline Elem random_elem(const Ring &r, Rng &rng)
{
    if (r.kind() == RingKind::function_field) {
        const Ring &k = r.base();
        auto poly = [&](int max_deg) {
            Elem s = r.zero();
            for (std::size_t v = 0; v < r.num_variables(); ++v) {
                Elem tv = r.variable(v);
                Elem pw = r.one();
                const int deg = static_cast<int>(uniform(rng, 0, max_deg));
                for (int d = 0; d <= deg; ++d) {
                    if (d > 0 || v == 0) s += r.embed(random_constant(k, rng)) * pw;
                    pw *= tv;
                }
            }
            return s;
        };
        Elem num = poly(2);
        if (uniform(rng, 0, 3) == 0) {
            Elem den = poly(1);
            if (!den.is_zero()) return num / den;
        }
        return num;
    }
    if (r.kind() == RingKind::simple_ext) {
        std::vector<Elem> c;
        for (std::size_t i = 0; i < r.ext_degree(); ++i) c.push_back(random_elem(r.base(), rng));
        Elem s = r.zero();
        Elem pw = r.one();
        for (const auto &x : c) {
            s += r.embed(x) * pw;
            pw *= r.generator();
        }
        return s;
    }
    return random_constant(r, rng);
}

inline Elem random_nonzero(const Ring &r, Rng &rng)
{
    while (true) {
        Elem x = random_elem(r, rng);
        if (!x.is_zero()) return x;
    }
}

inline Elem random_unit(const Ring &r, Rng &rng)
{
    while (true) {
        Elem x = random_elem(r, rng);
        if (x.is_unit()) return x;
    }
}

inline WittVector random_witt(const Ring &r, std::size_t m, Rng &rng)
{
    std::vector<Elem> c;
    for (std::size_t i = 0; i < m; ++i) c.push_back(uniform(rng, 0, 4) == 0 ? r.zero() : random_elem(r, rng));
    return WittVector(r, std::move(c));
}

inline UniPoly random_poly(const Ring &r, int deg, Rng &rng)
{
    std::vector<Elem> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_elem(r, rng));
    if (c.back().is_zero()) c.back() = r.one();
    return UniPoly(r, std::move(c));
}

// n-fold Witt self-sum
inline WittVector witt_multiple(unsigned n, const WittVector &w)
{
    WittVector s = WittVector::zero(w.ring(), w.length());
    for (unsigned i = 0; i < n; ++i) s = witt_add(s, w);
    return s;
}

} // namespace wittkit::testgen

#endif

#ifndef WITTKIT_TESTS_ORACLES_HPP
#define WITTKIT_TESTS_ORACLES_HPP

// Independent reference computations used only by the tests.

#include <cstdint>
#include <vector>

#include <wittkit/integer.hpp>

namespace wittkit::oracle
{

// (1 - t^j)^alpha mod t^(m+1) by the binomial series.
inline std::vector<Rat> binomial_power(std::uint64_t j, const Rat &alpha, std::size_t m)
{
    std::vector<Rat> r(m + 1, Rat(0));
    Rat c = 1; // binom(alpha, k) (-1)^k
    for (std::size_t k = 0; k * j <= m; ++k) {
        r[k * j] = c;
        c = c * (alpha - Rat(static_cast<long>(k))) / Rat(static_cast<long>(k + 1)) * Rat(-1);
    }
    return r;
}

inline std::vector<Rat> series_mul(const std::vector<Rat> &a, const std::vector<Rat> &b)
{
    std::vector<Rat> r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; i + k < r.size(); ++k) r[i + k] += a[i] * b[k];
    }
    return r;
}

// prod over j <= m prime to p of (1 - t^j)^(mu(j)/j).
inline std::vector<Rat> artin_hasse_mobius(std::uint64_t p, std::size_t m)
{
    std::vector<Rat> f(m + 1, Rat(0));
    f[0] = 1;
    for (std::uint64_t j = 1; j <= m; ++j) {
        if (j % p == 0) continue;
        const int mu = mobius(j);
        if (mu == 0) continue;
        Rat alpha(mu, static_cast<long>(j));
        alpha.canonicalize();
        f = series_mul(f, binomial_power(j, alpha, m));
    }
    return f;
}

} // namespace wittkit::oracle

#endif

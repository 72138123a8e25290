#ifndef WITTKIT_FACTOR_HPP
#define WITTKIT_FACTOR_HPP

#include <utility>
#include <vector>

#include <wittkit/unipoly.hpp>

namespace wittkit
{

using Factorization = std::vector<std::pair<UniPoly, unsigned>>;

struct FactorOptions {
    // Largest squarefree degree attempted over Q.
    int zassenhaus_cap = 12;
};

// Monic irreducible factors with multiplicities, sorted by (degree,
// coefficients from the top). Supported coefficient fields: F_p, F_q, Q and
// function fields over them. The unit lc(f) is dropped.
Factorization factor_univariate(const UniPoly &f, const FactorOptions &opt = {});
Factorization factor_univariate(const UniPoly &f, const Ring &field, const FactorOptions &opt = {});

// Product of factors^multiplicity (monic).
UniPoly expand(const Factorization &fac, const Ring &r);

// Roots in the coefficient field, sorted, without multiplicity.
std::vector<Elem> roots(const UniPoly &f);

bool is_irreducible(const UniPoly &f);

} // namespace wittkit

#endif

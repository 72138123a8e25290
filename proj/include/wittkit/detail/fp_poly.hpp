#ifndef WITTKIT_DETAIL_FP_POLY_HPP
#define WITTKIT_DETAIL_FP_POLY_HPP

#include <cstdint>
#include <vector>

// Dense polynomials over F_p on machine words, low degree first. Used for the
// polynomial basis of F_q and for modulus search; no leading zeros kept.
namespace wittkit::detail::fp
{

using Poly = std::vector<std::uint64_t>;

void trim(Poly &a);
int degree(const Poly &a);
Poly add(const Poly &a, const Poly &b, std::uint64_t p);
Poly sub(const Poly &a, const Poly &b, std::uint64_t p);
Poly mul(const Poly &a, const Poly &b, std::uint64_t p);
// Remainder modulo a nonzero polynomial.
Poly mod(Poly a, const Poly &m, std::uint64_t p);
Poly mulmod(const Poly &a, const Poly &b, const Poly &m, std::uint64_t p);
Poly powmod(Poly a, std::uint64_t e, const Poly &m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
// Inverse of a modulo m; throws DomainError if not coprime.
Poly invmod(const Poly &a, const Poly &m, std::uint64_t p);
// Rabin's test; f of degree >= 1.
bool is_irreducible(const Poly &f, std::uint64_t p);

} // namespace wittkit::detail::fp

#endif

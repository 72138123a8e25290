#ifndef WITTKIT_INTEGER_HPP
#define WITTKIT_INTEGER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wittkit
{

using Int = mpz_class;
using Rat = mpq_class;

bool is_prime(std::uint64_t n);
bool is_prime(const Int &n);

// Prime factors of n without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

Int ipow(const Int &base, unsigned long exp);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

// Largest power of p dividing n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);
unsigned valuation(const Int &n, std::uint64_t p);

std::string to_string(const Int &v);
std::string to_string(const Rat &v);

// Parses "-12" or "3/4"; throws ParseError.
Rat parse_rational(const std::string &text);

} // namespace wittkit

#endif

#ifndef WITTKIT_PARSE_HPP
#define WITTKIT_PARSE_HPP

#include <string>
#include <vector>

#include <wittkit/count.hpp>
#include <wittkit/ring.hpp>

namespace wittkit
{

// Ring specs: Z, Q, Z/N, Fp, Fq (q a prime power, e.g. F9), Fp^e, and
// K(v1,...,vr) for K one of Q, Fp, Fq, Fp^e. Throws ParseError.
Ring parse_ring(const std::string &spec);

// Expressions with + - * / ^, parentheses and implicit products ("2s",
// "3(s+1)"). Names: variables of a function field, the generator of an
// extension (F_q uses "a"), and names of the underlying rings.
Elem parse_elem(const Ring &r, const std::string &text);

// Polynomial over the finite field k in the given coordinate names. The
// aliases x1..xn (1-based) are accepted as well.
SparsePoly parse_poly(const Ring &k, const std::string &text, const std::vector<std::string> &names);

} // namespace wittkit

#endif

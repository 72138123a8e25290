#ifndef WITTKIT_WITT_HPP
#define WITTKIT_WITT_HPP

#include <string>
#include <vector>

#include <wittkit/detail/qpoly.hpp>
#include <wittkit/ring.hpp>
#include <wittkit/series.hpp>

namespace wittkit
{

// Truncated big Witt vector (a_1, ..., a_m) of W_m(A).
//
// Sign convention: w corresponds to the 1-unit prod_i (1 - a_i t^i) mod
// t^(m+1). With it [a] <-> 1 - a t, Witt addition is multiplication of
// 1-units, and the ghost components are the coefficients of -t f'/f.
class WittVector
{
public:
    WittVector() = default;
    WittVector(Ring r, std::vector<Elem> components);

    static WittVector zero(const Ring &r, std::size_t m);
    static WittVector one(const Ring &r, std::size_t m);

    const Ring &ring() const { return ring_; }
    std::size_t length() const { return a_.size(); }
    // a_i, 1-based.
    const Elem &operator[](std::size_t i) const { return a_[i - 1]; }
    const std::vector<Elem> &components() const { return a_; }

    bool operator==(const WittVector &o) const;
    bool operator!=(const WittVector &o) const { return !(*this == o); }
    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Elem> a_;
};

// Variables of the universal polynomials: a_d is d, b_d is witt_b_offset + d.
inline constexpr detail::Var witt_b_offset = 1u << 16;
// Up to this weight arithmetic evaluates the universal polynomials; beyond
// it the exact 1-unit product formulas are used (P_24 has ~28k terms).
inline constexpr std::size_t universal_weight_limit = 16;

struct UniversalWittPolys {
    unsigned n;
    detail::EvalPoly S; // sum, component n
    detail::EvalPoly P; // product, component n
};

// Derived once by ghost inversion over Q and cached process-wide; aborts
// if a coefficient fails to be integral.
const UniversalWittPolys &universal_polys(unsigned n);
// Phi_{r,n}: component n of F_r, in the variables a_d.
const detail::EvalPoly &frobenius_poly(unsigned r, unsigned n);
std::string witt_poly_string(const detail::EvalPoly &p);

std::vector<Elem> ghost(const WittVector &w);
// Torsion-free rings only; over Z every division is checked.
WittVector from_ghost(const Ring &r, const std::vector<Elem> &g);

WittVector witt_add(const WittVector &u, const WittVector &v);
WittVector witt_neg(const WittVector &u);
WittVector witt_sub(const WittVector &u, const WittVector &v);
WittVector witt_mul(const WittVector &u, const WittVector &v);

// The two exact routes behind witt_add / witt_mul / frobenius.
WittVector witt_add_universal(const WittVector &u, const WittVector &v);
WittVector witt_mul_universal(const WittVector &u, const WittVector &v);
WittVector witt_add_series(const WittVector &u, const WittVector &v);
// prod over (i,j) of (1 - a_i^{j/d} b_j^{i/d} t^{ij/d})^d, d = gcd(i,j).
WittVector witt_mul_series(const WittVector &u, const WittVector &v);

WittVector teichmueller(const Elem &a, std::size_t m);
// W_m -> W_{nm+n-1}
WittVector verschiebung(unsigned n, const WittVector &w);
// W_{nm+n-1} -> W_m; other input lengths are rejected.
WittVector frobenius(unsigned n, const WittVector &w);
WittVector frobenius_universal(unsigned n, const WittVector &w);
// prod over d of (1 - a_d^{n/g} t^{d/g})^g, g = gcd(n,d).
WittVector frobenius_series(unsigned n, const WittVector &w);
WittVector restrict_to(const WittVector &w, std::size_t m);

TruncSeries to_one_unit(const WittVector &w);
WittVector from_one_unit(const TruncSeries &f);

// Tr_{L/k} for L = w.ring() a finite separable extension of k (see
// linalg.hpp for the supported presentations): the norm of the 1-unit.
WittVector witt_trace(const WittVector &w, const Ring &k);

} // namespace wittkit

#endif

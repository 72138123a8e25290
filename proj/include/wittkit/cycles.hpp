#ifndef WITTKIT_CYCLES_HPP
#define WITTKIT_CYCLES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>

namespace wittkit
{

// ---------------------------------------------------------------------------
// Rational functions on P^1_k. A function in the parameter s is an element
// of K = k(s), the function field with s appended as last variable.

Ring param_field(const Ring &k, const std::string &param);
// Parameter name used when none is given: "s", or "u" if k already uses s.
std::string default_param(const Ring &k);
// k for K = k(s).
Ring coefficient_field(const Ring &K);

struct UniFraction {
    UniPoly num;
    UniPoly den; // monic
};
UniFraction as_univariate(const Elem &h);
Elem from_univariate(const Ring &K, const UniPoly &num, const UniPoly &den);

// Closed point of P^1_k: a monic irreducible phi, or infinity.
struct P1Point {
    bool infinite = false;
    UniPoly phi;

    static P1Point at_infinity(const Ring &k);
    std::size_t degree() const;
    // k itself for degree one, k[th]/(phi) otherwise.
    Ring residue_field() const;
    // Image of s in the residue field (unused at infinity).
    Elem root() const;
    std::string to_string(const std::string &param = "s") const;
    bool operator==(const P1Point &o) const;
    bool operator<(const P1Point &o) const;
};

using P1Divisor = std::vector<std::pair<P1Point, long>>;

// Zeros (positive) and poles (negative) of h != 0, infinity last.
P1Divisor divisor_on_P1(const Elem &h);
long order_at(const Elem &h, const P1Point &P);
// Value of h at P in P.residue_field(), or nullopt at a pole.
std::optional<Elem> value_at(const Elem &h, const P1Point &P);

// ---------------------------------------------------------------------------
// Closed points of (A^1 \ 0) x (P^1 \ {0,1,inf})^(n-1).
//
// Canonical form: the first element gamma = sum c_i z_i (c_i small integers,
// ordered by sum then lexicographically) that generates k(z_1..z_n) over k;
// the residue field is k[th]/(minpoly of gamma) and every coordinate is
// written in that basis. Presentations of the same point agree exactly.
class ClosedPoint
{
public:
    ClosedPoint() = default;
    // Low level: the data must already be canonical (see canonical_point).
    ClosedPoint(Ring base, Ring field, UniPoly minpoly, std::vector<Elem> coords);

    const Ring &base() const { return base_; }
    const Ring &field() const { return field_; }
    std::size_t dim() const { return coords_.size(); }
    std::size_t degree() const;
    const UniPoly &minpoly() const { return minpoly_; }
    const std::vector<Elem> &coords() const { return coords_; }
    const Elem &x() const { return coords_[0]; }
    const Elem &y(std::size_t i) const { return coords_[i]; } // 1-based

    bool operator==(const ClosedPoint &o) const;
    bool operator<(const ClosedPoint &o) const;
    std::string to_string() const;

private:
    Ring base_;
    Ring field_;
    UniPoly minpoly_;
    std::vector<Elem> coords_;
};

struct CanonicalPoint {
    ClosedPoint point;
    // [L : k(P)] for coordinates given in L; the push-forward multiplicity.
    std::size_t index;
};

// coords live in k or a finite extension of k; checks x != 0 and y_i not 0, 1.
CanonicalPoint canonical_point(const Ring &k, const std::vector<Elem> &coords);
ClosedPoint make_point(const Ring &k, const std::vector<Elem> &coords);

class ZeroCycle
{
public:
    ZeroCycle() = default;
    ZeroCycle(Ring k, std::size_t dim);

    const Ring &base() const { return base_; }
    std::size_t dim() const { return dim_; }
    const std::map<ClosedPoint, long> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // sum of multiplicity * degree
    long degree() const;

    void add(const ClosedPoint &P, long mult);
    ZeroCycle operator+(const ZeroCycle &o) const;
    ZeroCycle operator-(const ZeroCycle &o) const;
    ZeroCycle scaled(long c) const;
    bool operator==(const ZeroCycle &o) const;
    std::string to_string() const;

private:
    Ring base_;
    std::size_t dim_ = 0;
    std::map<ClosedPoint, long> terms_;
};

// Points of div(f) on A^1 \ 0 (the zeros of f, x = root); needs f(0) != 0.
ZeroCycle divisor_cycle(const UniPoly &f);

// ---------------------------------------------------------------------------
// Curves P^1 -> A^1 x (P^1)^n, s -> (x(s), y_1(s), ..., y_n(s)).

class ParamCurve
{
public:
    ParamCurve(Ring k, Elem x, std::vector<Elem> y, unsigned modulus = 2);

    const Ring &base() const { return k_; }
    const Ring &function_field() const { return K_; }
    std::size_t n() const { return y_.size(); }
    const Elem &x() const { return x_; }
    const Elem &y(std::size_t i) const { return y_[i - 1]; } // 1-based
    unsigned modulus() const { return modulus_; }
    std::string to_string() const;

private:
    Ring k_, K_;
    Elem x_;
    std::vector<Elem> y_;
    unsigned modulus_;
};

// The curve f(x) y = g(x), parametrized by s = x.
ParamCurve fy_equals_g(const UniPoly &f, const UniPoly &g, unsigned modulus);

struct Face {
    std::size_t index; // 1..n
    bool at_infinity;  // false: y_i = 0, true: y_i = inf
    ZeroCycle cycle;
};

// All 2n faces, (1,0), (1,inf), (2,0), ... Throws GoodPositionError.
std::vector<Face> faces(const ParamCurve &C);
// sum_i (-1)^i (d_i^0 - d_i^inf)
ZeroCycle boundary(const ParamCurve &C);

struct ModulusCheck {
    bool ok = true;
    std::optional<P1Point> witness;
    long lhs = 0; // m * ord_P(x)
    long rhs = 0; // sum_i max(0, ord_P(y_i - 1))
};

// m (x)_0 <= sum_i (y_i - 1)_0 on P^1, infinity included.
ModulusCheck check_modulus(const ParamCurve &C, unsigned m);

} // namespace wittkit

#endif

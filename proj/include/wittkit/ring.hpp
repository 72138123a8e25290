#ifndef WITTKIT_RING_HPP
#define WITTKIT_RING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <wittkit/integer.hpp>

namespace wittkit
{

class Ring;
class Elem;
class UniPoly;
class MPoly;

// Coefficient rings and fields. Every ring is an immutable descriptor shared
// by the elements that live in it:
//
//   integers        Z
//   integers_mod    Z/N
//   rationals       Q
//   prime_field     F_p
//   ext_field       F_q = F_p[a]/(modulus), polynomial basis
//   function_field  K(t_1..t_r), K one of the three fields above, r <= 3
//   simple_ext      k(θ) = k[θ]/(g), g monic irreducible over k
enum class RingKind { integers, integers_mod, rationals, prime_field, ext_field, function_field, simple_ext };

namespace detail
{
struct RingData;
struct MTerm;
} // namespace detail

class Ring
{
public:
    Ring();

    static Ring integers();
    static Ring integers_mod(const Int &n);
    static Ring rationals();
    static Ring prime_field(std::uint64_t p);
    // modulus: monic, low degree first, size e+1. Irreducibility is the caller's contract.
    static Ring ext_field(std::uint64_t p, std::vector<std::uint64_t> modulus, std::string generator = "a");
    static Ring function_field(const Ring &constants, std::vector<std::string> variables);
    static Ring simple_ext(const Ring &base, const UniPoly &minpoly, std::string generator);

    RingKind kind() const;
    bool is_field() const;
    bool is_finite_field() const;
    bool torsion_free() const;
    Int characteristic() const;
    // Residue characteristic for rings of prime characteristic, 0 otherwise.
    std::uint64_t char_p() const;
    // e for F_{p^e}, deg g for simple extensions, 1 otherwise.
    std::size_t ext_degree() const;
    // Number of elements of a finite field.
    Int order() const;

    const Ring &base() const;
    const std::vector<std::string> &variables() const;
    std::size_t num_variables() const;
    const std::string &generator_name() const;
    const std::vector<std::uint64_t> &modulus_coeffs() const;
    const Int &modulus() const;
    const UniPoly &minpoly() const;
    // Field of constants Q, F_p or F_q underneath function fields and simple extensions.
    const Ring &constants() const;

    std::string spec() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(const Int &v) const;
    Elem from_int(long v) const;
    // Throws DomainError when the denominator is not invertible.
    Elem from_rational(const Rat &v) const;
    Elem generator() const;
    Elem variable(std::size_t i) const;
    // num/den in lowest terms; function fields only.
    Elem ratfn(const MPoly &num, const MPoly &den) const;
    // Finite fields: element with base-p digits of idx as coordinates.
    Elem element_from_index(std::uint64_t idx) const;

    bool contains(const Ring &sub) const;
    Elem embed(const Elem &x) const;

    bool operator==(const Ring &o) const;
    bool operator!=(const Ring &o) const { return !(*this == o); }

    const detail::RingData *data() const { return d_.get(); }

private:
    explicit Ring(std::shared_ptr<const detail::RingData> d);
    std::shared_ptr<const detail::RingData> d_;
};

// Polynomial in at most three variables over Q, F_p or F_q. Terms are kept in
// lex order (first variable most significant), leading term first.
class MPoly
{
public:
    using Key = std::uint64_t;
    static constexpr std::size_t max_vars = 3;
    static constexpr unsigned exp_bits = 20;

    MPoly();
    MPoly(Ring constants, std::size_t nvars);
    MPoly(const MPoly &);
    MPoly(MPoly &&) noexcept;
    MPoly &operator=(const MPoly &);
    MPoly &operator=(MPoly &&) noexcept;
    ~MPoly();

    static MPoly constant(const Elem &c, std::size_t nvars);
    static MPoly variable(const Ring &constants, std::size_t nvars, std::size_t i);
    static MPoly monomial(const Elem &c, const std::array<unsigned, max_vars> &exps, std::size_t nvars);
    static Key make_key(const std::array<unsigned, max_vars> &exps);
    static unsigned exponent(Key k, std::size_t var);
    static unsigned key_degree(Key k);

    const Ring &constants() const { return constants_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<detail::MTerm> &terms() const { return terms_; }

    bool is_zero() const;
    bool is_constant() const;
    bool is_one() const;
    const Elem &leading_coeff() const;
    Elem constant_term() const;
    int total_degree() const;
    int degree_in(std::size_t var) const;
    unsigned used_vars() const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly &a, const MPoly &b);
    friend MPoly operator-(const MPoly &a, const MPoly &b);
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    MPoly scaled(const Elem &c) const;
    MPoly pow(unsigned e) const;
    MPoly monic() const;
    MPoly derivative(std::size_t var) const;
    Elem eval(const std::vector<Elem> &point) const;
    // Replace t_i by t_i + shift_i.
    MPoly shifted(const std::vector<Elem> &shift) const;

    bool operator==(const MPoly &o) const;
    bool operator!=(const MPoly &o) const { return !(*this == o); }

    std::string to_string(const std::vector<std::string> &names) const;

    // Builds from unsorted terms; merges equal keys and drops zeros.
    static MPoly from_terms(const Ring &constants, std::size_t nvars, std::vector<detail::MTerm> terms);

private:
    Ring constants_;
    std::size_t nvars_ = 0;
    std::vector<detail::MTerm> terms_;
};

// Throws DomainError unless b divides a.
MPoly exact_div(const MPoly &a, const MPoly &b);
// Monic gcd; gcd(0, 0) = 0.
MPoly gcd(const MPoly &a, const MPoly &b);

class Elem
{
public:
    struct RatFn {
        MPoly num;
        MPoly den;
    };
    using FqRep = std::vector<std::uint64_t>;
    using ExtRep = std::vector<Elem>;
    using Rep = std::variant<Int, Rat, std::uint64_t, FqRep, std::shared_ptr<const RatFn>, ExtRep>;

    Elem();
    // Low level: rep must already be canonical for r.
    Elem(Ring r, Rep rep);

    const Ring &ring() const { return ring_; }
    const Rep &rep() const { return rep_; }

    bool is_zero() const;
    bool is_one() const;

    const Int &as_int() const;
    const Rat &as_rat() const;
    std::uint64_t as_fp() const;
    const FqRep &as_fq() const;
    const RatFn &as_ratfn() const;
    const ExtRep &as_ext() const;

    Elem operator-() const;
    friend Elem operator+(const Elem &a, const Elem &b);
    friend Elem operator-(const Elem &a, const Elem &b);
    friend Elem operator*(const Elem &a, const Elem &b);
    friend Elem operator/(const Elem &a, const Elem &b);
    Elem &operator+=(const Elem &b) { return *this = *this + b; }
    Elem &operator-=(const Elem &b) { return *this = *this - b; }
    Elem &operator*=(const Elem &b) { return *this = *this * b; }
    Elem &operator/=(const Elem &b) { return *this = *this / b; }

    Elem inv() const;
    Elem pow(const Int &e) const;
    Elem pow(long e) const { return pow(Int(e)); }
    // Inverse of Frobenius x -> x^p where it exists; throws otherwise.
    Elem pth_root() const;
    bool is_unit() const;

    bool operator==(const Elem &o) const;
    bool operator!=(const Elem &o) const { return !(*this == o); }

    // Integer value when the element is the image of an integer in a
    // "numeric" ring (Z, Z/N, F_p, Q with denominator 1).
    bool integral_value(Int &out) const;

    std::string to_string() const;
    // Deterministic total order for canonical sorting; not a ring order.
    static int compare(const Elem &a, const Elem &b);

private:
    Ring ring_;
    Rep rep_;
};

namespace detail
{
struct MTerm {
    MPoly::Key key;
    Elem coef;
};
} // namespace detail

Elem operator*(long a, const Elem &b);

// F_{p^e} with the lexicographically smallest monic irreducible modulus,
// comparing coefficient tuples (c_{e-1}, ..., c_0). e = 1 gives F_p.
Ring make_finite_field(std::uint64_t p, unsigned e);

} // namespace wittkit

#endif

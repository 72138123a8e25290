#ifndef WITTKIT_COUNT_HPP
#define WITTKIT_COUNT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <wittkit/ring.hpp>

namespace wittkit
{

// F_Q, Q = p^e <= 2^22, for enumeration. Elements are coded by their
// discrete logarithm to a fixed primitive element; Q - 1 codes zero.
// Addition goes through a Zech table. The modulus is the one chosen by
// make_finite_field(p, e).
class GF
{
public:
    using Code = std::uint32_t;

    GF(std::uint64_t p, unsigned e);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    Code zero() const { return static_cast<Code>(q_ - 1); }
    Code one() const { return 0; }

    Code add(Code a, Code b) const
    {
        if (a == zero()) return b;
        if (b == zero()) return a;
        const std::uint64_t m = q_ - 1;
        const Code z = zech_[(b + m - a) % m];
        if (z == zero()) return z;
        return static_cast<Code>((a + z) % m);
    }
    Code mul(Code a, Code b) const
    {
        if (a == zero() || b == zero()) return zero();
        return static_cast<Code>((std::uint64_t{a} + b) % (q_ - 1));
    }
    Code neg(Code a) const { return a == zero() ? a : static_cast<Code>((a + minus_one_) % (q_ - 1)); }
    Code pow(Code a, std::uint64_t k) const
    {
        if (k == 0) return one();
        if (a == zero()) return a;
        return static_cast<Code>((std::uint64_t{a} * (k % (q_ - 1))) % (q_ - 1));
    }
    Code from_int(long v) const;

    // Base-p digit index (the element_from_index convention) <-> code.
    Code from_index(std::uint64_t idx) const { return log_[idx]; }
    std::uint64_t index(Code c) const { return c == zero() ? 0 : exp_[c]; }

    // Image of an element of F_{p^d}, d | e, under the embedding sending the
    // generator of make_finite_field(p, d) to its smallest root here.
    Code embed(const Elem &a) const;

private:
    std::uint64_t p_;
    unsigned e_;
    std::uint64_t q_;
    Code minus_one_ = 0;
    std::vector<std::uint64_t> exp_;
    std::vector<Code> log_;
    std::vector<Code> zech_;
    mutable std::map<unsigned, Code> subfield_gen_;
};

// Polynomial over F_q in any number of variables.
class SparsePoly
{
public:
    using Exps = std::vector<unsigned>;

    SparsePoly() = default;
    SparsePoly(Ring k, std::size_t nvars);
    static SparsePoly constant(const Elem &c, std::size_t nvars);
    static SparsePoly variable(const Ring &k, std::size_t nvars, std::size_t i);

    const Ring &field() const { return k_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exps, Elem> &terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    SparsePoly operator+(const SparsePoly &o) const;
    SparsePoly operator-(const SparsePoly &o) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly &o) const;
    SparsePoly scaled(const Elem &c) const;
    SparsePoly pow(unsigned k) const;
    SparsePoly derivative(std::size_t i) const;
    bool operator==(const SparsePoly &o) const { return k_ == o.k_ && nvars_ == o.nvars_ && t_ == o.t_; }
    std::string to_string(const std::vector<std::string> &names) const;

    void add_term(const Exps &e, const Elem &c);

private:
    Ring k_;
    std::size_t nvars_ = 0;
    std::map<Exps, Elem> t_;
};

// Coordinate names for n variables: x, y, z, w up to four, x1..xn beyond.
std::vector<std::string> default_coordinate_names(std::size_t nvars);

struct VarietySpec {
    Ring field; // F_q
    bool projective = true;
    std::size_t n = 0; // dimension of A^n or P^n
    std::vector<SparsePoly> polys;

    std::size_t nvars() const { return projective ? n + 1 : n; }
    // Checks field, variable counts and homogeneity; throws DomainError.
    void validate() const;
};

// Default 10^8, or WITTKIT_BUDGET when set.
std::uint64_t default_budget();

struct CountOptions {
    std::uint64_t budget = default_budget(); // polynomial evaluations
    unsigned threads = 0;                    // 0: hardware concurrency
    std::size_t chunks = 0;                  // 0: automatic
};

// |X(F_{q^s})|; throws BudgetError when points * polys exceeds the budget.
std::uint64_t count_points(const VarietySpec &X, unsigned s = 1, const CountOptions &opt = {});

struct CountReport {
    Int q;
    std::vector<std::uint64_t> N; // N[s-1] = |X(F_{q^s})|
};
CountReport count_tower(const VarietySpec &X, unsigned s_max, const CountOptions &opt = {});

Int proj_space_count(unsigned n, const Int &q);

// max{0, floor((n - d_2 - ... - d_r) / d_1)} with d_1 >= ... >= d_r; the
// degrees are sorted internally and *was_sorted reports whether they were.
unsigned axkatz_level(unsigned n, std::vector<unsigned> degrees, bool *was_sorted = nullptr);

struct CongruenceVerdict {
    unsigned kappa = 0;
    Int modulus;           // q^kappa
    std::uint64_t count = 0;
    Int lhs;               // |X(F_q)| mod q^kappa
    Int rhs;               // |P^n(F_q)| mod q^kappa
    bool pass = true;
    bool ax_case = false;  // a hypersurface of degree <= n
    bool ax_pass = true;   // |X(F_q)| = 1 mod q
};
// Projective varieties only; kappa defaults to the Ax-Katz level.
CongruenceVerdict check_congruence(const VarietySpec &X, std::optional<unsigned> kappa = std::nullopt, const CountOptions &opt = {});

// No point of X(F_{q^s}) where f and all its partials vanish; X a projective hypersurface.
bool jacobian_smooth(const VarietySpec &X, unsigned s, const CountOptions &opt = {});

struct EllipticReport {
    std::uint64_t p = 0;
    long a_p = 0;
    std::vector<std::uint64_t> enumerated; // N_s for s = 1..s_max
    std::vector<Int> predicted;            // p^s + 1 - (alpha^s + conj)
    bool hasse = false;                    // a_p^2 <= 4p
    bool tower_matches = false;
};
// y^2 z = x^3 + a x z^2 + b z^3 over F_p, p > 3.
VarietySpec elliptic_curve(long a, long b, std::uint64_t p);
EllipticReport elliptic_frobenius(long a, long b, std::uint64_t p, unsigned s_max, const CountOptions &opt = {});

} // namespace wittkit

#endif

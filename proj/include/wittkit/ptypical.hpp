#ifndef WITTKIT_PTYPICAL_HPP
#define WITTKIT_PTYPICAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <wittkit/ring.hpp>
#include <wittkit/series.hpp>
#include <wittkit/witt.hpp>

namespace wittkit
{

// p-typical Witt vector (y_0, ..., y_n) of W_n(A); y_i sits at index p^i.
// Ghost components are w_i = sum_{s<=i} p^s y_s^(p^(i-s)).
class PTypicalWitt
{
public:
    PTypicalWitt() = default;
    PTypicalWitt(std::uint64_t p, Ring r, std::vector<Elem> components);

    static PTypicalWitt zero(std::uint64_t p, const Ring &r, unsigned level);

    std::uint64_t prime() const { return p_; }
    const Ring &ring() const { return ring_; }
    unsigned level() const { return static_cast<unsigned>(y_.size() - 1); }
    // y_i, 0-based.
    const Elem &operator[](std::size_t i) const { return y_[i]; }
    const std::vector<Elem> &components() const { return y_; }

    bool operator==(const PTypicalWitt &o) const;
    bool operator!=(const PTypicalWitt &o) const { return !(*this == o); }
    std::string to_string() const;

private:
    std::uint64_t p_ = 2;
    Ring ring_;
    std::vector<Elem> y_;
};

struct ArtinHasseTrunc {
    std::uint64_t p;
    std::size_t m;
    TruncSeries series; // over Q, order m
};

// exp(-sum_{i>=0} t^(p^i)/p^i) mod t^(m+1).
ArtinHasseTrunc artin_hasse(std::uint64_t p, std::size_t m);

// True when every j <= m prime to p is invertible in r.
bool is_zp_algebra_upto(const Ring &r, std::uint64_t p, std::size_t m);

// from_one_unit of the Artin-Hasse truncation reduced into r; length m.
WittVector epsilon(std::uint64_t p, std::size_t m, const Ring &r);

// The n with j p^n <= m < j p^(n+1).
unsigned n_of_j(std::uint64_t j, std::uint64_t p, std::size_t m);
// The j <= m prime to p, increasing.
std::vector<std::uint64_t> split_indices(std::uint64_t p, std::size_t m);

using PTypicalSplit = std::map<std::uint64_t, PTypicalWitt>;

// W_m(A) -> prod_j W_{n(j)}(A), characterized by w_i(y^(j)) = gh_{j p^i}(w).
PTypicalSplit p_typical_split(const WittVector &w, std::uint64_t p);
// Inverse; m is recovered as the total number of components.
WittVector p_typical_join(const PTypicalSplit &parts, std::uint64_t p);

// Split polynomial y^(j)_i in the variables a_d, and the join polynomial a_n
// in the variables y^(j)_i (see ptypical_var).
const detail::EvalPoly &split_poly(std::uint64_t p, std::uint64_t j, unsigned i);
const detail::EvalPoly &join_poly(std::uint64_t p, std::uint64_t n);
inline constexpr detail::Var ptypical_var(std::uint64_t j, unsigned i)
{
    return static_cast<detail::Var>((static_cast<std::uint64_t>(i) << 24) | j);
}

std::vector<Elem> ghost(const PTypicalWitt &y);
PTypicalWitt ptypical_teichmueller(std::uint64_t p, const Elem &a, unsigned level);
PTypicalWitt ptypical_add(const PTypicalWitt &u, const PTypicalWitt &v);
PTypicalWitt ptypical_neg(const PTypicalWitt &u);
PTypicalWitt ptypical_mul(const PTypicalWitt &u, const PTypicalWitt &v);
// W_n -> W_{n-1}, n >= 1.
PTypicalWitt ptypical_frobenius(const PTypicalWitt &y);
// W_n -> W_{n+1}: (0, y_0, ..., y_n).
PTypicalWitt ptypical_verschiebung(const PTypicalWitt &y);

// Big Witt vector of length p^n carrying y at the indices p^i, zeros elsewhere.
WittVector to_big(const PTypicalWitt &y);
// Components of w at 1, p, p^2, ... (all of them up to the length).
PTypicalWitt from_big(const WittVector &w, std::uint64_t p);

} // namespace wittkit

#endif

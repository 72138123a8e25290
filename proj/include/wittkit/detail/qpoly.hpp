#ifndef WITTKIT_DETAIL_QPOLY_HPP
#define WITTKIT_DETAIL_QPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <wittkit/ring.hpp>

// Sparse polynomials over Q in integer-labelled variables. Only used to
// derive universal polynomials once; evaluation goes through EvalPoly.
namespace wittkit::detail
{

using Var = std::uint32_t;
using Mono = std::vector<std::pair<Var, std::uint32_t>>; // sorted by variable
using QPoly = std::map<Mono, Rat>;

QPoly qvar(Var v, unsigned e = 1);
QPoly qconst(const Rat &c);
QPoly qadd(const QPoly &a, const QPoly &b);
QPoly qsub(const QPoly &a, const QPoly &b);
QPoly qmul(const QPoly &a, const QPoly &b);
QPoly qscale(const QPoly &a, const Rat &c);
QPoly qpow(const QPoly &a, unsigned e);

// Polynomial ready for evaluation over any ring where its denominators are
// invertible.
class EvalPoly
{
public:
    EvalPoly() = default;
    explicit EvalPoly(const QPoly &p);

    bool integral() const;
    // Every denominator is prime to p.
    bool p_integral(std::uint64_t p) const;
    std::size_t size() const { return terms_.size(); }
    std::string to_string(const std::function<std::string(Var)> &name) const;

    // value(v) returns the value of variable v; all in ring r.
    Elem eval(const Ring &r, const std::function<const Elem &(Var)> &value) const;

private:
    struct Term {
        Mono mono;
        Rat coef;
    };
    std::vector<Term> terms_;
};

} // namespace wittkit::detail

#endif

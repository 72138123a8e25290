#ifndef WITTKIT_UNIPOLY_HPP
#define WITTKIT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include <wittkit/ring.hpp>

namespace wittkit
{

// Dense univariate polynomial over a Ring, low degree first, never with a
// zero leading coefficient.
class UniPoly
{
public:
    UniPoly();
    explicit UniPoly(Ring r);
    UniPoly(Ring r, std::vector<Elem> coeffs);

    static UniPoly constant(const Elem &c);
    static UniPoly x(const Ring &r);
    static UniPoly monomial(const Elem &c, std::size_t deg);
    // Product of (x - r) over the given roots.
    static UniPoly from_roots(const Ring &r, const std::vector<Elem> &roots);

    const Ring &ring() const { return ring_; }
    const std::vector<Elem> &coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    // Coefficient of x^i, zero beyond the degree.
    Elem operator[](std::size_t i) const;
    const Elem &lc() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator-(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator*(const UniPoly &a, const UniPoly &b);
    UniPoly scaled(const Elem &c) const;
    UniPoly shifted_up(std::size_t k) const;
    UniPoly truncated(std::size_t n) const;
    UniPoly pow(unsigned e) const;

    // Leading coefficient of b must be a unit.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly &a, const UniPoly &b);
    friend UniPoly operator/(const UniPoly &a, const UniPoly &b) { return divmod(a, b).first; }
    friend UniPoly operator%(const UniPoly &a, const UniPoly &b) { return divmod(a, b).second; }
    bool divides(const UniPoly &a) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    // Coefficients mapped through f.
    template <typename F>
    UniPoly map(const Ring &target, F &&f) const
    {
        std::vector<Elem> out;
        out.reserve(c_.size());
        for (const auto &c : c_) out.push_back(f(c));
        return UniPoly(target, std::move(out));
    }
    UniPoly change_ring(const Ring &target) const;

    // x may live in any ring containing ring().
    Elem eval(const Elem &x) const;
    UniPoly compose(const UniPoly &inner) const;
    // a(x + c)
    UniPoly taylor_shift(const Elem &c) const;
    UniPoly reversed(std::size_t n) const;

    bool operator==(const UniPoly &o) const;
    bool operator!=(const UniPoly &o) const { return !(*this == o); }

    std::string to_string(const std::string &var = "x") const;
    static int compare(const UniPoly &a, const UniPoly &b);

private:
    void trim();
    Ring ring_;
    std::vector<Elem> c_;
};

// Polynomial algorithms over fields.
UniPoly gcd(const UniPoly &a, const UniPoly &b);
// g = s a + t b with g monic.
struct XGcd {
    UniPoly g, s, t;
};
XGcd xgcd(const UniPoly &a, const UniPoly &b);
UniPoly powmod(const UniPoly &a, const Int &e, const UniPoly &m);
UniPoly invmod(const UniPoly &a, const UniPoly &m);

// Res(f, g) = lc(f)^deg g * prod over roots α of f of g(α). Throws on f = 0.
Elem resultant(const UniPoly &f, const UniPoly &g);

bool is_squarefree(const UniPoly &f);
bool is_separable(const UniPoly &f);

// Squarefree decomposition f = lc * prod g_i^i with g_i monic; works in
// characteristic p whenever p-th roots exist in the coefficient field.
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly &f);

} // namespace wittkit

#endif

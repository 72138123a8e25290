#ifndef WITTKIT_FORMS_HPP
#define WITTKIT_FORMS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <wittkit/cycles.hpp>
#include <wittkit/ring.hpp>
#include <wittkit/witt.hpp>

namespace wittkit
{

// Absolute Kaehler forms of L over Z, where L is k = F(t_1..t_r) with F one
// of Q, F_p, F_q (so Omega_F = 0), or a finite separable simple extension
// of such a k. Omega^n_L is free over L on dt_I, |I| = n; I is a bitmask.
class DiffForm
{
public:
    DiffForm() = default;
    // The zero form of degree n over L.
    DiffForm(Ring L, std::size_t degree);
    static DiffForm scalar(const Elem &a);

    const Ring &ring() const { return ring_; }
    std::size_t degree() const { return degree_; }
    // Number of transcendentals t_i.
    std::size_t rank() const;
    const std::vector<std::string> &variables() const;
    const std::map<unsigned, Elem> &terms() const { return c_; }
    Elem coefficient(unsigned mask) const;
    bool is_zero() const { return c_.empty(); }

    void add_term(unsigned mask, const Elem &c);
    DiffForm operator+(const DiffForm &o) const;
    DiffForm operator-(const DiffForm &o) const;
    DiffForm operator-() const;
    DiffForm scaled(const Elem &a) const;
    bool operator==(const DiffForm &o) const;
    bool operator!=(const DiffForm &o) const { return !(*this == o); }
    std::string to_string() const;

private:
    Ring ring_;
    std::size_t degree_ = 0;
    std::map<unsigned, Elem> c_;
};

// The function field k carrying the t_i under L (L itself or its base).
const Ring &transcendental_base(const Ring &L);
// d/dt_i of a in L, with dθ eliminated through g(θ) = 0.
Elem partial(const Elem &a, std::size_t i);
DiffForm d(const Elem &a);
DiffForm d(const DiffForm &w);
DiffForm dlog(const Elem &a);
DiffForm wedge(const DiffForm &a, const DiffForm &b);
// Coefficientwise Tr_{L/k}.
DiffForm trace_form(const DiffForm &w, const Ring &k);

// h(s) ds on P^1_k, with h in k(s).
struct RationalOneForm {
    Elem h;
    std::string to_string() const;
};

// Tr_{k(P)/k} of the local residue; at infinity in the coordinate 1/s.
Elem residue(const RationalOneForm &w, const P1Point &P);
// Nonzero residues at the poles of h and at infinity.
std::vector<std::pair<P1Point, Elem>> residues(const RationalOneForm &w);

// [P] -> Tr_{k(P)/k}(1/x(P) dlog y_1(P) ^ ... ^ dlog y_{n-1}(P)), Z-linearly.
DiffForm eval_cycle_mod2(const ZeroCycle &z);
// n = 1: [P] -> Tr_{k(P)/k}([1/x(P)]) in W_{m-1}(k), Z-linearly.
WittVector eval_cycle_general(const ZeroCycle &z, unsigned m);

struct MilnorImage {
    ZeroCycle cycle; // the point (1, a_1, ..., a_{n-1})
    DiffForm form;   // dlog a_1 ^ ... ^ dlog a_{n-1}
};
MilnorImage milnor_dlog(const std::vector<Elem> &symbol);

} // namespace wittkit

#endif

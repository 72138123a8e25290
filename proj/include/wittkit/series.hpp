#ifndef WITTKIT_SERIES_HPP
#define WITTKIT_SERIES_HPP

#include <string>
#include <vector>

#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>

namespace wittkit
{

// c_0 + c_1 t + ... + c_M t^M, arithmetic modulo t^(M+1).
class TruncSeries
{
public:
    TruncSeries() = default;
    TruncSeries(Ring r, std::size_t order);
    TruncSeries(Ring r, std::vector<Elem> coeffs); // order = size - 1

    static TruncSeries one(const Ring &r, std::size_t order);
    static TruncSeries from_poly(const UniPoly &f, std::size_t order);

    const Ring &ring() const { return ring_; }
    std::size_t order() const { return c_.size() - 1; }
    const std::vector<Elem> &coeffs() const { return c_; }
    const Elem &operator[](std::size_t i) const { return c_[i]; }
    Elem &operator[](std::size_t i) { return c_[i]; }

    friend TruncSeries operator+(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator-(const TruncSeries &a, const TruncSeries &b);
    friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
    TruncSeries scaled(const Elem &c) const;
    // Requires a unit constant term.
    TruncSeries inverse() const;
    TruncSeries derivative() const; // order drops by one
    // In place: multiply by (1 - c t^k), or divide by it.
    void mul_binomial(const Elem &c, std::size_t k);
    void div_binomial(const Elem &c, std::size_t k);
    TruncSeries truncated(std::size_t order) const;
    UniPoly to_poly() const;

    bool operator==(const TruncSeries &o) const;
    bool operator!=(const TruncSeries &o) const { return !(*this == o); }
    std::string to_string(const std::string &var = "t") const;

private:
    Ring ring_;
    std::vector<Elem> c_;
};

} // namespace wittkit

#endif

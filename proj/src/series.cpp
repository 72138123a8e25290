#include <wittkit/error.hpp>
#include <wittkit/series.hpp>

namespace wittkit
{

TruncSeries::TruncSeries(Ring r, std::size_t order) : ring_(std::move(r)), c_(order + 1, ring_.zero()) {}

TruncSeries::TruncSeries(Ring r, std::vector<Elem> coeffs) : ring_(std::move(r)), c_(std::move(coeffs))
{
    if (c_.empty()) throw DomainError("a truncated series needs at least one coefficient");
    for (auto &c : c_) {
        if (c.ring() != ring_) c = ring_.embed(c);
    }
}

TruncSeries TruncSeries::one(const Ring &r, std::size_t order)
{
    TruncSeries s(r, order);
    s.c_[0] = r.one();
    return s;
}

TruncSeries TruncSeries::from_poly(const UniPoly &f, std::size_t order)
{
    TruncSeries s(f.ring(), order);
    for (std::size_t i = 0; i < f.coeffs().size() && i <= order; ++i) s.c_[i] = f.coeffs()[i];
    return s;
}

TruncSeries operator+(const TruncSeries &a, const TruncSeries &b)
{
    if (a.order() != b.order()) throw DomainError("series orders differ");
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

TruncSeries operator-(const TruncSeries &a, const TruncSeries &b)
{
    if (a.order() != b.order()) throw DomainError("series orders differ");
    TruncSeries r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b)
{
    if (a.order() != b.order()) throw DomainError("series orders differ");
    const std::size_t M = a.order();
    TruncSeries r(a.ring_, M);
    for (std::size_t i = 0; i <= M; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= M; ++j) {
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Elem &c) const
{
    TruncSeries r = *this;
    for (auto &x : r.c_) x = x * c;
    return r;
}

TruncSeries TruncSeries::inverse() const
{
    if (!c_[0].is_unit()) throw DomainError("series constant term is not a unit");
    const Elem inv0 = c_[0].inv();
    TruncSeries r(ring_, order());
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Elem s = ring_.zero();
        for (std::size_t k = 1; k <= n; ++k) {
            if (!c_[k].is_zero()) s += c_[k] * r.c_[n - k];
        }
        r.c_[n] = -(s * inv0);
    }
    return r;
}

TruncSeries TruncSeries::derivative() const
{
    if (c_.size() == 1) return TruncSeries(ring_, 0);
    std::vector<Elem> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * ring_.from_int(static_cast<long>(i)));
    return TruncSeries(ring_, std::move(v));
}

void TruncSeries::mul_binomial(const Elem &c, std::size_t k)
{
    if (c.is_zero() || k >= c_.size()) return;
    for (std::size_t n = c_.size(); n-- > k;) {
        if (!c_[n - k].is_zero()) c_[n] -= c * c_[n - k];
    }
}

void TruncSeries::div_binomial(const Elem &c, std::size_t k)
{
    if (c.is_zero() || k >= c_.size()) return;
    for (std::size_t n = k; n < c_.size(); ++n) {
        if (!c_[n - k].is_zero()) c_[n] += c * c_[n - k];
    }
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    if (order > this->order()) throw DomainError("cannot extend a truncated series");
    return TruncSeries(ring_, std::vector<Elem>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

UniPoly TruncSeries::to_poly() const { return UniPoly(ring_, c_); }

bool TruncSeries::operator==(const TruncSeries &o) const { return c_ == o.c_; }

std::string TruncSeries::to_string(const std::string &var) const { return to_poly().to_string(var); }

} // namespace wittkit

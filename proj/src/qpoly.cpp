#include <algorithm>
#include <map>

#include <wittkit/detail/qpoly.hpp>

namespace wittkit::detail
{

namespace
{

Mono mono_mul(const Mono &a, const Mono &b)
{
    Mono r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

QPoly qvar(Var v, unsigned e)
{
    if (e == 0) return qconst(1);
    return QPoly{{Mono{{v, e}}, Rat(1)}};
}

QPoly qconst(const Rat &c)
{
    if (c == 0) return {};
    return QPoly{{Mono{}, c}};
}

QPoly qadd(const QPoly &a, const QPoly &b)
{
    QPoly r = a;
    for (const auto &[m, c] : b) {
        auto [it, inserted] = r.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

QPoly qsub(const QPoly &a, const QPoly &b) { return qadd(a, qscale(b, Rat(-1))); }

QPoly qmul(const QPoly &a, const QPoly &b)
{
    QPoly r;
    for (const auto &[m1, c1] : a) {
        for (const auto &[m2, c2] : b) {
            Mono m = mono_mul(m1, m2);
            auto [it, inserted] = r.emplace(std::move(m), c1 * c2);
            if (!inserted) it->second += c1 * c2;
        }
    }
    std::erase_if(r, [](const auto &kv) { return kv.second == 0; });
    return r;
}

QPoly qscale(const QPoly &a, const Rat &c)
{
    if (c == 0) return {};
    QPoly r = a;
    for (auto &[m, x] : r) x *= c;
    return r;
}

QPoly qpow(const QPoly &a, unsigned e)
{
    QPoly r = qconst(1), b = a;
    while (e) {
        if (e & 1) r = qmul(r, b);
        e >>= 1;
        if (e) b = qmul(b, b);
    }
    return r;
}

EvalPoly::EvalPoly(const QPoly &p)
{
    for (const auto &[m, c] : p) terms_.push_back({m, c});
}

bool EvalPoly::integral() const
{
    for (const auto &t : terms_) {
        if (t.coef.get_den() != 1) return false;
    }
    return true;
}

bool EvalPoly::p_integral(std::uint64_t p) const
{
    for (const auto &t : terms_) {
        if (mpz_divisible_ui_p(t.coef.get_den_mpz_t(), p)) return false;
    }
    return true;
}

std::string EvalPoly::to_string(const std::function<std::string(Var)> &name) const
{
    if (terms_.empty()) return "0";
    std::string s;
    // highest total degree first for readability
    std::vector<const Term *> order;
    for (const auto &t : terms_) order.push_back(&t);
    auto deg = [](const Term *t) {
        unsigned d = 0;
        for (const auto &[v, e] : t->mono) d += e;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](const Term *a, const Term *b) { return deg(a) > deg(b); });
    for (const Term *t : order) {
        std::string mono;
        for (const auto &[v, e] : t->mono) {
            if (!mono.empty()) mono += "*";
            mono += name(v);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        Rat c = t->coef;
        const bool neg = c < 0;
        if (neg) c = -c;
        std::string term;
        if (mono.empty()) {
            term = c.get_str();
        } else if (c == 1) {
            term = mono;
        } else {
            term = c.get_str() + "*" + mono;
        }
        if (s.empty()) {
            s = neg ? "-" + term : term;
        } else {
            s += (neg ? "-" : "+") + term;
        }
    }
    return s;
}

Elem EvalPoly::eval(const Ring &r, const std::function<const Elem &(Var)> &value) const
{
    // cache powers per variable
    std::map<Var, std::vector<Elem>> powers;
    for (const auto &t : terms_) {
        for (const auto &[v, e] : t.mono) {
            auto &pw = powers[v];
            if (pw.empty()) {
                pw.push_back(r.one());
                pw.push_back(value(v));
            }
            while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
        }
    }
    Elem sum = r.zero();
    for (const auto &t : terms_) {
        Elem m = r.one();
        bool zero = false;
        for (const auto &[v, e] : t.mono) {
            const Elem &x = powers[v][e];
            if (x.is_zero()) {
                zero = true;
                break;
            }
            m = m * x;
        }
        if (zero) continue;
        const Elem c = t.coef.get_den() == 1 ? r.from_int(t.coef.get_num()) : r.from_rational(t.coef);
        sum += c.is_one() ? m : c * m;
    }
    return sum;
}

} // namespace wittkit::detail

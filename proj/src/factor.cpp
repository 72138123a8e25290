#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include <wittkit/error.hpp>
#include <wittkit/factor.hpp>

namespace wittkit
{

namespace
{

void sort_factors(Factorization &fac)
{
    std::sort(fac.begin(), fac.end(), [](const auto &a, const auto &b) {
        const int c = UniPoly::compare(a.first, b.first);
        if (c) return c < 0;
        return a.second < b.second;
    });
    // merge repeated factors coming from different squarefree layers
    Factorization out;
    for (auto &f : fac) {
        if (!out.empty() && out.back().first == f.first) {
            out.back().second += f.second;
        } else {
            out.push_back(std::move(f));
        }
    }
    fac = std::move(out);
}

// ---------------------------------------------------------------------------
// Finite fields: distinct degree + Cantor-Zassenhaus.

std::vector<std::pair<UniPoly, int>> distinct_degree(UniPoly g)
{
    std::vector<std::pair<UniPoly, int>> out;
    const Ring &K = g.ring();
    const Int q = K.order();
    const UniPoly x = UniPoly::x(K);
    UniPoly h = x % g;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
        h = powmod(h, q, g);
        UniPoly gd = gcd(g, h - x);
        if (gd.degree() > 0) {
            out.emplace_back(gd, d);
            g = g / gd;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), g.degree());
    return out;
}

UniPoly random_poly(const Ring &K, int deg, std::mt19937_64 &rng)
{
    std::vector<Elem> c;
    const Int q = K.order();
    const bool small = q.fits_ulong_p();
    for (int i = 0; i < deg; ++i) {
        if (small) {
            c.push_back(K.element_from_index(rng() % q.get_ui()));
        } else {
            c.push_back(K.from_int(Int(static_cast<unsigned long>(rng() >> 1))));
        }
    }
    return UniPoly(K, std::move(c));
}

void equal_degree(const UniPoly &g, int d, std::mt19937_64 &rng, std::vector<UniPoly> &out)
{
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const Ring &K = g.ring();
    const Int q = K.order();
    const std::uint64_t p = K.char_p();
    const Int qd = ipow(q, static_cast<unsigned>(d));
    while (true) {
        UniPoly r = random_poly(K, g.degree(), rng);
        if (r.degree() < 1) continue;
        UniPoly w;
        if (p == 2) {
            // trace map r + r^2 + ... + r^(2^(kd-1))
            const std::size_t kd = K.ext_degree() * static_cast<std::size_t>(d);
            UniPoly s = r % g;
            w = s;
            for (std::size_t i = 1; i < kd; ++i) {
                s = (s * s) % g;
                w = w + s;
            }
        } else {
            w = powmod(r, Int((qd - 1) / 2), g) - UniPoly::constant(K.one());
        }
        UniPoly u = gcd(g, w);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
    }
}

Factorization factor_finite(const UniPoly &f)
{
    Factorization out;
    std::mt19937_64 rng(0x5eedf00dULL);
    for (const auto &[g, e] : squarefree_decomposition(f)) {
        for (const auto &[gd, d] : distinct_degree(g)) {
            std::vector<UniPoly> parts;
            equal_degree(gd, d, rng, parts);
            for (auto &h : parts) out.emplace_back(std::move(h), e);
        }
    }
    sort_factors(out);
    return out;
}

// ---------------------------------------------------------------------------
// Q: Zassenhaus over Z.

using ZPoly = std::vector<Int>;

void ztrim(ZPoly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Int zcontent(const ZPoly &a)
{
    Int g = 0;
    for (const auto &c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Primitive integer polynomial with positive leading coefficient, proportional to f.
ZPoly to_primitive_z(const UniPoly &f)
{
    Int l = 1;
    for (const auto &c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.as_rat().get_den_mpz_t());
    ZPoly z;
    for (const auto &c : f.coeffs()) z.push_back(Int(c.as_rat() * l));
    Int g = zcontent(z);
    if (z.back() < 0) g = -g;
    for (auto &c : z) c /= g;
    return z;
}

ZPoly zmul(const ZPoly &a, const ZPoly &b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

// Exact division in Z[x]; false when b does not divide a.
bool zdivide(const ZPoly &a, const ZPoly &b, ZPoly &q)
{
    if (b.empty()) return false;
    ZPoly r = a;
    if (r.size() < b.size()) return r.empty();
    const std::size_t db = b.size() - 1;
    q.assign(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
        const Int c = r[k] / b.back();
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    }
    for (std::size_t k = 0; k < db; ++k) {
        if (r[k] != 0) return false;
    }
    ztrim(q);
    return true;
}

Int symmetric_mod(const Int &a, const Int &m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

UniPoly reduce_mod_p(const ZPoly &a, const Ring &Fp)
{
    std::vector<Elem> c;
    for (const auto &x : a) c.push_back(Fp.from_int(x));
    return UniPoly(Fp, std::move(c));
}

ZPoly lift_to_z(const UniPoly &a)
{
    ZPoly z;
    for (const auto &c : a.coeffs()) z.push_back(Int(static_cast<unsigned long>(c.as_fp())));
    return z;
}

// Monic factors u_i of F mod p lifted to F = lc * prod u_i mod p^k.
std::vector<ZPoly> hensel_lift(const ZPoly &F, const std::vector<UniPoly> &us, std::uint64_t p, unsigned k)
{
    const Ring Fp = Ring::prime_field(p);
    const std::size_t r = us.size();
    std::vector<UniPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        UniPoly other = UniPoly::constant(Fp.one());
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i) other = other * us[j];
        }
        s[i] = invmod(other, us[i]);
    }
    std::vector<ZPoly> lifted;
    for (const auto &u : us) lifted.push_back(lift_to_z(u));
    const Int P(static_cast<unsigned long>(p));
    const Elem lc_inv = Fp.from_int(F.back()).inv();
    Int pj = P;
    for (unsigned j = 1; j < k; ++j) {
        ZPoly prod{F.back()};
        for (const auto &u : lifted) prod = zmul(prod, u);
        ZPoly e(F.size(), 0);
        for (std::size_t i = 0; i < F.size(); ++i) {
            Int d = F[i] - (i < prod.size() ? prod[i] : Int(0));
            WITTKIT_ASSERT(mpz_divisible_p(d.get_mpz_t(), pj.get_mpz_t()), "Hensel lifting lost its invariant");
            e[i] = d / pj;
        }
        const UniPoly ep = reduce_mod_p(e, Fp).scaled(lc_inv);
        for (std::size_t i = 0; i < r; ++i) {
            const UniPoly delta = (ep * s[i]) % us[i];
            for (std::size_t c = 0; c < delta.coeffs().size(); ++c) {
                lifted[i][c] += pj * Int(static_cast<unsigned long>(delta.coeffs()[c].as_fp()));
            }
        }
        pj *= P;
    }
    return lifted;
}

std::vector<ZPoly> factor_squarefree_z(const ZPoly &F)
{
    const int n = static_cast<int>(F.size()) - 1;
    if (n <= 1) return {F};
    // pick a prime giving few modular factors
    std::uint64_t best_p = 0;
    std::vector<UniPoly> best;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 5 && p < 1000; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(F.back().get_mpz_t(), p)) continue;
        const Ring Fp = Ring::prime_field(p);
        UniPoly fp = reduce_mod_p(F, Fp);
        if (!is_squarefree(fp)) continue;
        ++tried;
        std::vector<UniPoly> us;
        for (auto &[g, e] : factor_finite(fp)) us.push_back(g);
        if (best_p == 0 || us.size() < best.size()) {
            best_p = p;
            best = std::move(us);
        }
        if (best.size() == 1) break;
    }
    WITTKIT_ASSERT(best_p != 0, "no good reduction prime for a squarefree integer polynomial");
    if (best.size() == 1) return {F};

    // Mignotte-style bound on coefficients of any factor times lc
    Int maxc = 0;
    for (const auto &c : F) maxc = std::max(maxc, Int(abs(c)));
    Int bound = Int(abs(F.back())) * maxc * ipow(Int(2), static_cast<unsigned>(n)) * (n + 1);
    Int P(static_cast<unsigned long>(best_p));
    unsigned k = 1;
    Int pk = P;
    while (pk <= 2 * bound) {
        pk *= P;
        ++k;
    }
    std::vector<ZPoly> lifted = hensel_lift(F, best, best_p, k);

    std::vector<ZPoly> result;
    ZPoly G = F;
    std::vector<ZPoly> pool = lifted;
    for (std::size_t size = 1; 2 * size <= pool.size();) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            ZPoly cand{G.back()};
            for (auto i : idx) cand = zmul(cand, pool[i]);
            for (auto &c : cand) c = symmetric_mod(c, pk);
            ztrim(cand);
            Int ct = zcontent(cand);
            if (ct != 0) {
                for (auto &c : cand) c /= ct;
                if (cand.back() < 0) {
                    for (auto &c : cand) c = -c;
                }
                ZPoly q;
                if (zdivide(G, cand, q)) {
                    result.push_back(cand);
                    G = q;
                    std::vector<ZPoly> rest;
                    for (std::size_t i = 0; i < pool.size(); ++i) {
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
                    }
                    pool = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next combination
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (G.size() > 1) {
        if (G.back() < 0) {
            for (auto &c : G) c = -c;
        }
        result.push_back(G);
    }
    return result;
}

Factorization factor_rational(const UniPoly &f, const FactorOptions &opt)
{
    const Ring &Q = f.ring();
    Factorization out;
    for (const auto &[g, e] : squarefree_decomposition(f)) {
        if (g.degree() > opt.zassenhaus_cap) {
            throw DomainError("factorization over Q is capped at degree " + std::to_string(opt.zassenhaus_cap));
        }
        for (const auto &z : factor_squarefree_z(to_primitive_z(g))) {
            std::vector<Elem> c;
            for (const auto &x : z) c.push_back(Q.from_int(x));
            out.emplace_back(UniPoly(Q, std::move(c)).monic(), e);
        }
    }
    sort_factors(out);
    return out;
}

// ---------------------------------------------------------------------------
// Function fields K(t_1..t_r): specialize, factor over K, lift z-adically.

// Polynomial in u whose coefficients are polynomials in t (or z = t - a).
using BiPoly = std::vector<MPoly>;

BiPoly clear_denominators(const UniPoly &f)
{
    const Ring &F = f.ring();
    const Ring &K = F.base();
    const std::size_t nv = F.num_variables();
    MPoly l = MPoly::constant(K.one(), nv);
    for (const auto &c : f.coeffs()) {
        const MPoly &d = c.as_ratfn().den;
        l = exact_div(l * d, gcd(l, d));
    }
    BiPoly out;
    for (const auto &c : f.coeffs()) out.push_back(exact_div(c.as_ratfn().num * l, c.as_ratfn().den));
    MPoly g(K, nv);
    for (const auto &c : out) g = gcd(g, c);
    for (auto &c : out) c = exact_div(c, g);
    return out;
}

MPoly truncate_deg(const MPoly &a, unsigned D)
{
    std::vector<detail::MTerm> keep;
    for (const auto &t : a.terms()) {
        if (MPoly::key_degree(t.key) <= D) keep.push_back(t);
    }
    return MPoly::from_terms(a.constants(), a.nvars(), std::move(keep));
}

BiPoly bimul(const BiPoly &a, const BiPoly &b, unsigned D)
{
    if (a.empty() || b.empty()) return {};
    BiPoly r(a.size() + b.size() - 1, MPoly(a[0].constants(), a[0].nvars()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + truncate_deg(a[i] * b[j], D);
    }
    return r;
}

UniPoly specialize(const BiPoly &a, const std::vector<Elem> &pt, const Ring &K)
{
    std::vector<Elem> c;
    for (const auto &x : a) c.push_back(K.embed(x.eval(pt)));
    return UniPoly(K, std::move(c));
}

// Candidate evaluation points: small integers for Q, all of K^r for finite K.
bool next_point(const Ring &K, std::size_t r, std::uint64_t &counter, std::vector<Elem> &pt)
{
    pt.assign(r, K.zero());
    if (K.is_finite_field()) {
        const Int q = K.order();
        Int total = ipow(q, static_cast<unsigned>(r));
        if (Int(static_cast<unsigned long>(counter)) >= total) return false;
        std::uint64_t v = counter++;
        const std::uint64_t qq = q.get_ui();
        for (std::size_t i = 0; i < r; ++i) {
            pt[i] = K.element_from_index(v % qq);
            v /= qq;
        }
        return true;
    }
    // coordinates drawn from 0, 1, -1, 2, -2, 3, -3, 4, -4
    const std::uint64_t side = 9;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= side;
    if (counter >= total) return false;
    std::uint64_t v = counter++;
    for (std::size_t i = 0; i < r; ++i) {
        const std::uint64_t d = v % side;
        v /= side;
        const long val = d % 2 ? static_cast<long>((d + 1) / 2) : -static_cast<long>(d / 2);
        pt[i] = K.from_int(val);
    }
    return true;
}

std::vector<BiPoly> hensel_factor_bivariate(const BiPoly &F, const Ring &K, std::size_t nv)
{
    const int n = static_cast<int>(F.size()) - 1;
    if (n <= 1) return {F};
    std::vector<Elem> a;
    std::uint64_t counter = 0;
    UniPoly f0;
    bool ok = false;
    while (next_point(K, nv, counter, a)) {
        if (F.back().eval(a).is_zero()) continue;
        f0 = specialize(F, a, K);
        if (is_squarefree(f0)) {
            ok = true;
            break;
        }
    }
    if (!ok) throw DomainError("no squarefree specialization found over " + K.spec() + "; use a larger constant field");
    Factorization fac0 = factor_univariate(f0);
    if (fac0.size() == 1) return {F};

    unsigned deg_t = 0;
    for (const auto &c : F) deg_t = std::max(deg_t, static_cast<unsigned>(std::max(c.total_degree(), 0)));
    const unsigned D = deg_t + static_cast<unsigned>(F.back().total_degree());

    // shift t -> z + a
    BiPoly G;
    for (const auto &c : F) G.push_back(c.shifted(a));
    const MPoly lcG = G.back();
    // inverse of lcG as a power series in z up to degree D
    const Elem c0 = lcG.constant_term();
    const Elem c0inv = c0.inv();
    MPoly one = MPoly::constant(K.one(), nv);
    MPoly tail = one - lcG.scaled(c0inv); // lcG = c0 (1 - tail)
    MPoly inv = one, pw = one;
    for (unsigned k = 1; k <= D; ++k) {
        pw = truncate_deg(pw * tail, D);
        if (pw.is_zero()) break;
        inv = inv + pw;
    }
    inv = inv.scaled(c0inv);
    BiPoly Gm;
    for (const auto &c : G) Gm.push_back(truncate_deg(c * inv, D));

    std::vector<UniPoly> fs;
    for (const auto &[g, e] : fac0) fs.push_back(g);
    const std::size_t r = fs.size();
    std::vector<UniPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        UniPoly other = UniPoly::constant(K.one());
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i) other = other * fs[j];
        }
        s[i] = invmod(other, fs[i]);
    }
    std::vector<BiPoly> h(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (const auto &c : fs[i].coeffs()) h[i].push_back(MPoly::constant(c, nv));
    }
    for (unsigned k = 1; k <= D; ++k) {
        BiPoly prod{one};
        for (const auto &hi : h) prod = bimul(prod, hi, k);
        // degree-k homogeneous part of Gm - prod, grouped by monomial
        std::map<MPoly::Key, std::vector<Elem>> err;
        for (std::size_t j = 0; j < Gm.size(); ++j) {
            MPoly diff = Gm[j] - (j < prod.size() ? prod[j] : MPoly(K, nv));
            for (const auto &t : diff.terms()) {
                if (MPoly::key_degree(t.key) != k) continue;
                auto &v = err[t.key];
                v.resize(static_cast<std::size_t>(n) + 1, K.zero());
                v[j] = t.coef;
            }
        }
        for (auto &[key, coeffs] : err) {
            const UniPoly e(K, coeffs);
            for (std::size_t i = 0; i < r; ++i) {
                const UniPoly delta = (e * s[i]) % fs[i];
                for (std::size_t j = 0; j < delta.coeffs().size(); ++j) {
                    detail::MTerm term{key, delta.coeffs()[j]};
                    h[i][j] = h[i][j] + MPoly::from_terms(K, nv, {term});
                }
            }
        }
    }

    // recombination
    const Ring Fz = Ring::function_field(K, std::vector<std::string>(nv, "z"));
    std::vector<Elem> neg_a;
    for (const auto &x : a) neg_a.push_back(-x);
    auto to_field = [&](const BiPoly &b) {
        std::vector<Elem> c;
        for (const auto &m : b) {
            auto rf = std::make_shared<Elem::RatFn>();
            rf->num = m;
            rf->den = one;
            c.push_back(Elem(Fz, std::shared_ptr<const Elem::RatFn>(rf)));
        }
        return UniPoly(Fz, std::move(c));
    };

    std::vector<BiPoly> result;
    BiPoly cur = G;
    std::vector<BiPoly> pool = h;
    for (std::size_t size = 1; 2 * size <= pool.size();) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            BiPoly cand{cur.back()};
            for (auto i : idx) cand = bimul(cand, pool[i], D);
            MPoly ct(K, nv);
            for (const auto &c : cand) ct = gcd(ct, c);
            if (!ct.is_zero()) {
                for (auto &c : cand) c = exact_div(c, ct);
                const UniPoly cf = to_field(cand), gf = to_field(cur);
                auto [q, rem] = UniPoly::divmod(gf, cf);
                if (rem.is_zero()) {
                    result.push_back(cand);
                    cur = clear_denominators(q);
                    std::vector<BiPoly> rest;
                    for (std::size_t i = 0; i < pool.size(); ++i) {
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
                    }
                    pool = std::move(rest);
                    found = true;
                    break;
                }
            }
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (cur.size() > 1) result.push_back(cur);
    for (auto &b : result) {
        for (auto &c : b) c = c.shifted(neg_a);
    }
    return result;
}

Factorization factor_function_field(const UniPoly &f)
{
    const Ring &F = f.ring();
    const Ring &K = F.base();
    Factorization out;
    for (const auto &[g, e] : squarefree_decomposition(f)) {
        if (g.degree() == 1) {
            out.emplace_back(g, e);
            continue;
        }
        for (const auto &b : hensel_factor_bivariate(clear_denominators(g), K, F.num_variables())) {
            std::vector<Elem> c;
            for (const auto &m : b) {
                auto rf = std::make_shared<Elem::RatFn>();
                rf->num = m;
                rf->den = MPoly::constant(K.one(), F.num_variables());
                c.push_back(Elem(F, std::shared_ptr<const Elem::RatFn>(rf)));
            }
            out.emplace_back(UniPoly(F, std::move(c)).monic(), e);
        }
    }
    sort_factors(out);
    return out;
}

} // namespace

Factorization factor_univariate(const UniPoly &f, const FactorOptions &opt)
{
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (f.degree() == 0) return {};
    if (f.degree() == 1) return {{f.monic(), 1}};
    const Ring &R = f.ring();
    switch (R.kind()) {
    case RingKind::prime_field:
    case RingKind::ext_field:
        return factor_finite(f);
    case RingKind::rationals:
        return factor_rational(f, opt);
    case RingKind::function_field:
        return factor_function_field(f);
    default:
        throw DomainError("factorization is not supported over " + R.spec());
    }
}

Factorization factor_univariate(const UniPoly &f, const Ring &field, const FactorOptions &opt)
{
    return factor_univariate(f.change_ring(field), opt);
}

UniPoly expand(const Factorization &fac, const Ring &r)
{
    UniPoly p = UniPoly::constant(r.one());
    for (const auto &[g, e] : fac) p = p * g.pow(e);
    return p;
}

std::vector<Elem> roots(const UniPoly &f)
{
    std::vector<Elem> out;
    for (const auto &[g, e] : factor_univariate(f)) {
        if (g.degree() == 1) out.push_back(-g[0]);
    }
    std::sort(out.begin(), out.end(), [](const Elem &a, const Elem &b) { return Elem::compare(a, b) < 0; });
    return out;
}

bool is_irreducible(const UniPoly &f)
{
    if (f.degree() < 1) return false;
    auto fac = factor_univariate(f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace wittkit

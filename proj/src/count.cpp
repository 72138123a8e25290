#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include <wittkit/count.hpp>
#include <wittkit/error.hpp>
#include <wittkit/integer.hpp>

namespace wittkit
{

// ---------------------------------------------------------------------------
// GF

namespace
{

constexpr std::uint64_t max_field_order = std::uint64_t{1} << 22;

using Digits = std::vector<std::uint64_t>;

Digits mulmod_digits(const Digits &a, const Digits &b, const std::vector<std::uint64_t> &f, std::uint64_t p)
{
    const std::size_t e = f.size() - 1;
    std::vector<std::uint64_t> prod(2 * e - 1, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t k = prod.size(); k-- > e;) {
        const std::uint64_t c = prod[k];
        if (!c) continue;
        for (std::size_t i = 0; i <= e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * f[i]) % p;
    }
    prod.resize(e);
    return prod;
}

Digits powmod_digits(Digits a, std::uint64_t k, const std::vector<std::uint64_t> &f, std::uint64_t p)
{
    Digits r(f.size() - 1, 0);
    r[0] = 1;
    while (k) {
        if (k & 1) r = mulmod_digits(r, a, f, p);
        a = mulmod_digits(a, a, f, p);
        k >>= 1;
    }
    return r;
}

std::uint64_t digits_index(const Digits &d, std::uint64_t p)
{
    std::uint64_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return idx;
}

Digits index_digits(std::uint64_t idx, std::uint64_t p, std::size_t e)
{
    Digits d(e);
    for (auto &v : d) {
        v = idx % p;
        idx /= p;
    }
    return d;
}

} // namespace

GF::GF(std::uint64_t p, unsigned e) : p_(p), e_(e)
{
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (e < 1 || e > 16) throw DomainError("extension degree must lie in 1..16");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > max_field_order) throw DomainError("F_" + std::to_string(p) + "^" + std::to_string(e) + " is too large to tabulate");
    }
    std::vector<std::uint64_t> f;
    if (e == 1) {
        f = {0, 1}; // F_p[x]/(x): only the constant digit is used
    } else {
        f = make_finite_field(p, e).modulus_coeffs();
    }
    const std::uint64_t m = q_ - 1;
    const auto factors = prime_factors(m);
    auto is_generator = [&](const Digits &g) {
        for (std::uint64_t r : factors) {
            Digits h;
            if (e == 1) {
                h = {powmod_u64(g[0], m / r, p)};
            } else {
                h = powmod_digits(g, m / r, f, p);
            }
            if (digits_index(h, p) == 1) return false;
        }
        return true;
    };
    Digits g;
    for (std::uint64_t idx = 1; idx < q_; ++idx) {
        Digits c = index_digits(idx, p, e);
        if (m == 1 || is_generator(c)) {
            g = std::move(c);
            break;
        }
    }
    exp_.assign(m, 0);
    log_.assign(q_, zero());
    Digits cur = index_digits(1, p, e);
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t idx = digits_index(cur, p);
        exp_[i] = idx;
        log_[idx] = static_cast<Code>(i);
        if (e == 1) {
            cur[0] = mulmod_u64(cur[0], g[0], p);
        } else {
            cur = mulmod_digits(cur, g, f, p);
        }
    }
    zech_.assign(m, zero());
    for (std::uint64_t d = 0; d < m; ++d) {
        std::uint64_t idx = exp_[d];
        const std::uint64_t low = idx % p;
        idx = idx - low + (low + 1) % p;
        zech_[d] = log_[idx];
    }
    minus_one_ = p == 2 ? 0 : static_cast<Code>(m / 2);
}

GF::Code GF::from_int(long v) const
{
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return log_[static_cast<std::uint64_t>(r)];
}

GF::Code GF::embed(const Elem &a) const
{
    const Ring &F = a.ring();
    if (!F.is_finite_field() || F.char_p() != p_) throw DomainError("cannot embed an element of " + F.spec() + " into F_" + std::to_string(q_));
    if (F.kind() == RingKind::prime_field) return from_int(static_cast<long>(a.as_fp()));
    const unsigned d = static_cast<unsigned>(F.ext_degree());
    if (e_ % d != 0) throw DomainError(F.spec() + " is not a subfield of F_" + std::to_string(q_));
    const auto &fm = F.modulus_coeffs();
    Code root = zero();
    auto it = subfield_gen_.find(d);
    if (it != subfield_gen_.end() && fm == make_finite_field(p_, d).modulus_coeffs()) {
        root = it->second;
    } else {
        for (std::uint64_t idx = 1; idx < q_; ++idx) {
            const Code c = log_[idx];
            Code acc = zero();
            for (std::size_t i = fm.size(); i-- > 0;) acc = add(mul(acc, c), from_int(static_cast<long>(fm[i])));
            if (acc == zero()) {
                root = c;
                break;
            }
        }
        WITTKIT_ASSERT(root != zero(), "irreducible modulus has no root in an extension field");
        if (fm == make_finite_field(p_, d).modulus_coeffs()) subfield_gen_.emplace(d, root);
    }
    Code acc = zero();
    const auto &c = a.as_fq();
    for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, root), from_int(static_cast<long>(c[i])));
    return acc;
}

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly::SparsePoly(Ring k, std::size_t nvars) : k_(std::move(k)), nvars_(nvars) {}

SparsePoly SparsePoly::constant(const Elem &c, std::size_t nvars)
{
    SparsePoly r(c.ring(), nvars);
    r.add_term(Exps(nvars, 0), c);
    return r;
}

SparsePoly SparsePoly::variable(const Ring &k, std::size_t nvars, std::size_t i)
{
    if (i >= nvars) throw DomainError("variable index out of range");
    SparsePoly r(k, nvars);
    Exps e(nvars, 0);
    e[i] = 1;
    r.add_term(e, k.one());
    return r;
}

void SparsePoly::add_term(const Exps &e, const Elem &c0)
{
    if (e.size() != nvars_) throw DomainError("monomial has the wrong number of variables");
    const Elem c = k_.embed(c0);
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int SparsePoly::degree() const
{
    int d = -1;
    for (const auto &[e, c] : t_) {
        int s = 0;
        for (unsigned v : e) s += static_cast<int>(v);
        d = std::max(d, s);
    }
    return d;
}

bool SparsePoly::is_homogeneous() const
{
    const int d = degree();
    for (const auto &[e, c] : t_) {
        int s = 0;
        for (unsigned v : e) s += static_cast<int>(v);
        if (s != d) return false;
    }
    return true;
}

bool SparsePoly::is_constant() const { return degree() <= 0; }

SparsePoly SparsePoly::operator+(const SparsePoly &o) const
{
    if (nvars_ != o.nvars_) throw DomainError("polynomials in different numbers of variables");
    SparsePoly r = *this;
    for (const auto &[e, c] : o.t_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-() const { return scaled(k_.from_int(-1L)); }

SparsePoly SparsePoly::operator-(const SparsePoly &o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly &o) const
{
    if (nvars_ != o.nvars_) throw DomainError("polynomials in different numbers of variables");
    SparsePoly r(k_, nvars_);
    for (const auto &[a, ca] : t_) {
        for (const auto &[b, cb] : o.t_) {
            Exps e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

SparsePoly SparsePoly::scaled(const Elem &c) const
{
    SparsePoly r(k_, nvars_);
    for (const auto &[e, v] : t_) r.add_term(e, v * c);
    return r;
}

SparsePoly SparsePoly::pow(unsigned k) const
{
    SparsePoly r = constant(k_.one(), nvars_), b = *this;
    while (k) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

SparsePoly SparsePoly::derivative(std::size_t i) const
{
    SparsePoly r(k_, nvars_);
    for (const auto &[e, c] : t_) {
        if (e[i] == 0) continue;
        Exps f = e;
        --f[i];
        r.add_term(f, c * k_.from_int(static_cast<long>(e[i])));
    }
    return r;
}

std::string SparsePoly::to_string(const std::vector<std::string> &names) const
{
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!it->first[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
        }
        const std::string c = it->second.to_string();
        std::string term;
        if (mono.empty()) {
            term = c;
        } else if (it->second.is_one()) {
            term = mono;
        } else {
            term = (c.find_first_of("+-", 1) != std::string::npos ? "(" + c + ")" : c) + "*" + mono;
        }
        if (!s.empty()) s += " + ";
        s += term;
    }
    return s;
}

std::vector<std::string> default_coordinate_names(std::size_t nvars)
{
    static const char *small[] = {"x", "y", "z", "w"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nvars; ++i) out.push_back(nvars <= 4 ? small[i] : "x" + std::to_string(i + 1));
    return out;
}

void VarietySpec::validate() const
{
    if (!field.is_finite_field()) throw DomainError("point counting needs a finite field, got " + field.spec());
    if (projective && n == 0 && polys.empty()) return;
    for (const auto &f : polys) {
        if (f.nvars() != nvars()) throw DomainError("polynomial in " + std::to_string(f.nvars()) + " variables for an ambient space with " + std::to_string(nvars()));
        if (f.field() != field && !field.contains(f.field())) throw DomainError("polynomial over " + f.field().spec() + " in a variety over " + field.spec());
        if (projective && !f.is_homogeneous()) throw DomainError("inhomogeneous polynomial in projective space: " + f.to_string(default_coordinate_names(nvars())));
    }
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t default_budget()
{
    if (const char *v = std::getenv("WITTKIT_BUDGET")) {
        char *end = nullptr;
        const unsigned long long b = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && b > 0) return b;
    }
    return 100000000ULL;
}

namespace
{

struct CompiledPoly {
    // terms by exponent of the innermost variable: (coefficient, other exponents)
    std::vector<std::vector<std::pair<GF::Code, std::vector<unsigned>>>> by_last;
};

struct Task {
    std::size_t chart;      // projective: index of the first nonzero coordinate
    std::uint64_t lo, hi;   // range of outer indices
};

class Enumerator
{
public:
    Enumerator(const VarietySpec &X, const GF &F) : X_(X), F_(F), nv_(X.nvars())
    {
        for (const auto &f : X.polys) {
            CompiledPoly c;
            for (const auto &[e, coef] : f.terms()) {
                const unsigned last = nv_ ? e[nv_ - 1] : 0;
                if (c.by_last.size() <= last) c.by_last.resize(last + 1);
                c.by_last[last].emplace_back(F.embed(coef), std::vector<unsigned>(e.begin(), e.end() - (nv_ ? 1 : 0)));
            }
            polys_.push_back(std::move(c));
        }
    }

    // Points in one task: coordinates before the chart are 0, the chart
    // coordinate is 1, the remaining ones free (all free when affine).
    std::uint64_t run(const Task &t) const
    {
        const std::uint64_t Q = F_.q();
        std::vector<GF::Code> vals(nv_, F_.zero());
        const std::size_t first_free = X_.projective ? t.chart + 1 : 0;
        if (X_.projective) vals[t.chart] = F_.one();
        const bool inner = first_free < nv_;
        const std::size_t outer_begin = first_free, outer_end = inner ? nv_ - 1 : nv_;
        std::vector<std::vector<GF::Code>> coeffs(polys_.size());
        std::uint64_t count = 0;
        for (std::uint64_t idx = t.lo; idx < t.hi; ++idx) {
            std::uint64_t r = idx;
            for (std::size_t v = outer_begin; v < outer_end; ++v) {
                vals[v] = static_cast<GF::Code>(r % Q);
                r /= Q;
            }
            for (std::size_t k = 0; k < polys_.size(); ++k) coefficients(polys_[k], vals, coeffs[k]);
            if (!inner) {
                bool all = true;
                for (const auto &c : coeffs) all = all && (nv_ ? horner(c, vals[nv_ - 1]) : (c.empty() ? F_.zero() : c[0])) == F_.zero();
                count += all;
                continue;
            }
            for (std::uint64_t tv = 0; tv < Q; ++tv) {
                const auto x = static_cast<GF::Code>(tv);
                bool all = true;
                for (const auto &c : coeffs) {
                    if (horner(c, x) != F_.zero()) {
                        all = false;
                        break;
                    }
                }
                count += all;
            }
        }
        return count;
    }

private:
    void coefficients(const CompiledPoly &p, const std::vector<GF::Code> &vals, std::vector<GF::Code> &out) const
    {
        out.assign(p.by_last.size(), F_.zero());
        for (std::size_t j = 0; j < p.by_last.size(); ++j) {
            GF::Code acc = F_.zero();
            for (const auto &[c, e] : p.by_last[j]) {
                GF::Code m = c;
                for (std::size_t v = 0; v < e.size() && m != F_.zero(); ++v) {
                    if (e[v]) m = F_.mul(m, F_.pow(vals[v], e[v]));
                }
                acc = F_.add(acc, m);
            }
            out[j] = acc;
        }
    }

    GF::Code horner(const std::vector<GF::Code> &c, GF::Code x) const
    {
        if (c.empty()) return F_.zero();
        GF::Code acc = c.back();
        for (std::size_t j = c.size() - 1; j-- > 0;) acc = F_.add(F_.mul(acc, x), c[j]);
        return acc;
    }

    const VarietySpec &X_;
    const GF &F_;
    std::size_t nv_;
    std::vector<CompiledPoly> polys_;
};

Int ambient_points(const VarietySpec &X, const Int &Q)
{
    if (X.projective) return proj_space_count(static_cast<unsigned>(X.n), Q);
    return ipow(Q, X.n);
}

} // namespace

std::uint64_t count_points(const VarietySpec &X, unsigned s, const CountOptions &opt)
{
    X.validate();
    if (s < 1) throw DomainError("tower level must be >= 1");
    const std::uint64_t p = X.field.char_p();
    const unsigned e = static_cast<unsigned>(X.field.ext_degree()) * s;
    Int Q = ipow(Int(static_cast<unsigned long>(p)), e);
    const Int evals = ambient_points(X, Q) * Int(static_cast<unsigned long>(std::max<std::size_t>(1, X.polys.size())));
    if (evals > Int(static_cast<unsigned long>(opt.budget))) {
        throw BudgetError("enumerating X(F_" + Q.get_str() + ") needs " + evals.get_str() + " evaluations, over the budget of " + std::to_string(opt.budget));
    }
    const GF F(p, e);
    const Enumerator en(X, F);
    const std::uint64_t q = F.q();

    // Split the outer loops into tasks.
    std::vector<Task> tasks;
    const std::size_t nv = X.nvars();
    const unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    auto add_range = [&](std::size_t chart, std::uint64_t total) {
        std::size_t pieces = opt.chunks ? opt.chunks : static_cast<std::size_t>(threads) * 4;
        pieces = static_cast<std::size_t>(std::min<std::uint64_t>(pieces, total));
        for (std::size_t i = 0; i < pieces; ++i) tasks.push_back({chart, total * i / pieces, total * (i + 1) / pieces});
    };
    auto outer_count = [&](std::size_t free_vars) {
        std::uint64_t t = 1;
        for (std::size_t i = 1; i < free_vars; ++i) t *= q;
        return t;
    };
    if (X.projective) {
        for (std::size_t chart = 0; chart < nv; ++chart) add_range(chart, outer_count(nv - chart - 1));
    } else {
        add_range(0, outer_count(nv));
    }

    std::vector<std::uint64_t> result(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) result[i] = en.run(tasks[i]);
    };
    const unsigned nthreads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (auto v : result) total += v;
    return total;
}

CountReport count_tower(const VarietySpec &X, unsigned s_max, const CountOptions &opt)
{
    CountReport r;
    r.q = X.field.order();
    for (unsigned s = 1; s <= s_max; ++s) r.N.push_back(count_points(X, s, opt));
    return r;
}

Int proj_space_count(unsigned n, const Int &q)
{
    Int s = 0, pw = 1;
    for (unsigned i = 0; i <= n; ++i, pw *= q) s += pw;
    return s;
}

unsigned axkatz_level(unsigned n, std::vector<unsigned> degrees, bool *was_sorted)
{
    if (degrees.empty()) throw DomainError("the Ax-Katz level needs at least one degree");
    for (unsigned d : degrees) {
        if (d < 1) throw DomainError("degrees must be >= 1");
    }
    const bool sorted = std::is_sorted(degrees.begin(), degrees.end(), std::greater<>());
    if (was_sorted) *was_sorted = sorted;
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    long num = static_cast<long>(n);
    for (std::size_t i = 1; i < degrees.size(); ++i) num -= degrees[i];
    if (num <= 0) return 0;
    return static_cast<unsigned>(num / static_cast<long>(degrees[0]));
}

CongruenceVerdict check_congruence(const VarietySpec &X, std::optional<unsigned> kappa, const CountOptions &opt)
{
    if (!X.projective) throw DomainError("the congruence check compares with |P^n(F_q)| and needs a projective variety");
    std::vector<unsigned> degs;
    for (const auto &f : X.polys) {
        if (f.is_zero()) continue;
        if (f.degree() < 1) throw DomainError("a nonzero constant equation defines the empty set");
        degs.push_back(static_cast<unsigned>(f.degree()));
    }
    CongruenceVerdict v;
    v.kappa = kappa ? *kappa : (degs.empty() ? 0 : axkatz_level(static_cast<unsigned>(X.n), degs));
    const Int q = X.field.order();
    v.modulus = ipow(q, v.kappa);
    v.count = count_points(X, 1, opt);
    const Int N(static_cast<unsigned long>(v.count));
    v.lhs = N % v.modulus;
    v.rhs = proj_space_count(static_cast<unsigned>(X.n), q) % v.modulus;
    v.pass = v.lhs == v.rhs;
    v.ax_case = degs.size() == 1 && degs[0] <= X.n;
    if (v.ax_case) v.ax_pass = N % q == 1 % q;
    return v;
}

bool jacobian_smooth(const VarietySpec &X, unsigned s, const CountOptions &opt)
{
    if (!X.projective || X.polys.size() != 1) throw DomainError("the Jacobian check takes one homogeneous polynomial");
    VarietySpec J = X;
    for (std::size_t i = 0; i < X.nvars(); ++i) J.polys.push_back(X.polys[0].derivative(i));
    return count_points(J, s, opt) == 0;
}

VarietySpec elliptic_curve(long a, long b, std::uint64_t p)
{
    if (p <= 3 || !is_prime(p)) throw DomainError("elliptic curves here need a prime p > 3");
    const Ring F = Ring::prime_field(p);
    const Elem disc = F.from_int(4L) * F.from_int(a).pow(3L) + F.from_int(27L) * F.from_int(b).pow(2L);
    if (disc.is_zero()) throw DomainError("4a^3 + 27b^2 = 0 mod " + std::to_string(p) + ": the curve is singular");
    const SparsePoly x = SparsePoly::variable(F, 3, 0), y = SparsePoly::variable(F, 3, 1), z = SparsePoly::variable(F, 3, 2);
    const SparsePoly f = y.pow(2) * z - x.pow(3) - (x * z.pow(2)).scaled(F.from_int(a)) - z.pow(3).scaled(F.from_int(b));
    return VarietySpec{F, true, 2, {f}};
}

EllipticReport elliptic_frobenius(long a, long b, std::uint64_t p, unsigned s_max, const CountOptions &opt)
{
    if (s_max < 1) throw DomainError("s_max must be >= 1");
    const VarietySpec E = elliptic_curve(a, b, p);
    EllipticReport r;
    r.p = p;
    for (unsigned s = 1; s <= s_max; ++s) r.enumerated.push_back(count_points(E, s, opt));
    r.a_p = static_cast<long>(p) + 1 - static_cast<long>(r.enumerated[0]);
    r.hasse = r.a_p * r.a_p <= 4 * static_cast<long>(p);
    // t_s = alpha^s + conj(alpha): t_0 = 2, t_1 = a_p, t_{s+1} = a_p t_s - p t_{s-1}
    const Int P(static_cast<unsigned long>(p)), A(r.a_p);
    Int t0 = 2, t1 = A, pw = P;
    r.tower_matches = true;
    for (unsigned s = 1; s <= s_max; ++s) {
        r.predicted.push_back(pw + 1 - t1);
        if (r.predicted.back() != Int(static_cast<unsigned long>(r.enumerated[s - 1]))) r.tower_matches = false;
        Int t2 = A * t1 - P * t0;
        t0 = t1;
        t1 = t2;
        pw *= P;
    }
    return r;
}

} // namespace wittkit

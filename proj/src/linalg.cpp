#include <wittkit/error.hpp>
#include <wittkit/linalg.hpp>

namespace wittkit
{

namespace
{

// Row echelon form in place; returns pivot columns. sign flips on swaps.
std::vector<std::size_t> echelon(Matrix &a, std::size_t cols, bool &negated)
{
    std::vector<std::size_t> pivots;
    negated = false;
    const std::size_t rows = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            negated = !negated;
        }
        const Elem inv = a[r][c].inv();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const Elem f = a[i][c] * inv;
            for (std::size_t j = c; j < a[i].size(); ++j) {
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix a)
{
    if (a.empty()) return 0;
    bool neg;
    return echelon(a, a[0].size(), neg).size();
}

Elem determinant(Matrix a)
{
    const std::size_t n = a.size();
    if (n == 0) throw DomainError("determinant of an empty matrix");
    bool neg;
    auto piv = echelon(a, n, neg);
    const Ring &R = a[0][0].ring();
    if (piv.size() < n) return R.zero();
    Elem d = R.one();
    for (std::size_t i = 0; i < n; ++i) d *= a[i][i];
    return neg ? -d : d;
}

std::optional<std::vector<Elem>> solve(Matrix a, std::vector<Elem> b)
{
    const std::size_t rows = a.size();
    if (rows == 0) return std::vector<Elem>{};
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    bool neg;
    auto piv = echelon(a, cols, neg);
    const Ring &R = a[0][cols].ring();
    for (std::size_t i = piv.size(); i < rows; ++i) {
        if (!a[i][cols].is_zero()) return std::nullopt;
    }
    std::vector<Elem> x(cols, R.zero());
    for (std::size_t k = piv.size(); k-- > 0;) {
        const std::size_t c = piv[k];
        Elem s = a[k][cols];
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (!a[k][j].is_zero()) s -= a[k][j] * x[j];
        }
        x[c] = s / a[k][c];
    }
    return x;
}

UniPoly charpoly(const Matrix &m, const Ring &k)
{
    const std::size_t n = m.size();
    Matrix h = m;
    // similarity reduction to upper Hessenberg form
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t p = c + 1;
        while (p < n && h[p][c].is_zero()) ++p;
        if (p == n) continue;
        if (p != c + 1) {
            std::swap(h[p], h[c + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][p], h[i][c + 1]);
        }
        const Elem inv = h[c + 1][c].inv();
        for (std::size_t j = c + 2; j < n; ++j) {
            if (h[j][c].is_zero()) continue;
            const Elem u = h[j][c] * inv;
            for (std::size_t col = 0; col < n; ++col) {
                if (!h[c + 1][col].is_zero()) h[j][col] -= u * h[c + 1][col];
            }
            for (std::size_t row = 0; row < n; ++row) {
                if (!h[row][j].is_zero()) h[row][c + 1] += u * h[row][j];
            }
        }
    }
    std::vector<UniPoly> p(n + 1);
    p[0] = UniPoly::constant(k.one());
    const UniPoly x = UniPoly::x(k);
    for (std::size_t kk = 1; kk <= n; ++kk) {
        p[kk] = (x - UniPoly::constant(h[kk - 1][kk - 1])) * p[kk - 1];
        Elem t = k.one();
        for (std::size_t i = kk - 1; i >= 1; --i) {
            t *= h[i][i - 1];
            if (t.is_zero()) break;
            p[kk] = p[kk] - p[i - 1].scaled(t * h[i - 1][kk - 1]);
        }
    }
    return p[n];
}

bool is_extension_of(const Ring &L, const Ring &k)
{
    if (L == k) return true;
    if (L.kind() == RingKind::simple_ext) return L.base() == k;
    if (L.kind() == RingKind::ext_field) return k.kind() == RingKind::prime_field && k.char_p() == L.char_p();
    return false;
}

std::size_t extension_degree(const Ring &L, const Ring &k)
{
    if (!is_extension_of(L, k)) throw DomainError(L.spec() + " is not presented as an extension of " + k.spec());
    if (L == k) return 1;
    return L.ext_degree();
}

std::vector<Elem> coordinates(const Elem &a, const Ring &k)
{
    const Ring &L = a.ring();
    if (L == k) return {a};
    if (!is_extension_of(L, k)) throw DomainError(L.spec() + " is not presented as an extension of " + k.spec());
    if (L.kind() == RingKind::simple_ext) return a.as_ext();
    std::vector<Elem> c;
    for (auto v : a.as_fq()) c.push_back(Elem(k, v));
    return c;
}

Elem from_coordinates(const Ring &L, const std::vector<Elem> &c)
{
    if (L.kind() == RingKind::simple_ext && c.size() == L.ext_degree()) {
        Elem::ExtRep v;
        for (const auto &x : c) v.push_back(L.base().embed(x));
        return Elem(L, std::move(v));
    }
    if (L.kind() == RingKind::ext_field && c.size() == L.ext_degree()) {
        Elem::FqRep v;
        for (const auto &x : c) v.push_back(x.as_fp());
        return Elem(L, std::move(v));
    }
    if (c.size() == 1) return L.embed(c[0]);
    throw DomainError("coordinate vector does not match the extension degree");
}

Elem basis_element(const Ring &L, std::size_t i)
{
    if (i == 0) return L.one();
    return L.generator().pow(static_cast<long>(i));
}

Matrix multiplication_matrix(const Elem &a, const Ring &k)
{
    const Ring &L = a.ring();
    const std::size_t d = extension_degree(L, k);
    Matrix m(d, std::vector<Elem>(d, k.zero()));
    Elem b = L.one();
    const Elem g = d > 1 ? L.generator() : L.one();
    for (std::size_t j = 0; j < d; ++j) {
        const std::vector<Elem> c = coordinates(a * b, k);
        for (std::size_t i = 0; i < d; ++i) m[i][j] = c[i];
        b = b * g;
    }
    return m;
}

UniPoly field_charpoly(const Elem &a, const Ring &k) { return charpoly(multiplication_matrix(a, k), k); }

Elem field_trace(const Elem &a, const Ring &k)
{
    const Matrix m = multiplication_matrix(a, k);
    Elem t = k.zero();
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

Elem field_norm(const Elem &a, const Ring &k) { return determinant(multiplication_matrix(a, k)); }

void require_separable(const Ring &L, const Ring &k)
{
    if (!is_extension_of(L, k)) throw DomainError(L.spec() + " is not presented as an extension of " + k.spec());
    if (L.kind() == RingKind::simple_ext && !is_separable(L.minpoly())) {
        throw DomainError("extension " + L.spec() + " is inseparable");
    }
}

} // namespace wittkit

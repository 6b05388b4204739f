#include "nestquad/exact_linear.hpp"

#include <stdexcept>

namespace nestquad {

namespace {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

/// Multiplies each row by the lcm of its denominators. Returns the scaled
/// integer matrix and the product of the (positive) row factors.
IntegerMatrix to_integer_rows(const RationalMatrix& m, mpz_class& scale)
{
    IntegerMatrix out;
    out.reserve(m.size());
    scale = 1;
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get().get_den_mpz_t());
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto& x : row)
            r.push_back(x.get().get_num() * (l / x.get().get_den()));
        out.push_back(std::move(r));
        scale *= l;
    }
    return out;
}

void check_square(const RationalMatrix& m)
{
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("matrix is not square");
}

/// In-place Bareiss forward elimination on the first `n` columns with
/// row pivoting. Returns false when a zero column blocks elimination.
/// `sign` tracks row swaps.
bool bareiss(IntegerMatrix& a, std::size_t n, int& sign)
{
    sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0)
                ++r;
            if (r == n)
                return false;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < a[i].size(); ++j) {
                mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

} // namespace

Rational determinant(const RationalMatrix& m)
{
    check_square(m);
    if (m.empty())
        return Rational(1);
    mpz_class scale;
    IntegerMatrix a = to_integer_rows(m, scale);
    int sign = 1;
    if (!bareiss(a, m.size(), sign))
        return Rational(0);
    return Rational(a.back().back() * sign, scale);
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    check_square(a);
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("right-hand side length mismatch");

    RationalMatrix augmented = a;
    for (std::size_t i = 0; i < n; ++i)
        augmented[i].push_back(b[i]);
    mpz_class scale;
    IntegerMatrix m = to_integer_rows(augmented, scale);
    int sign = 1;
    if (!bareiss(m, n, sign))
        return std::nullopt;

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc(m[i][n], 1);
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= Rational(m[i][j], 1) * x[j];
        x[i] = acc / Rational(m[i][i], 1);
    }
    return x;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m)
{
    check_square(m);
    const std::size_t n = m.size();
    std::vector<Rational> minors;
    minors.reserve(n);

    mpz_class unused;
    IntegerMatrix a = to_integer_rows(m, unused);
    std::vector<mpz_class> row_scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (const auto& x : m[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get().get_den_mpz_t());
        row_scale[i] = l;
    }

    // Without pivoting, the k-th Bareiss pivot is the k-th leading minor.
    mpz_class prev = 1;
    mpz_class scale = 1;
    for (std::size_t k = 0; k < n; ++k) {
        scale *= row_scale[k];
        minors.emplace_back(a[k][k], scale);
        if (a[k][k] == 0) {
            // Elimination cannot continue; fall back to direct determinants.
            for (std::size_t j = k + 1; j < n; ++j) {
                RationalMatrix sub(j + 1);
                for (std::size_t r = 0; r <= j; ++r)
                    sub[r].assign(m[r].begin(), m[r].begin() + static_cast<long>(j + 1));
                minors.push_back(determinant(sub));
            }
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return minors;
}

Rational resultant(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant with the zero polynomial");
    const int n = a.degree();
    const int m = b.degree();
    if (n == 0)
        return pow(a.leading(), static_cast<unsigned>(m));
    if (m == 0)
        return pow(b.leading(), static_cast<unsigned>(n));

    // m shifted copies of a, then n shifted copies of b, coefficients in
    // descending order.
    const auto size = static_cast<std::size_t>(n + m);
    RationalMatrix s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + n - k)] = a.coefficients()[static_cast<std::size_t>(k)];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + m - k)] = b.coefficients()[static_cast<std::size_t>(k)];
    return determinant(s);
}

Rational discriminant(const Polynomial& p)
{
    const int n = p.degree();
    if (n < 1)
        throw std::invalid_argument("discriminant requires degree >= 1");
    if (n == 1)
        return Rational(1);
    Rational d = resultant(p, p.derivative()) / p.leading();
    if ((n * (n - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

} // namespace nestquad

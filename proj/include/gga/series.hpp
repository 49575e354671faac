#ifndef GGA_SERIES_HPP
#define GGA_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <gga/errors.hpp>

namespace gga
{

using integer = boost::multiprecision::cpp_int;

// Formal power series in q with exact integer coefficients, known through
// degree trunc() inclusive. Coefficients above the truncation are not
// represented at all. Values are immutable once constructed.
class TruncatedSeries
{
public:
    // The zero series with truncation N.
    explicit TruncatedSeries(int N = 0) : m_coeffs(checked_length(N)) {}

    explicit TruncatedSeries(std::vector<integer> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw truncation_error("a truncated series needs at least the q^0 coefficient");
        }
    }

    TruncatedSeries(std::initializer_list<long long> coeffs)
        : TruncatedSeries(std::vector<integer>(coeffs.begin(), coeffs.end()))
    {
    }

    static TruncatedSeries zero(int N)
    {
        return TruncatedSeries(N);
    }

    static TruncatedSeries one(int N)
    {
        return monomial(0, N);
    }

    // q^e truncated at N; the zero series when e > N.
    static TruncatedSeries monomial(int e, int N)
    {
        std::vector<integer> c(checked_length(N));
        if (e < 0) {
            throw truncation_error("negative exponent");
        }
        if (e <= N) {
            c[static_cast<std::size_t>(e)] = 1;
        }
        return TruncatedSeries(std::move(c));
    }

    int trunc() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }

    // Unchecked access, 0 <= j <= trunc().
    const integer &operator[](int j) const
    {
        return m_coeffs[static_cast<std::size_t>(j)];
    }

    const integer &at(int j) const
    {
        if (j < 0 || j > trunc()) {
            throw truncation_error("coefficient q^" + std::to_string(j) + " is outside the certified range 0.."
                                   + std::to_string(trunc()));
        }
        return (*this)[j];
    }

    std::span<const integer> coeffs() const
    {
        return m_coeffs;
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const integer &c) { return c == 0; });
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    static std::size_t checked_length(int N)
    {
        if (N < 0) {
            throw truncation_error("truncation degree must be nonnegative");
        }
        return static_cast<std::size_t>(N) + 1;
    }

    std::vector<integer> m_coeffs;
};

inline TruncatedSeries series_one(int N)
{
    return TruncatedSeries::one(N);
}

// Restriction to a smaller certified range.
inline TruncatedSeries truncate(const TruncatedSeries &a, int N)
{
    if (N > a.trunc()) {
        throw truncation_error("cannot extend the certified range of a series from " + std::to_string(a.trunc())
                               + " to " + std::to_string(N));
    }
    auto c = a.coeffs().first(static_cast<std::size_t>(N) + 1);
    return TruncatedSeries(std::vector<integer>(c.begin(), c.end()));
}

inline TruncatedSeries add(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int N = std::min(a.trunc(), b.trunc());
    std::vector<integer> c(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        c[static_cast<std::size_t>(j)] = a[j] + b[j];
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries sub(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int N = std::min(a.trunc(), b.trunc());
    std::vector<integer> c(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        c[static_cast<std::size_t>(j)] = a[j] - b[j];
    }
    return TruncatedSeries(std::move(c));
}

// Truncated Cauchy product.
inline TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int N = std::min(a.trunc(), b.trunc());
    std::vector<integer> c(static_cast<std::size_t>(N) + 1);
    for (int u = 0; u <= N; ++u) {
        if (a[u] == 0) {
            continue;
        }
        for (int v = 0; u + v <= N; ++v) {
            if (b[v] != 0) {
                c[static_cast<std::size_t>(u + v)] += a[u] * b[v];
            }
        }
    }
    return TruncatedSeries(std::move(c));
}

// q^w * a with the truncation of a; the top w coefficients fall off.
inline TruncatedSeries shift(const TruncatedSeries &a, int w)
{
    if (w < 0) {
        throw truncation_error("shift weight must be nonnegative");
    }
    const int N = a.trunc();
    std::vector<integer> c(static_cast<std::size_t>(N) + 1);
    for (int j = w; j <= N; ++j) {
        c[static_cast<std::size_t>(j)] = a[j - w];
    }
    return TruncatedSeries(std::move(c));
}

// q^w * a certified through trunc(a) + w: multiplying by q^w moves every
// known coefficient up without losing any.
inline TruncatedSeries shift_extend(const TruncatedSeries &a, int w)
{
    if (w < 0) {
        throw truncation_error("shift weight must be nonnegative");
    }
    std::vector<integer> c(static_cast<std::size_t>(a.trunc() + w) + 1);
    std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + w);
    return TruncatedSeries(std::move(c));
}

// Exact a / q^w. The certified range shrinks by w.
inline TruncatedSeries div_q_pow(const TruncatedSeries &a, int w)
{
    if (w < 0) {
        throw truncation_error("division exponent must be nonnegative");
    }
    if (w > a.trunc()) {
        throw truncation_error("dividing by q^" + std::to_string(w) + " leaves no certified coefficients (trunc "
                               + std::to_string(a.trunc()) + ")");
    }
    for (int j = 0; j < w; ++j) {
        if (a[j] != 0) {
            throw non_divisible("series is not divisible by q^" + std::to_string(w) + ": coefficient of q^"
                                + std::to_string(j) + " is " + a[j].str());
        }
    }
    auto c = a.coeffs().subspan(static_cast<std::size_t>(w));
    return TruncatedSeries(std::vector<integer>(c.begin(), c.end()));
}

inline TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return add(a, b);
}

inline TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return sub(a, b);
}

inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return mul(a, b);
}

// Expansion of prod_{m in parts} 1/(1 - q^m) through q^N. Parts above N are
// irrelevant and skipped. The coefficient of q^n is the number of partitions
// of n with parts drawn from `parts`.
inline TruncatedSeries product_geometric_inverses(std::span<const int> parts, int N)
{
    if (N < 0) {
        throw truncation_error("truncation degree must be nonnegative");
    }
    std::vector<integer> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    int previous = 0;
    for (int m : parts) {
        if (m <= 0) {
            throw invalid_part("part sizes must be positive, got " + std::to_string(m));
        }
        if (m <= previous) {
            throw invalid_part("part sizes must be strictly increasing");
        }
        previous = m;
        for (int j = m; j <= N; ++j) {
            c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - m)];
        }
    }
    return TruncatedSeries(std::move(c));
}

inline TruncatedSeries product_geometric_inverses(std::initializer_list<int> parts, int N)
{
    return product_geometric_inverses(std::span<const int>(parts.begin(), parts.size()), N);
}

struct Mismatch {
    int degree;
    integer lhs;
    integer rhs;
};

struct SeriesMatch {
    bool equal = true;
    std::optional<Mismatch> mismatch;

    explicit operator bool() const
    {
        return equal;
    }
};

// Coefficientwise comparison through q^N, reporting the lowest differing
// degree.
inline SeriesMatch eq_up_to(const TruncatedSeries &a, const TruncatedSeries &b, int N)
{
    if (N > a.trunc() || N > b.trunc()) {
        throw truncation_error("comparison through q^" + std::to_string(N) + " exceeds the certified ranges ("
                               + std::to_string(a.trunc()) + ", " + std::to_string(b.trunc()) + ")");
    }
    for (int j = 0; j <= N; ++j) {
        if (a[j] != b[j]) {
            return {false, Mismatch{j, a[j], b[j]}};
        }
    }
    return {};
}

// Lowest degree with a nonzero coefficient; nullopt when every certified
// coefficient vanishes (the valuation lies beyond the truncation).
inline std::optional<int> valuation(const TruncatedSeries &a)
{
    for (int j = 0; j <= a.trunc(); ++j) {
        if (a[j] != 0) {
            return j;
        }
    }
    return std::nullopt;
}

// True when valuation(a) >= v, counting "beyond truncation" as infinite.
inline bool valuation_at_least(const TruncatedSeries &a, int v)
{
    const auto val = valuation(a);
    return !val || *val >= v;
}

} // namespace gga

#endif

#ifndef GGA_PARTITIONS_HPP
#define GGA_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gga/errors.hpp>
#include <gga/series.hpp>

namespace gga
{

// A partition: parts in non-increasing order, all positive. The empty
// partition is the unique partition of 0.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : m_parts(std::move(parts))
    {
        for (std::size_t m = 0; m < m_parts.size(); ++m) {
            if (m_parts[m] <= 0) {
                throw invalid_part("partition parts must be positive");
            }
            if (m > 0 && m_parts[m] > m_parts[m - 1]) {
                throw invalid_part("partition parts must be non-increasing");
            }
        }
    }

    std::span<const int> parts() const
    {
        return m_parts;
    }

    std::size_t size() const
    {
        return m_parts.size();
    }

    int operator[](std::size_t m) const
    {
        return m_parts[m];
    }

    int weight() const
    {
        return std::accumulate(m_parts.begin(), m_parts.end(), 0);
    }

    int multiplicity(int value) const
    {
        return static_cast<int>(std::count(m_parts.begin(), m_parts.end(), value));
    }

    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> m_parts;
};

inline void check_r_i(int r, int i)
{
    if (r < 2) {
        throw param_error("r must be at least 2, got " + std::to_string(r));
    }
    if (i < 1 || i > r) {
        throw param_error("i must lie in 1.." + std::to_string(r) + ", got " + std::to_string(i));
    }
}

inline void check_J(int J)
{
    if (J < 0) {
        throw param_error("J must be nonnegative, got " + std::to_string(J));
    }
}

inline void check_degree(int N)
{
    if (N < 0) {
        throw param_error("truncation degree must be nonnegative, got " + std::to_string(N));
    }
}

// Validated (r, i, J, N) bundle; ell = r - i + 1 is derived, never stored
// independently.
class IdentityParams
{
public:
    static IdentityParams make(int r, int i, int J, int N)
    {
        check_r_i(r, i);
        check_J(J);
        check_degree(N);
        return IdentityParams(r, i, J, N);
    }

    int r() const
    {
        return m_r;
    }
    int i() const
    {
        return m_i;
    }
    int J() const
    {
        return m_J;
    }
    int N() const
    {
        return m_N;
    }
    int ell() const
    {
        return m_r - m_i + 1;
    }

    // Index of the product-side series paired with these parameters.
    int c_index() const
    {
        return (m_r - 1) * m_J + ell();
    }

    friend bool operator==(const IdentityParams &, const IdentityParams &) = default;

private:
    IdentityParams(int r, int i, int J, int N) : m_r(r), m_i(i), m_J(J), m_N(N) {}

    int m_r;
    int m_i;
    int m_J;
    int m_N;
};

namespace detail
{

template <typename F>
void partitions_rec(std::vector<int> &stack, int remaining, int min_part, int max_part, F &visit)
{
    if (remaining == 0) {
        visit(std::span<const int>(stack));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        stack.push_back(p);
        partitions_rec(stack, remaining - p, min_part, p, visit);
        stack.pop_back();
    }
}

} // namespace detail

// Calls visit(std::span<const int>) once per partition of n with all parts
// >= min_part, in lexicographically decreasing order.
template <typename F>
void for_each_partition(int n, int min_part, F &&visit)
{
    if (min_part < 1) {
        throw invalid_part("minimum part must be positive");
    }
    if (n < 0) {
        return;
    }
    std::vector<int> stack;
    detail::partitions_rec(stack, n, min_part, n, visit);
}

inline std::vector<Partition> enumerate_partitions(int n, int min_part = 1)
{
    std::vector<Partition> out;
    for_each_partition(n, min_part, [&](std::span<const int> p) {
        out.emplace_back(std::vector<int>(p.begin(), p.end()));
    });
    return out;
}

// Part sizes m <= N admitted by the product for the given index: m not 2 mod 4,
// not 0 mod 4r, and not 2r +- (2 index - 1) mod 4r.
inline std::vector<int> allowed_parts_C(int r, int index, int N)
{
    if (r < 2) {
        throw param_error("r must be at least 2, got " + std::to_string(r));
    }
    if (index < 1 || index > r) {
        throw index_out_of_range("product index must lie in 1.." + std::to_string(r) + ", got "
                                 + std::to_string(index));
    }
    const int mod = 4 * r;
    const int plus = (2 * r + 2 * index - 1) % mod;
    const int minus = (2 * r - 2 * index + 1) % mod;
    std::vector<int> out;
    for (int m = 1; m <= N; ++m) {
        const int res = m % mod;
        if (m % 4 == 2 || res == 0 || res == plus || res == minus) {
            continue;
        }
        out.push_back(m);
    }
    return out;
}

// C_{r,i}(n): partitions of n into parts admitted by the product of index
// ell = r - i + 1.
inline integer count_C(const IdentityParams &params, int n)
{
    check_degree(n);
    const auto parts = allowed_parts_C(params.r(), params.ell(), n);
    return product_geometric_inverses(parts, n)[n];
}

// The four D conditions checked literally on a finished partition:
// no repeated odd part, the two difference-at-distance-(r-1) conditions, and
// at most i-1 parts equal to 1 or 2.
inline bool satisfies_D(std::span<const int> parts, int r, int i)
{
    const std::size_t s = parts.size();
    for (std::size_t m = 0; m + 1 < s; ++m) {
        if (parts[m] == parts[m + 1] && parts[m] % 2 == 1) {
            return false;
        }
    }
    const std::size_t span = static_cast<std::size_t>(r - 1);
    for (std::size_t m = 0; m + span < s; ++m) {
        const int gap = parts[m] - parts[m + span];
        if (gap < (parts[m] % 2 == 1 ? 2 : 3)) {
            return false;
        }
    }
    const auto small = std::count_if(parts.begin(), parts.end(), [](int p) { return p == 1 || p == 2; });
    return small <= i - 1;
}

inline integer count_D(int r, int i, int n)
{
    check_r_i(r, i);
    check_degree(n);
    std::uint64_t count = 0;
    for_each_partition(n, 1, [&](std::span<const int> p) {
        if (satisfies_D(p, r, i)) {
            ++count;
        }
    });
    return count;
}

namespace detail
{

// Depth-first construction of the E_{r,i,J} partitions of weight <= limit.
// Each condition only involves the newest part and parts already placed, so
// a rejected prefix can never be completed and is pruned.
class GapWalker
{
public:
    GapWalker(int r, int i, int J, int limit)
        : m_r(r), m_i(i), m_low(2 * J + 1), m_tally(static_cast<std::size_t>(limit) + 1, 0)
    {
        walk(limit, limit, 0);
    }

    const std::vector<std::uint64_t> &tally() const
    {
        return m_tally;
    }

private:
    void walk(int remaining, int max_part, int weight)
    {
        ++m_tally[static_cast<std::size_t>(weight)];
        const std::size_t t = m_parts.size();
        for (int p = std::min(remaining, max_part); p >= m_low; --p) {
            if (t > 0 && p == m_parts.back() && p % 2 == 1) {
                continue;
            }
            if (t + 1 >= static_cast<std::size_t>(m_r)) {
                const int top = m_parts[t + 1 - static_cast<std::size_t>(m_r)];
                if (top - p < (top % 2 == 1 ? 2 : 3)) {
                    continue;
                }
            }
            const bool boundary = p == m_low || p == m_low + 1;
            if (boundary && m_boundary == m_i - 1) {
                continue;
            }
            m_parts.push_back(p);
            m_boundary += boundary;
            walk(remaining - p, p, weight + p);
            m_boundary -= boundary;
            m_parts.pop_back();
        }
    }

    int m_r;
    int m_i;
    int m_low;
    int m_boundary = 0;
    std::vector<int> m_parts;
    std::vector<std::uint64_t> m_tally;
};

} // namespace detail

inline integer count_E(int r, int i, int J, int n)
{
    check_r_i(r, i);
    check_J(J);
    check_degree(n);
    return detail::GapWalker(r, i, J, n).tally()[static_cast<std::size_t>(n)];
}

// Generating function of E_{r,i,J} through q^N.
inline TruncatedSeries series_E(int r, int i, int J, int N)
{
    check_r_i(r, i);
    check_J(J);
    check_degree(N);
    const detail::GapWalker walker(r, i, J, N);
    const auto &tally = walker.tally();
    return TruncatedSeries(std::vector<integer>(tally.begin(), tally.end()));
}

} // namespace gga

#endif

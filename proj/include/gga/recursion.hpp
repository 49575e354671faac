#ifndef GGA_RECURSION_HPP
#define GGA_RECURSION_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gga/errors.hpp>
#include <gga/hilbert.hpp>
#include <gga/partitions.hpp>
#include <gga/series.hpp>

namespace gga
{

// The product-side family C_1, C_2, ... for a fixed r. Indices 1..r are the
// congruence products; index (r-1)g + i with g >= 1 follows the recursion
//   C_{(r-1)g+1} = C_{(r-1)(g-1)+r},
//   C_{(r-1)g+i} = (C_{(r-1)(g-1)+r-i+1} - C_{(r-1)(g-1)+r-i+2}) / q^{2g(i-1)}
//                  - C_{(r-1)g+i-1} / q                        (2 <= i <= r).
// The two quotients are not separately power series, so each step divides
// C_a - C_b - q^{2g(i-1)-1} C_{prev} by q^{2g(i-1)} at once. Every division
// costs certified coefficients; the ladder starts from a working truncation
// large enough that all requested indices come out certified through N.
class CLadder
{
public:
    CLadder(int r, int max_index, int N) : m_r(r), m_N(N)
    {
        check_r_i(r, 1);
        check_degree(N);
        if (max_index < 1) {
            throw index_out_of_range("series index must be positive, got " + std::to_string(max_index));
        }
        const int W = N + truncation_deficit(r, max_index);

        std::vector<TruncatedSeries> c(static_cast<std::size_t>(std::max(max_index, r)) + 1);
        for (int idx = 1; idx <= r; ++idx) {
            c[static_cast<std::size_t>(idx)] = product_geometric_inverses(allowed_parts_C(r, idx, W), W);
        }
        for (int g = 1; level_start(g) <= max_index; ++g) {
            for (int i = 2; i <= r && level_start(g) - 1 + i <= max_index; ++i) {
                const int e = 2 * g * (i - 1);
                const auto &a = c[at(g - 1, r - i + 1)];
                const auto &b = c[at(g - 1, r - i + 2)];
                const auto &prev = c[at(g, i - 1)];
                c[at(g, i)] = div_q_pow(sub(sub(a, b), shift_extend(prev, e - 1)), e);
            }
        }
        m_series.reserve(static_cast<std::size_t>(max_index));
        for (int idx = 1; idx <= max_index; ++idx) {
            m_series.push_back(truncate(c[static_cast<std::size_t>(idx)], N));
        }
    }

    int r() const
    {
        return m_r;
    }

    int max_index() const
    {
        return static_cast<int>(m_series.size());
    }

    int trunc() const
    {
        return m_N;
    }

    const TruncatedSeries &operator()(int index) const
    {
        if (index < 1 || index > max_index()) {
            throw index_out_of_range("series index " + std::to_string(index) + " outside 1.."
                                     + std::to_string(max_index()));
        }
        return m_series[static_cast<std::size_t>(index) - 1];
    }

    // Coefficients lost between the working truncation and the final one,
    // from a dry run of the truncation arithmetic of the ladder (every step
    // is a min of its inputs' truncations minus a constant, so the loss does
    // not depend on the starting truncation).
    static int truncation_deficit(int r, int max_index)
    {
        std::vector<int> t(static_cast<std::size_t>(std::max(max_index, r)) + 1, 0);
        const auto at = [r](int g, int i) { return static_cast<std::size_t>((r - 1) * g + i); };
        int worst = 0;
        for (int g = 1; (r - 1) * g + 1 <= max_index; ++g) {
            for (int i = 2; i <= r && (r - 1) * g + i <= max_index; ++i) {
                const int e = 2 * g * (i - 1);
                const int numerator = std::min({t[at(g - 1, r - i + 1)], t[at(g - 1, r - i + 2)], t[at(g, i - 1)] + e - 1});
                t[at(g, i)] = numerator - e;
                worst = std::min(worst, t[at(g, i)]);
            }
        }
        return -worst;
    }

private:
    int level_start(int g) const
    {
        return (m_r - 1) * g + 1;
    }

    std::size_t at(int g, int i) const
    {
        return static_cast<std::size_t>((m_r - 1) * g + i);
    }

    int m_r;
    int m_N;
    std::vector<TruncatedSeries> m_series;
};

inline TruncatedSeries c_series(int r, int index, int N)
{
    return CLadder(r, index, N)(index);
}

enum class TableKind { M, N };

inline std::string to_string(TableKind kind)
{
    return kind == TableKind::M ? "M" : "N";
}

// Initial conditions at d = J+1 for the HP-side coefficients N^J_{i,j,.}.
inline TruncatedSeries n_initial(int J, int i, int j, int N)
{
    if (1 <= j && j <= i - 1) {
        return add(TruncatedSeries::monomial(2 * (J + 1) * j - 1, N), TruncatedSeries::monomial(2 * (J + 1) * (j - 1), N));
    }
    if (j == i) {
        return TruncatedSeries::monomial(2 * (J + 1) * (j - 1), N);
    }
    return TruncatedSeries::zero(N);
}

// Initial conditions at d = J+1 for the product-side coefficients
// M^J_{ell,j,.}.
inline TruncatedSeries m_initial(int r, int J, int ell, int j, int N)
{
    if (1 <= j && j <= r - ell) {
        return add(TruncatedSeries::monomial(2 * (J + 1) * j - 1, N), TruncatedSeries::monomial(2 * (J + 1) * (j - 1), N));
    }
    if (j == r - ell + 1) {
        return TruncatedSeries::monomial(2 * (J + 1) * (j - 1), N);
    }
    return TruncatedSeries::zero(N);
}

// Coefficient series M^J_{ell,j,(r-1)d+j} or N^J_{i,j,(r-1)d+j} for
// 1 <= j <= r and J+1 <= d <= d_max, truncated at N. Entry (j, d) has
// valuation >= 2d(j-1).
class CoeffTable
{
public:
    CoeffTable(TableKind kind, int r, int J, int anchor, int d_max, int N)
        : m_kind(kind), m_r(r), m_J(J), m_anchor(anchor), m_d_max(d_max), m_N(N)
    {
        check_r_i(r, anchor);
        check_J(J);
        check_degree(N);
        if (d_max < J + 1) {
            throw param_error("table depth must be at least J+1 = " + std::to_string(J + 1));
        }
        std::vector<TruncatedSeries> level;
        for (int j = 1; j <= r; ++j) {
            level.push_back(kind == TableKind::N ? n_initial(J, anchor, j, N) : m_initial(r, J, anchor, j, N));
        }
        m_levels.push_back(std::move(level));
        for (int d = J + 1; d < d_max; ++d) {
            const auto &prev = m_levels.back();
            // partial[s] = entries 1..s of level d summed.
            std::vector<TruncatedSeries> partial{TruncatedSeries::zero(N)};
            for (const auto &e : prev) {
                partial.push_back(add(partial.back(), e));
            }
            std::vector<TruncatedSeries> next;
            for (int j = 1; j <= r; ++j) {
                next.push_back(add(shift(partial[static_cast<std::size_t>(r - j + 1)], 2 * (d + 1) * (j - 1)),
                                   shift(partial[static_cast<std::size_t>(r - j)], 2 * (d + 1) * j - 1)));
            }
            m_levels.push_back(std::move(next));
        }
    }

    const TruncatedSeries &at(int j, int d) const
    {
        if (j < 1 || j > m_r || d < d_min() || d > m_d_max) {
            throw index_out_of_range("table entry (" + std::to_string(j) + ", " + std::to_string(d) + ") not computed");
        }
        return m_levels[static_cast<std::size_t>(d - d_min())][static_cast<std::size_t>(j - 1)];
    }

    TableKind kind() const
    {
        return m_kind;
    }
    int r() const
    {
        return m_r;
    }
    int J() const
    {
        return m_J;
    }
    int anchor() const
    {
        return m_anchor;
    }
    int d_min() const
    {
        return m_J + 1;
    }
    int d_max() const
    {
        return m_d_max;
    }
    int trunc() const
    {
        return m_N;
    }

private:
    TableKind m_kind;
    int m_r;
    int m_J;
    int m_anchor;
    int m_d_max;
    int m_N;
    std::vector<std::vector<TruncatedSeries>> m_levels;
};

inline CoeffTable coeff_table(TableKind kind, int r, int J, int anchor, int d_max, int N)
{
    return CoeffTable(kind, r, J, anchor, d_max, N);
}

struct ReportMismatch {
    int degree;
    integer lhs;
    integer rhs;
    std::string what;
};

// Outcome of one identity check. A failure carries the lowest failing degree
// with both coefficients and names the pair or clause that disagreed.
struct Report {
    std::string check;
    std::vector<std::pair<std::string, int>> params;
    bool pass = true;
    std::optional<ReportMismatch> first_mismatch;
    int truncation = 0;

    // Records the first disagreement only; later comparisons are skipped once
    // the report has failed.
    bool expect_equal(const TruncatedSeries &lhs, const TruncatedSeries &rhs, const std::string &what)
    {
        if (!pass) {
            return false;
        }
        const auto m = eq_up_to(lhs, rhs, truncation);
        if (!m) {
            fail({m.mismatch->degree, m.mismatch->lhs, m.mismatch->rhs, what});
        }
        return pass;
    }

    // Requires every coefficient below q^v to vanish.
    bool expect_valuation(const TruncatedSeries &s, int v, const std::string &what)
    {
        if (!pass) {
            return false;
        }
        const auto val = valuation(s);
        if (val && *val < v) {
            fail({*val, s[*val], 0, what});
        }
        return pass;
    }

    void fail(ReportMismatch m)
    {
        pass = false;
        first_mismatch = std::move(m);
    }
};

namespace detail
{

// HP^k and HP^k_ell memoized for the duration of one verification.
class HpCache
{
public:
    HpCache(int r, int N) : m_r(r), m_N(N) {}

    const TruncatedSeries &operator()(int k, std::optional<int> ell = std::nullopt)
    {
        const std::pair key{k, ell.value_or(0)};
        auto it = m_cache.find(key);
        if (it == m_cache.end()) {
            it = m_cache.emplace(key, hp_notation(k, ell, m_r, m_N)).first;
        }
        return it->second;
    }

private:
    int m_r;
    int m_N;
    std::map<std::pair<int, int>, TruncatedSeries> m_cache;
};

inline std::string hp_name(int k, std::optional<int> ell = std::nullopt)
{
    return "HP" + (ell ? "_" + std::to_string(*ell) : std::string()) + "^" + std::to_string(k);
}

} // namespace detail

// One step of the HP recursion at odd k:
//   HP_ell^k = sum_{j=1}^{ell-1} q^{(k+1)j-1} HP_{r-j+1}^{k+2}
//            + sum_{j=1}^{ell}   q^{(k+1)(j-1)} HP_{r-j+1}^{k+2},
// together with its two halves: the odd step
//   HP_ell^k = q^k HP_{ell-1}^{k+1} + HP_ell^{k+1}   (ell >= 2; for ell = 1,
//   HP_1^k = HP^{k+2}) and the even cascade at k+1,
//   HP_ell^{k+1} = sum_{j=1}^{ell} q^{(k+1)(j-1)} HP_{r-j+1}^{k+2}.
inline Report verify_hp_step(int r, int k, int ell, int J, int N)
{
    check_r_i(r, ell);
    check_J(J);
    check_degree(N);
    if (k % 2 == 0 || k < 2 * J + 1) {
        throw param_error("k must be odd and at least 2J+1 = " + std::to_string(2 * J + 1) + ", got "
                          + std::to_string(k));
    }
    Report rep{"hp_step", {{"r", r}, {"k", k}, {"ell", ell}, {"J", J}}, true, std::nullopt, N};
    detail::HpCache hp(r, N);

    auto rhs = TruncatedSeries::zero(N);
    for (int j = 1; j <= ell - 1; ++j) {
        rhs = add(rhs, shift(hp(k + 2, r - j + 1), (k + 1) * j - 1));
    }
    for (int j = 1; j <= ell; ++j) {
        rhs = add(rhs, shift(hp(k + 2, r - j + 1), (k + 1) * (j - 1)));
    }
    rep.expect_equal(hp(k, ell), rhs, "n1: " + detail::hp_name(k, ell) + " vs recursion over HP^" + std::to_string(k + 2));

    if (ell == 1) {
        rep.expect_equal(hp(k, 1), hp(k + 2), "f1: HP_1^" + std::to_string(k) + " vs HP^" + std::to_string(k + 2));
        rep.expect_equal(hp(k + 2), hp(k + 2, r), "N2: HP^" + std::to_string(k + 2) + " vs " + detail::hp_name(k + 2, r));
    } else {
        rep.expect_equal(hp(k, ell), add(shift(hp(k + 1, ell - 1), k), hp(k + 1, ell)),
                         "f2: " + detail::hp_name(k, ell) + " vs odd splitting step");
    }

    auto cascade = TruncatedSeries::zero(N);
    for (int j = 1; j <= ell; ++j) {
        cascade = add(cascade, shift(hp(k + 2, r - j + 1), (k + 1) * (j - 1)));
    }
    rep.expect_equal(hp(k + 1, ell), cascade, "f3: " + detail::hp_name(k + 1, ell) + " vs even cascade");
    return rep;
}

// HP_i^{2J+1} = sum_{j=1}^r N^J_{i,j,(r-1)d+j} HP_{r-j+1}^{2d+1}.
inline Report verify_hp_expansion(int r, int i, int J, int d, int N)
{
    const CoeffTable table(TableKind::N, r, J, i, d, N);
    Report rep{"hp_expansion", {{"r", r}, {"i", i}, {"J", J}, {"d", d}}, true, std::nullopt, N};
    detail::HpCache hp(r, N);
    auto rhs = TruncatedSeries::zero(N);
    for (int j = 1; j <= r; ++j) {
        rhs = add(rhs, mul(table.at(j, d), hp(2 * d + 1, r - j + 1)));
    }
    rep.expect_equal(hp(2 * J + 1, i), rhs, "t1: " + detail::hp_name(2 * J + 1, i) + " vs N-weighted expansion");
    return rep;
}

// C_{(r-1)J+ell} = sum_{j=1}^r M^J_{ell,j,(r-1)d+j} C_{(r-1)d+j}.
inline Report verify_c_expansion(int r, int ell, int J, int d, int N)
{
    const CoeffTable table(TableKind::M, r, J, ell, d, N);
    const CLadder c(r, (r - 1) * d + r, N);
    Report rep{"c_expansion", {{"r", r}, {"ell", ell}, {"J", J}, {"d", d}}, true, std::nullopt, N};
    auto rhs = TruncatedSeries::zero(N);
    for (int j = 1; j <= r; ++j) {
        rhs = add(rhs, mul(table.at(j, d), c((r - 1) * d + j)));
    }
    rep.expect_equal(c((r - 1) * J + ell), rhs,
                     "C_" + std::to_string((r - 1) * J + ell) + " vs M-weighted expansion");
    return rep;
}

// Entrywise M^J_{ell,j,.} = N^J_{i,j,.} with ell = r - i + 1, for
// J+1 <= d <= d_max.
inline Report verify_m_equals_n(int r, int i, int J, int d_max, int N)
{
    check_r_i(r, i);
    const int ell = r - i + 1;
    const CoeffTable m(TableKind::M, r, J, ell, d_max, N);
    const CoeffTable n(TableKind::N, r, J, i, d_max, N);
    Report rep{"m_equals_n", {{"r", r}, {"i", i}, {"J", J}, {"d_max", d_max}}, true, std::nullopt, N};
    for (int d = J + 1; d <= d_max && rep.pass; ++d) {
        for (int j = 1; j <= r && rep.pass; ++j) {
            const std::string at = "(j=" + std::to_string(j) + ", d=" + std::to_string(d) + ")";
            rep.expect_equal(m.at(j, d), n.at(j, d), "M vs N at " + at);
            rep.expect_valuation(n.at(j, d), 2 * d * (j - 1), "valuation law at " + at);
        }
    }
    return rep;
}

// First d with 2(d+1) > N, but never below J+1.
inline int d_stop(int J, int N)
{
    return std::max(J + 1, N / 2);
}

// Finite shadows of the limit arguments, with d_stop as above and the
// coefficients taken at (r-1)(d_stop+1)+m:
//  (a) for 2 <= m <= r the M and N entries vanish through q^N;
//  (b) HP^{2 d_stop + 3} - 1 and C_{(r-1)(d_stop+1)+1} - 1 vanish through q^N;
//  (c) the m = 1 entries equal C_{(r-1)J+ell} and HP_i^{2J+1} through q^N.
inline Report verify_limits(int r, int i, int J, int N)
{
    check_r_i(r, i);
    check_J(J);
    check_degree(N);
    const int ell = r - i + 1;
    const int stop = d_stop(J, N);
    const int level = stop + 1;
    Report rep{"limits", {{"r", r}, {"i", i}, {"J", J}, {"d_stop", stop}}, true, std::nullopt, N};

    const CoeffTable m(TableKind::M, r, J, ell, level, N);
    const CoeffTable n(TableKind::N, r, J, i, level, N);
    for (int j = 2; j <= r; ++j) {
        rep.expect_valuation(m.at(j, level), N + 1, "(a) M entry j=" + std::to_string(j) + " not vanishing");
        rep.expect_valuation(n.at(j, level), N + 1, "(a) N entry j=" + std::to_string(j) + " not vanishing");
    }

    const auto one = TruncatedSeries::one(N);
    const CLadder c(r, std::max((r - 1) * level + 1, (r - 1) * J + ell), N);
    rep.expect_valuation(sub(hp_notation(2 * stop + 3, std::nullopt, r, N), one), N + 1,
                         "(b) HP^" + std::to_string(2 * stop + 3) + " - 1");
    rep.expect_valuation(sub(c((r - 1) * level + 1), one), N + 1,
                         "(b) C_" + std::to_string((r - 1) * level + 1) + " - 1");

    rep.expect_equal(m.at(1, level), c((r - 1) * J + ell), "(c) stabilized M entry vs C_" + std::to_string((r - 1) * J + ell));
    rep.expect_equal(n.at(1, level), hp_notation(2 * J + 1, i, r, N),
                     "(c) stabilized N entry vs " + detail::hp_name(2 * J + 1, i));
    return rep;
}

// Three-way equality C_{(r-1)J+ell} = HP_i^{2J+1} = E_{r,i,J} through q^N,
// plus C_{r,i}(n) = D_{r,i}(n) for n <= N when J = 0.
inline Report verify_main(int r, int i, int J, int N)
{
    const auto params = IdentityParams::make(r, i, J, N);
    Report rep{"main", {{"r", r}, {"i", i}, {"J", J}}, true, std::nullopt, N};
    const auto c = c_series(r, params.c_index(), N);
    const auto hp = hp_notation(2 * J + 1, i, r, N);
    const auto e = series_E(r, i, J, N);
    const std::string c_name = "C_" + std::to_string(params.c_index());
    const std::string hp_name = detail::hp_name(2 * J + 1, i);
    rep.expect_equal(c, hp, c_name + " vs " + hp_name);
    rep.expect_equal(hp, e, hp_name + " vs E");
    rep.expect_equal(c, e, c_name + " vs E");
    if (J == 0) {
        for (int n = 0; n <= N && rep.pass; ++n) {
            const auto cn = count_C(params, n);
            const auto dn = count_D(r, i, n);
            if (cn != dn) {
                rep.fail({n, cn, dn, "C_{r,i}(n) vs D_{r,i}(n)"});
            }
        }
    }
    return rep;
}

} // namespace gga

#endif

#ifndef GGA_MONOMIAL_HPP
#define GGA_MONOMIAL_HPP

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gga/errors.hpp>
#include <gga/partitions.hpp>
#include <gga/series.hpp>

namespace gga
{

struct VarPower {
    int var;
    int exp;

    friend auto operator<=>(const VarPower &, const VarPower &) = default;
};

// Monomial in the variables x_1, x_2, ... with x_k of weight k. Stored
// sparsely, sorted by variable index, with no zero exponents.
class Monomial
{
public:
    // The unit monomial.
    Monomial() = default;

    // Repeated variables are merged and zero exponents dropped, so x^0 = 1.
    explicit Monomial(std::vector<VarPower> exps)
    {
        for (const auto &[k, e] : exps) {
            if (k < 1) {
                throw param_error("variable index must be positive, got " + std::to_string(k));
            }
            if (e < 0) {
                throw param_error("exponent must be nonnegative, got " + std::to_string(e));
            }
        }
        std::sort(exps.begin(), exps.end());
        for (const auto &vp : exps) {
            if (vp.exp == 0) {
                continue;
            }
            if (!m_exps.empty() && m_exps.back().var == vp.var) {
                m_exps.back().exp += vp.exp;
            } else {
                m_exps.push_back(vp);
            }
        }
        recompute_weight();
    }

    Monomial(std::initializer_list<VarPower> exps) : Monomial(std::vector<VarPower>(exps)) {}

    static Monomial var(int k, int e = 1)
    {
        return Monomial({VarPower{k, e}});
    }

    // x_{l_1} x_{l_2} ... x_{l_m} for a partition (l_1, ..., l_m).
    static Monomial from_parts(std::span<const int> parts)
    {
        std::vector<VarPower> exps;
        exps.reserve(parts.size());
        for (int p : parts) {
            exps.push_back({p, 1});
        }
        return Monomial(std::move(exps));
    }

    // Parses the text form produced by to_string: "1" or "x3^2*x5".
    static Monomial parse(std::string_view text)
    {
        if (text == "1") {
            return {};
        }
        std::vector<VarPower> exps;
        while (!text.empty()) {
            const auto star = text.find('*');
            const auto factor = text.substr(0, star);
            text = star == std::string_view::npos ? std::string_view{} : text.substr(star + 1);
            if (factor.size() < 2 || factor[0] != 'x') {
                throw param_error("malformed monomial factor '" + std::string(factor) + "'");
            }
            const auto caret = factor.find('^');
            const auto number = [&](std::string_view digits) {
                int v = 0;
                const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
                if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
                    throw param_error("malformed monomial factor '" + std::string(factor) + "'");
                }
                return v;
            };
            const int k = number(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1));
            const int e = caret == std::string_view::npos ? 1 : number(factor.substr(caret + 1));
            exps.push_back({k, e});
        }
        return Monomial(std::move(exps));
    }

    std::span<const VarPower> exps() const
    {
        return m_exps;
    }

    int weight() const
    {
        return m_weight;
    }

    int degree() const
    {
        int d = 0;
        for (const auto &vp : m_exps) {
            d += vp.exp;
        }
        return d;
    }

    int exponent(int k) const
    {
        const auto it = std::lower_bound(m_exps.begin(), m_exps.end(), k,
                                         [](const VarPower &vp, int v) { return vp.var < v; });
        return it != m_exps.end() && it->var == k ? it->exp : 0;
    }

    bool is_unit() const
    {
        return m_exps.empty();
    }

    // A single variable to the first power.
    bool is_variable() const
    {
        return m_exps.size() == 1 && m_exps.front().exp == 1;
    }

    // Smallest variable index present; 0 for the unit.
    int min_var() const
    {
        return m_exps.empty() ? 0 : m_exps.front().var;
    }

    int max_var() const
    {
        return m_exps.empty() ? 0 : m_exps.back().var;
    }

    // m / x_k if x_k divides m, else m.
    Monomial without_one(int k) const
    {
        Monomial out = *this;
        for (auto it = out.m_exps.begin(); it != out.m_exps.end(); ++it) {
            if (it->var == k) {
                if (--it->exp == 0) {
                    out.m_exps.erase(it);
                }
                out.m_weight -= k;
                break;
            }
        }
        return out;
    }

    // Canonical order: by weight, then lexicographically on (var, exp) pairs.
    friend std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
    {
        if (auto c = a.m_weight <=> b.m_weight; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.m_exps.begin(), a.m_exps.end(), b.m_exps.begin(),
                                                      b.m_exps.end());
    }

    friend bool operator==(const Monomial &a, const Monomial &b)
    {
        return a.m_exps == b.m_exps;
    }

    friend Monomial operator*(const Monomial &a, const Monomial &b)
    {
        std::vector<VarPower> exps(a.m_exps.begin(), a.m_exps.end());
        exps.insert(exps.end(), b.m_exps.begin(), b.m_exps.end());
        return Monomial(std::move(exps));
    }

private:
    void recompute_weight()
    {
        m_weight = 0;
        for (const auto &vp : m_exps) {
            m_weight += vp.var * vp.exp;
        }
    }

    std::vector<VarPower> m_exps;
    int m_weight = 0;
};

inline int weight(const Monomial &m)
{
    return m.weight();
}

inline bool divides(const Monomial &a, const Monomial &b)
{
    if (a.weight() > b.weight()) {
        return false;
    }
    auto bi = b.exps().begin();
    const auto be = b.exps().end();
    for (const auto &[k, e] : a.exps()) {
        while (bi != be && bi->var < k) {
            ++bi;
        }
        if (bi == be || bi->var != k || bi->exp < e) {
            return false;
        }
    }
    return true;
}

inline std::string to_string(const Monomial &m)
{
    if (m.is_unit()) {
        return "1";
    }
    std::string out;
    for (const auto &[k, e] : m.exps()) {
        if (!out.empty()) {
            out += '*';
        }
        out += 'x' + std::to_string(k);
        if (e != 1) {
            out += '^' + std::to_string(e);
        }
    }
    return out;
}

// Divisibility-minimal elements, sorted canonically and deduplicated.
inline std::vector<Monomial> minimalize(std::vector<Monomial> ms)
{
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    // A divisor has weight <= its multiple, so scanning in canonical order
    // only needs to look back at already-kept elements.
    std::vector<Monomial> kept;
    for (auto &m : ms) {
        const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial &g) { return divides(g, m); });
        if (!redundant) {
            kept.push_back(std::move(m));
        }
    }
    return kept;
}

// Monomial ideal of S_{min_var} = F[x_{min_var}, x_{min_var+1}, ...], kept as
// its minimal generators of weight <= trunc. Generators of larger weight
// cannot divide any monomial of weight <= trunc and are dropped on
// construction, which turns the infinitely generated ideals into finite
// objects without changing any graded dimension through trunc.
class MonomialIdeal
{
public:
    MonomialIdeal(int min_var, int trunc, std::vector<Monomial> gens) : m_min_var(min_var), m_trunc(trunc)
    {
        if (min_var < 1) {
            throw param_error("ambient ring index must be positive, got " + std::to_string(min_var));
        }
        check_degree(trunc);
        std::erase_if(gens, [&](const Monomial &g) { return g.weight() > trunc; });
        for (const auto &g : gens) {
            if (!g.is_unit() && g.min_var() < min_var) {
                throw param_error("generator " + to_string(g) + " uses a variable below x" + std::to_string(min_var));
            }
        }
        m_gens = minimalize(std::move(gens));
    }

    static MonomialIdeal zero(int min_var, int trunc)
    {
        return MonomialIdeal(min_var, trunc, {});
    }

    static MonomialIdeal unit(int min_var, int trunc)
    {
        return MonomialIdeal(min_var, trunc, {Monomial{}});
    }

    std::span<const Monomial> gens() const
    {
        return m_gens;
    }

    int min_var() const
    {
        return m_min_var;
    }

    int trunc() const
    {
        return m_trunc;
    }

    bool is_unit() const
    {
        return m_gens.size() == 1 && m_gens.front().is_unit();
    }

    bool is_zero() const
    {
        return m_gens.empty();
    }

    bool contains(const Monomial &m) const
    {
        return std::any_of(m_gens.begin(), m_gens.end(), [&](const Monomial &g) { return divides(g, m); });
    }

    // The same ideal with generators of weight > N dropped.
    MonomialIdeal truncated(int N) const
    {
        return MonomialIdeal(m_min_var, std::min(N, m_trunc), m_gens);
    }

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;
    friend auto operator<=>(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
    int m_min_var;
    int m_trunc;
    std::vector<Monomial> m_gens;
};

inline void check_ring_var(const MonomialIdeal &I, int k)
{
    if (k < I.min_var()) {
        throw param_error("x" + std::to_string(k) + " is not a variable of S_" + std::to_string(I.min_var()));
    }
}

// (I : x_k).
inline MonomialIdeal colon_var(const MonomialIdeal &I, int k)
{
    check_ring_var(I, k);
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto &g : I.gens()) {
        gens.push_back(g.without_one(k));
    }
    return MonomialIdeal(I.min_var(), I.trunc(), std::move(gens));
}

// I + (x_k).
inline MonomialIdeal add_var(const MonomialIdeal &I, int k)
{
    check_ring_var(I, k);
    std::vector<Monomial> gens(I.gens().begin(), I.gens().end());
    gens.push_back(Monomial::var(k));
    return MonomialIdeal(I.min_var(), I.trunc(), std::move(gens));
}

inline bool is_standard(const MonomialIdeal &I, const Monomial &m)
{
    if (!m.is_unit() && m.min_var() < I.min_var()) {
        throw param_error(to_string(m) + " does not lie in S_" + std::to_string(I.min_var()));
    }
    return !I.contains(m);
}

// Number of standard monomials of weight j, i.e. the dimension of the
// degree-j piece of S_{min_var} / I.
inline integer standard_count(const MonomialIdeal &I, int j)
{
    if (j < 0 || j > I.trunc()) {
        throw truncation_error("degree " + std::to_string(j) + " is beyond the ideal's truncation "
                               + std::to_string(I.trunc()));
    }
    std::uint64_t count = 0;
    for_each_partition(j, I.min_var(), [&](std::span<const int> parts) {
        if (!I.contains(Monomial::from_parts(parts))) {
            ++count;
        }
    });
    return count;
}

inline std::string to_string(const MonomialIdeal &I)
{
    if (I.is_zero()) {
        return "(0)";
    }
    std::string out = "(";
    for (const auto &g : I.gens()) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += to_string(g);
    }
    return out + ")";
}

} // namespace gga

#endif

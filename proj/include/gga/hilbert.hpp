#ifndef GGA_HILBERT_HPP
#define GGA_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gga/errors.hpp>
#include <gga/monomial.hpp>
#include <gga/partitions.hpp>
#include <gga/series.hpp>

namespace gga
{

// The quotient S_{min_var} / I is identified with its ideal: a MonomialIdeal
// already carries the ambient ring index and the truncation.
using GradedQuotient = MonomialIdeal;

namespace detail
{

inline void check_r(int r)
{
    if (r < 2) {
        throw param_error("r must be at least 2, got " + std::to_string(r));
    }
}

inline void check_k(int k)
{
    if (k < 1) {
        throw param_error("ring index k must be positive, got " + std::to_string(k));
    }
}

inline void check_ell(int ell, int r)
{
    if (ell < 1 || ell > r) {
        throw param_error("ell must lie in 1.." + std::to_string(r) + ", got " + std::to_string(ell));
    }
}

// The four families shared by L_k and L_{r,i,J}, for all odd 2a-1, 2b-1 and
// even 2c in [lower, N]:
//   x_{2a-1}^2, x_{2b-1} x_{2b}^{r-1},
//   x_{2c}^{r-n1} x_{2c+2}^{n1}            (0 <= n1 <= r-1),
//   x_{2c}^{r-n2-1} x_{2c+1} x_{2c+2}^{n2} (0 <= n2 <= r-2).
inline void append_families(std::vector<Monomial> &gens, int lower, int r, int N)
{
    for (int v = lower; v <= N; ++v) {
        if (v % 2 == 1) {
            gens.push_back(Monomial::var(v, 2));
            gens.push_back(Monomial{{v, 1}, {v + 1, r - 1}});
        } else {
            for (int n1 = 0; n1 <= r - 1; ++n1) {
                gens.push_back(Monomial{{v, r - n1}, {v + 2, n1}});
            }
            for (int n2 = 0; n2 <= r - 2; ++n2) {
                gens.push_back(Monomial{{v, r - n2 - 1}, {v + 1, 1}, {v + 2, n2}});
            }
        }
    }
}

} // namespace detail

// L_{r,i,J} in S_{2J+1}: the three boundary generators x_{2J+1}^2,
// x_{2J+1} x_{2J+2}^{i-1}, x_{2J+2}^i plus the families from index 2J+2 on.
inline MonomialIdeal build_L_riJ(int r, int i, int J, int N)
{
    check_r_i(r, i);
    check_J(J);
    check_degree(N);
    const int b = 2 * J + 1;
    std::vector<Monomial> gens{Monomial::var(b, 2), Monomial{{b, 1}, {b + 1, i - 1}}, Monomial::var(b + 1, i)};
    detail::append_families(gens, 2 * J + 2, r, N);
    return MonomialIdeal(b, N, std::move(gens));
}

inline MonomialIdeal build_L_k(int k, int r, int N)
{
    detail::check_k(k);
    detail::check_r(r);
    check_degree(N);
    std::vector<Monomial> gens;
    detail::append_families(gens, k, r, N);
    return MonomialIdeal(k, N, std::move(gens));
}

// L_k^ell. Odd k: (x_k^2, x_k x_{k+1}^{ell-1}, L_{k+1}^ell). Even k:
// x_k^ell, x_k^{ell-j} x_{k+2}^{r-ell+j} for 1 <= j <= ell-1,
// x_k^{ell-1-j} x_{k+1} x_{k+2}^{r-ell+j} for 0 <= j <= ell-2, and L_{k+1}.
// Empty ranges contribute nothing, so ell = 1 with k even gives (x_k, L_{k+1}).
inline MonomialIdeal build_L_k_ell(int k, int ell, int r, int N)
{
    detail::check_k(k);
    detail::check_r(r);
    detail::check_ell(ell, r);
    check_degree(N);
    std::vector<Monomial> gens;
    if (k % 2 == 1) {
        gens.push_back(Monomial::var(k, 2));
        gens.push_back(Monomial{{k, 1}, {k + 1, ell - 1}});
        const auto inner = build_L_k_ell(k + 1, ell, r, N);
        gens.insert(gens.end(), inner.gens().begin(), inner.gens().end());
    } else {
        gens.push_back(Monomial::var(k, ell));
        for (int j = 1; j <= ell - 1; ++j) {
            gens.push_back(Monomial{{k, ell - j}, {k + 2, r - ell + j}});
        }
        for (int j = 0; j <= ell - 2; ++j) {
            gens.push_back(Monomial{{k, ell - 1 - j}, {k + 1, 1}, {k + 2, r - ell + j}});
        }
        detail::append_families(gens, k + 1, r, N);
    }
    return MonomialIdeal(k, N, std::move(gens));
}

// Hilbert-Poincare series by counting standard monomials directly.
//
// Monomials are grown by appending variables in non-increasing index order,
// so every monomial of weight <= N is reached exactly once. Standard
// monomials are closed under division: once a node lies in the ideal, its
// whole subtree does too and is skipped.
inline TruncatedSeries hp_brute(const GradedQuotient &Q)
{
    const int N = Q.trunc();
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(N) + 1, 0);
    if (Q.is_unit()) {
        return TruncatedSeries::zero(N);
    }
    std::vector<int> exps(static_cast<std::size_t>(N) + 2, 0);
    const auto gens = Q.gens();
    const auto in_ideal = [&] {
        return std::any_of(gens.begin(), gens.end(), [&](const Monomial &g) {
            return std::all_of(g.exps().begin(), g.exps().end(),
                               [&](const VarPower &vp) { return exps[static_cast<std::size_t>(vp.var)] >= vp.exp; });
        });
    };
    const auto walk = [&](auto &self, int weight, int max_var) -> void {
        ++tally[static_cast<std::size_t>(weight)];
        for (int v = std::min(max_var, N - weight); v >= Q.min_var(); --v) {
            ++exps[static_cast<std::size_t>(v)];
            if (!in_ideal()) {
                self(self, weight + v, v);
            }
            --exps[static_cast<std::size_t>(v)];
        }
    };
    walk(walk, 0, N);
    return TruncatedSeries(std::vector<integer>(tally.begin(), tally.end()));
}

// Hilbert-Poincare series by the splitting formula
//   HP(S/I) = q^k HP(S/(I : x_k)) + HP(S/(I + (x_k))).
//
// Linear generators x_k simply remove a variable, so a state whose
// generators are all linear is a free polynomial ring on the surviving
// variables and is evaluated as a product. Otherwise the pivot is the
// smallest variable of a non-linear generator. Both branches strictly lower
// the total degree of the non-linear generators: the colon removes one factor
// x_k from at least one of them, the sum deletes every one containing x_k.
// The colon branch also spends k of the degree budget, and subquotients with
// budget b only keep generators of weight <= b, so states are finite and
// canonical (minimal generators, ring index, budget), which is the memo key.
class SplitEngine
{
public:
    TruncatedSeries operator()(const GradedQuotient &Q)
    {
        return solve(Q);
    }

    std::size_t memo_size() const
    {
        return m_memo.size();
    }

private:
    TruncatedSeries solve(const MonomialIdeal &I)
    {
        if (auto it = m_memo.find(I); it != m_memo.end()) {
            return it->second;
        }
        auto result = evaluate(I);
        m_memo.emplace(I, result);
        return result;
    }

    TruncatedSeries evaluate(const MonomialIdeal &I)
    {
        const int budget = I.trunc();
        if (I.is_unit()) {
            return TruncatedSeries::zero(budget);
        }
        std::vector<bool> killed(static_cast<std::size_t>(budget) + 1, false);
        int pivot = 0;
        for (const auto &g : I.gens()) {
            if (g.is_variable()) {
                killed[static_cast<std::size_t>(g.min_var())] = true;
            } else if (pivot == 0 || g.min_var() < pivot) {
                pivot = g.min_var();
            }
        }
        if (pivot == 0) {
            std::vector<int> free;
            for (int v = I.min_var(); v <= budget; ++v) {
                if (!killed[static_cast<std::size_t>(v)]) {
                    free.push_back(v);
                }
            }
            return product_geometric_inverses(free, budget);
        }
        // pivot <= budget: it occurs in a generator of weight <= budget.
        const auto colon = solve(colon_var(I, pivot).truncated(budget - pivot));
        const auto rest = solve(add_var(I, pivot));
        return add(shift_extend(colon, pivot), rest);
    }

    std::map<MonomialIdeal, TruncatedSeries> m_memo;
};

inline TruncatedSeries hp_split(const GradedQuotient &Q)
{
    return SplitEngine{}(Q);
}

// HP^k (no ell) or HP^k_ell through q^N.
inline TruncatedSeries hp_notation(int k, std::optional<int> ell, int r, int N)
{
    return hp_split(ell ? build_L_k_ell(k, *ell, r, N) : build_L_k(k, r, N));
}

} // namespace gga

#endif

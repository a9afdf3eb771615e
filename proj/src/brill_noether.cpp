#include "splitloci/brill_noether.hpp"

#include <algorithm>
#include <stdexcept>

namespace splitloci {
namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Enumerate ascending part vectors summing to `degree`, parts in
// [lo, window] with lo the running lower bound, appending to `out`.
void enumerate_rec(Int remaining_rank, Int remaining_degree, Int lo, Int window,
                   std::vector<Int>& prefix, std::vector<SplittingType>& out) {
    if (remaining_rank == 0) {
        if (remaining_degree == 0) out.push_back(SplittingType(prefix));
        return;
    }
    for (Int v = lo; v <= window; ++v) {
        // Remaining parts are >= v and <= window.
        const Int rest = remaining_rank - 1;
        const Int min_rest = checked_mul(rest, v);
        const Int max_rest = checked_mul(rest, window);
        const Int need = remaining_degree - v;
        if (need < min_rest) break;  // larger v only shrinks `need` further
        if (need > max_rest) continue;
        prefix.push_back(v);
        enumerate_rec(rest, need, v, window, prefix, out);
        prefix.pop_back();
    }
}

Int h0_of_values(const std::vector<Int>& vals) {
    Int h = 0;
    for (Int v : vals) h = checked_add(h, std::max<Int>(0, v + 1));
    return h;
}

// True iff no single-unit balancing move of e keeps at least r+1 sections.
// Balancing moves (one unit from a part e_j to a part e_i with e_j >= e_i + 2)
// generate the strict up-set of e in dominance order, so e is maximal in the
// down-set {h0 >= r+1} exactly when every such move drops below r+1 sections.
bool is_maximal_in_h0_downset(const SplittingType& e, Int r) {
    const auto& p = e.parts();
    const Int h = h0_of_values(p);
    if (h < r + 1) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0 && p[i] == p[i - 1]) continue;
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[j] < p[i] + 2) continue;
            if (p[j] == p[j - 1] && j > i + 1) continue;
            const Int h_moved = h - std::max<Int>(0, p[i] + 1) - std::max<Int>(0, p[j] + 1) +
                                std::max<Int>(0, p[i] + 2) + std::max<Int>(0, p[j]);
            if (h_moved >= r + 1) return false;
        }
    }
    return true;
}

std::vector<SplittingType> filter_maximal(const std::vector<SplittingType>& all, Int r,
                                          bool parallel) {
    std::vector<char> keep(all.size(), 0);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (long long i = 0; i < static_cast<long long>(all.size()); ++i)
            keep[static_cast<std::size_t>(i)] =
                is_maximal_in_h0_downset(all[static_cast<std::size_t>(i)], r) ? 1 : 0;
    } else {
        for (std::size_t i = 0; i < all.size(); ++i)
            keep[i] = is_maximal_in_h0_downset(all[i], r) ? 1 : 0;
    }
    std::vector<SplittingType> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (keep[i]) out.push_back(all[i]);
    return out;
}

}  // namespace

BNContext::BNContext(Int g_, Int k_, Int d_) : g(g_), k(k_), d(d_) {
    require(g >= 0, "genus must be non-negative");
    require(k >= 2, "cover degree must be at least 2");
}

Int rho(Int g, Int r, Int d) {
    require(r >= 0, "r must be non-negative");
    return g - checked_mul(r + 1, checked_add(g - d, r));
}

Int rho_k(const BNContext& ctx, Int r) {
    require(r >= 0, "r must be non-negative");
    if (r <= ctx.d - ctx.g) return ctx.g;
    const Int r_prime = std::min<Int>(r, ctx.g - ctx.d + r - 1);
    Int best = rho(ctx.g, r, ctx.d);
    for (Int ell = 1; ell <= r_prime; ++ell)
        best = std::max<Int>(best, rho(ctx.g, r - ell, ctx.d) - checked_mul(ell, ctx.k));
    return best;
}

SplittingType w_rl(const BNContext& ctx, Int r, Int ell) {
    require(r >= 0, "r must be non-negative");
    if (r <= ctx.d - ctx.g) throw std::invalid_argument("Brill-Noether locus is all of Pic");
    if (ell < std::max<Int>(0, r + 2 - ctx.k) || ell > r)
        throw std::invalid_argument("no such stratum");
    const SplittingType lower = balanced(ctx.k - r - 1 + ell, ctx.pushforward_degree() - ell);
    const SplittingType upper = balanced(r + 1 - ell, ell);
    std::vector<Int> parts = lower.parts();
    parts.insert(parts.end(), upper.parts().begin(), upper.parts().end());
    return SplittingType(std::move(parts));
}

Int u_wrl_closed_form(const BNContext& ctx, Int r, Int ell) {
    require(r >= 0, "r must be non-negative");
    if (r <= ctx.d - ctx.g) throw std::invalid_argument("Brill-Noether locus is all of Pic");
    if (ell < std::max<Int>(0, r + 2 - ctx.k) || ell > r)
        throw std::invalid_argument("no such stratum");
    return checked_mul(ell, ctx.k) -
           checked_mul(r + 1 - ell, checked_add(ctx.d - ctx.g - r, ell));
}

bool wrl_is_maximal(const BNContext& ctx, Int r, Int ell) {
    return ell == 0 || ell <= ctx.g - ctx.d + 2 * r + 1 - ctx.k;
}

WrdReport wrd_decomposition(const BNContext& ctx, Int r) {
    require(r >= 0, "r must be non-negative");
    WrdReport rep{ctx, r, false, {}};
    if (r <= ctx.d - ctx.g) {
        rep.whole_picard = true;
        return rep;
    }
    for (Int ell = std::max<Int>(0, r + 2 - ctx.k); ell <= r; ++ell) {
        const SplittingType e = w_rl(ctx, r, ell);
        const Int u = expected_codim(e);
        StratumReport row{e, ell, u, std::nullopt, wrl_is_maximal(ctx, r, ell)};
        if (u <= ctx.g) row.dim = ctx.g - u;
        rep.strata.push_back(std::move(row));
    }
    return rep;
}

std::vector<SplittingType> enumerate_types(Int rank, Int degree, Int window) {
    require(rank >= 1, "rank must be positive");
    require(window >= 0, "window must be non-negative");
    std::vector<SplittingType> out;
    std::vector<Int> prefix;
    prefix.reserve(static_cast<std::size_t>(rank));
    enumerate_rec(rank, degree, -window, window, prefix, out);
    return out;  // recursion emits in ascending lexicographic order
}

Int maximal_strata_default_window(Int rank, Int degree, Int r) {
    const Int mag = degree < 0 ? checked_mul(degree, -1) : degree;
    return checked_add(checked_add(mag, rank), std::max<Int>(0, r) + 2);
}

std::vector<SplittingType> maximal_strata_bruteforce(Int rank, Int degree, Int r, Int window) {
    return filter_maximal(enumerate_types(rank, degree, window), r, /*parallel=*/true);
}

std::vector<SplittingType> maximal_strata_bruteforce_serial(Int rank, Int degree, Int r,
                                                            Int window) {
    return filter_maximal(enumerate_types(rank, degree, window), r, /*parallel=*/false);
}

}  // namespace splitloci

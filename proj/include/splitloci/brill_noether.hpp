#pragma once

#include <optional>
#include <vector>

#include "splitloci/splitting_type.hpp"

namespace splitloci {

/// Numerical context for a degree-k cover of the projective line by a curve of
/// genus g, carrying line bundles of degree d.
struct BNContext {
    Int g;  // genus, >= 0
    Int k;  // degree of the cover, >= 2
    Int d;  // line-bundle degree

    BNContext(Int g_, Int k_, Int d_);

    // Degree of the push-forward bundle: chi(L) - k = d - g + 1 - k.
    Int pushforward_degree() const { return d - g + 1 - k; }
};

/// g - (r+1)(g - d + r).
Int rho(Int g, Int r, Int d);

/// max over l in {0..r'} of rho(g, r-l, d) - l*k with r' = min(r, g-d+r-1).
/// When r <= d - g every bundle qualifies and the locus is all of Pic, of
/// dimension g.
Int rho_k(const BNContext& ctx, Int r);

/// The candidate maximal stratum with l sections coming from the second block:
/// balanced(k-r-1+l, d'-l) ++ balanced(r+1-l, l). Requires r > d - g
/// ("Brill-Noether locus is all of Pic" otherwise) and
/// max(0, r+2-k) <= l <= r ("no such stratum" otherwise).
SplittingType w_rl(const BNContext& ctx, Int r, Int ell);

/// Closed form l*k - (r+1-l)(d-g-r+l) for expected_codim(w_rl(ctx, r, l)).
/// Same preconditions as w_rl.
Int u_wrl_closed_form(const BNContext& ctx, Int r, Int ell);

/// Whether w_rl(ctx, r, l) is dominance-maximal among types with at least r+1
/// sections: l = 0 or l <= g - d + 2r + 1 - k.
bool wrl_is_maximal(const BNContext& ctx, Int r, Int ell);

/// One stratum row of a locus decomposition.
struct StratumReport {
    SplittingType stratum;
    Int ell;
    Int codim;                 // expected_codim(stratum)
    std::optional<Int> dim;    // g - codim when codim <= g, empty otherwise
    bool maximal;
};

/// Decomposition of the locus of degree-d line bundles with >= r+1 sections
/// into splitting-type strata, one row per l in [max(0, r+2-k), r], sorted by
/// l ascending. When r <= d - g the locus is all of Pic: whole_picard is set
/// and the row list is empty.
struct WrdReport {
    BNContext ctx;
    Int r;
    bool whole_picard;
    std::vector<StratumReport> strata;
};

WrdReport wrd_decomposition(const BNContext& ctx, Int r);

/// Independent oracle: enumerate every type of the given rank/degree with all
/// parts in [-window, window], keep those with h0_twist(e, 0) >= r+1, and
/// return the dominance-maximal ones, sorted ascending. The window must
/// contain every maximal type; |degree| + rank + r + 2 always suffices (see
/// maximal_strata_default_window).
std::vector<SplittingType> maximal_strata_bruteforce(Int rank, Int degree, Int r, Int window);
std::vector<SplittingType> maximal_strata_bruteforce_serial(Int rank, Int degree, Int r,
                                                            Int window);

/// Window guaranteed to contain all dominance-maximal types with h0 >= r+1:
/// every such type has parts in [degree - rank, max(rank, |degree|)], and
/// |degree| + rank + r + 2 covers that range with margin.
Int maximal_strata_default_window(Int rank, Int degree, Int r);

/// All types of the given rank and degree with parts in [-window, window],
/// sorted ascending. Shared enumeration core for the oracle and the poset
/// builder.
std::vector<SplittingType> enumerate_types(Int rank, Int degree, Int window);

}  // namespace splitloci

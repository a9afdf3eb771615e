#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitloci/brill_noether.hpp"
#include "splitloci/splitting_type.hpp"

namespace splitloci {

/// Stratification poset of one Picard universe: all splitting types of rank k
/// and degree d' = d - g + 1 - k whose stratum can be non-empty (u <= g),
/// ordered by dominance. Nodes are sorted lexicographically; covers are the
/// irreducible order relations (no third node strictly between).
struct StratPoset {
    BNContext ctx;
    Int extra;                                            // nodes satisfy u <= g + extra
    std::vector<SplittingType> nodes;                     // lex ascending
    std::vector<Int> codims;                              // u per node
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper) index pairs
};

inline constexpr Int kDefaultNodeCap = 100000;

/// Enumerates all types of rank k, degree d' with u <= g + extra_empty and
/// computes the Hasse diagram. Throws std::runtime_error("poset too large")
/// when the node count exceeds node_cap.
StratPoset build_poset(const BNContext& ctx, Int extra_empty = 0, Int node_cap = kDefaultNodeCap);

/// Cover relations of a lex-sorted list of same-rank/degree types: pairs
/// (i, j) with node i strictly below node j and nothing in between. The two
/// variants compute identical output; one fans rows out across threads.
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(
    const std::vector<SplittingType>& nodes);
std::vector<std::pair<std::size_t, std::size_t>> hasse_covers_serial(
    const std::vector<SplittingType>& nodes);

/// All nodes <= e, including e itself: the index set of the closed stratum of
/// e. Throws std::invalid_argument("no such stratum") if e is not a node.
std::vector<SplittingType> downset(const StratPoset& p, const SplittingType& e);

/// g - u(e) when u(e) <= g, empty optional otherwise. Throws
/// std::invalid_argument("rank or degree mismatch") when e does not live in
/// ctx's Picard universe.
std::optional<Int> expected_dimension(const BNContext& ctx, const SplittingType& e);

/// Deterministic DOT digraph: nodes labeled "(e1, ..., ek) u=...", one edge
/// per cover, lower -> upper.
std::string export_dot(const StratPoset& p);

}  // namespace splitloci

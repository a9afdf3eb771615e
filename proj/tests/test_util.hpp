#pragma once

#include <random>
#include <utility>
#include <vector>

#include "splitloci/splitting_type.hpp"

namespace testutil {

using splitloci::Int;
using splitloci::SplittingType;

inline Int rand_int(std::mt19937_64& rng, Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(rng);
}

inline SplittingType random_type(std::mt19937_64& rng, Int max_rank = 8, Int spread = 12) {
    const Int k = rand_int(rng, 1, max_rank);
    std::vector<Int> parts;
    for (Int i = 0; i < k; ++i) parts.push_back(rand_int(rng, -spread, spread));
    return splitloci::make_type(std::move(parts));
}

// One step down in dominance: move a unit from a lower part to a higher one
// (the parts spread further apart). Identity for rank 1.
inline SplittingType spread_once(std::mt19937_64& rng, const SplittingType& e) {
    const Int k = e.rank();
    if (k == 1) return e;
    std::vector<Int> p = e.parts();
    const Int i = rand_int(rng, 0, k - 2);
    const Int j = rand_int(rng, i + 1, k - 1);
    p[static_cast<std::size_t>(i)] -= 1;
    p[static_cast<std::size_t>(j)] += 1;
    return splitloci::make_type(std::move(p));
}

// One step up in dominance (weakly): move a unit from a max part to a min
// part. Leaves balanced types balanced.
inline SplittingType balance_once(const SplittingType& e) {
    if (e.max_part() == e.min_part()) return e;  // moving a unit would overshoot
    std::vector<Int> p = e.parts();
    p.front() += 1;
    p.back() -= 1;
    return splitloci::make_type(std::move(p));
}

}  // namespace testutil

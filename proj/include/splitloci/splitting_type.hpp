#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitloci {

using Int = std::int64_t;

// Overflow-checked machine arithmetic. All splitting-type numerology stays in
// int64; the CLI caps inputs at |v| <= 10^6 so these never fire in practice.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
    return r;
}

/// A splitting type (e_1, ..., e_k): the degrees of the line-bundle summands
/// of a rank-k vector bundle on the projective line. Stored sorted ascending;
/// two types are equal iff their sorted parts are equal.
class SplittingType {
public:
    explicit SplittingType(std::vector<Int> parts);

    Int rank() const { return static_cast<Int>(parts_.size()); }
    Int degree() const;
    Int min_part() const { return parts_.front(); }
    Int max_part() const { return parts_.back(); }
    const std::vector<Int>& parts() const { return parts_; }

    bool operator==(const SplittingType& o) const { return parts_ == o.parts_; }
    // Lexicographic on parts; used only for deterministic ordering of output.
    bool operator<(const SplittingType& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "(-3, -1, 1)"

private:
    std::vector<Int> parts_;
};

/// Canonicalizing factory. Throws std::invalid_argument("rank must be positive")
/// on an empty part list.
SplittingType make_type(std::vector<Int> parts);

/// The balanced type of the given rank and degree: all parts within 1 of each
/// other. It is the unique dominance maximum of its rank/degree universe.
SplittingType balanced(Int rank, Int degree);

/// Expected codimension of the stratum of the type: the number of deformation
/// directions, sum over pairs i<j of max(0, e_j - e_i - 1). Zero exactly for
/// balanced types.
Int expected_codim(const SplittingType& e);

/// Dominance (specialization) order: a <= b iff every prefix sum of a is <= the
/// corresponding prefix sum of b. Only defined between types of equal rank and
/// degree; otherwise throws std::invalid_argument("incomparable universes").
bool dominance_leq(const SplittingType& a, const SplittingType& b);

/// Global sections of the twist: sum over parts of max(0, e_i + m + 1).
Int h0_twist(const SplittingType& e, Int m);

/// Global sections of the endomorphism bundle: sum over ordered pairs (i, j),
/// including i = j, of max(0, e_i - e_j + 1). Always rank^2 + expected_codim.
Int h0_end(const SplittingType& e);

/// Dual type under the relative-duality shift: parts -e_i - 2, resorted.
/// An involution; preserves expected_codim and reverses dominance.
SplittingType serre_dual(const SplittingType& e);

/// Section counts h0_twist(e, m) tabulated over the full support window
/// m = -(max part) - 2 ... -(min part). Outside the window the second
/// differences vanish, so the profile determines the type.
struct HilbertProfile {
    Int base_twist = 0;            // m0
    std::vector<Int> values;       // h(m0), h(m0+1), ..., h(m1)

    Int at(Int m) const;           // 0 below the window; throws above it
};

HilbertProfile hilbert_profile(const SplittingType& e);

/// Inverse of hilbert_profile: the multiplicity of part -j is the second
/// difference of the profile at j. Throws
/// std::invalid_argument("not a splitting-type Hilbert function") when the
/// profile is not realizable by a type of the given rank.
SplittingType type_from_hilbert(const HilbertProfile& p, Int rank);

}  // namespace splitloci

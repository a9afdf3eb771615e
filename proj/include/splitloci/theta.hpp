#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "splitloci/splitting_type.hpp"

namespace splitloci {

/// Polynomial in the theta class truncated at theta^trunc, with exact rational
/// coefficients. All arithmetic is modulo theta^(trunc+1); on a genus-g
/// Jacobian trunc = g since theta^(g+1) = 0.
struct ThetaPoly {
    std::vector<mpq_class> coeffs;  // coeffs[i] multiplies theta^i

    Int trunc() const { return static_cast<Int>(coeffs.size()) - 1; }
    const mpq_class& coeff(Int i) const;  // 0 <= i <= trunc
};

/// sum_{i <= trunc} (sign * theta)^i / i!.
ThetaPoly exp_series(int sign, Int trunc);

/// Truncated product / quotient; results carry the smaller truncation of the
/// two operands. div requires a unit (non-zero constant term) divisor and
/// throws std::invalid_argument("non-unit divisor") otherwise; it returns the
/// q with a = q * b modulo truncation.
ThetaPoly mul(const ThetaPoly& a, const ThetaPoly& b);
ThetaPoly div(const ThetaPoly& a, const ThetaPoly& b);

/// Class data of one closed stratum: its class is a * theta^u. When u equals
/// the ambient genus the locus is zero-dimensional and points = a * g! counts
/// its points.
struct ClassResult {
    mpq_class a;
    Int u;
    std::optional<mpz_class> points;
};

/// Class coefficient for an extreme-summand type: the type
/// (-n) ++ balanced(k-1, total_degree + n) with -n strictly below every
/// balanced part (throws std::invalid_argument("not an extreme-summand type")
/// otherwise). The coefficient is the theta^u coefficient of (e^theta)^2 /
/// e^theta computed through the series engine; it depends only on the type,
/// never on g.
ClassResult extreme_summand_class(Int k, Int total_degree, Int n, Int g);

/// Class coefficient through the dualizing involution: uses
/// extreme_summand_class on serre_dual(e) when that is extreme-summand, or on
/// e itself when only e is (the involution preserves the class). Throws
/// std::invalid_argument("coefficient not computable by this module") when
/// neither is.
ClassResult dual_class(const SplittingType& e, Int g);

/// a * g! for a zero-dimensional class a * theta^g. Throws
/// std::invalid_argument("not zero-dimensional") when u != g and
/// std::invalid_argument("inconsistent class") when a * g! is not a
/// non-negative integer.
mpz_class point_count(const mpq_class& a, Int u, Int g);

/// Confirms that the two rank-3 codimension-4 stratum classes add to
/// theta^4 / 12, the classical class of the full locus: 1/24 + 1/24 = 1/12,
/// with both summands produced by the class engine at the given genus.
bool kkl_check(Int g);

}  // namespace splitloci

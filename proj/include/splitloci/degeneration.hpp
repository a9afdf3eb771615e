#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitloci/rational_linalg.hpp"
#include "splitloci/splitting_type.hpp"

namespace splitloci {

/// Push-forward splitting of a degree-d line bundle under a degree-k cover of
/// the projective line by an elliptic curve. With d = a + nk, 0 <= a < k:
/// the pullback of O(n) pushes to (n-2, n-1 x(k-2), n); anything else pushes
/// to (n-1 x(k-a), n xa). Pullback requires k | d.
SplittingType elliptic_pushforward(Int k, Int d, bool pullback);

enum class RamPoint { p, q };

/// Endomorphism matrix model over E = O^(k-a) + O(1)^a on the projective
/// line, for a degree-k elliptic cover totally ramified at p and q. Rows and
/// columns 0..a-1 are the O(1) summands, a..k-1 the O summands. Entries:
///   - c[l][j]: scalar, inside either diagonal block;
///   - alpha[l][j], beta[l][j]: the linear form alpha*s + beta*t in the
///     off block (l < a <= j), with s vanishing at q and t at p.
/// The lower-left block is identically zero, leaving k*k genuine unknowns.
///
/// An optional special position L = O(n p + m q) (n + m = a + k, n >= m >= 1,
/// n <= k) shifts the vanishing orders of two basis sections and thereby
/// exempts one matrix entry from the order-preservation constraints at q:
/// with a < n < k the entry (n, n-1) (and the extra condition c[n-1][n] = 0
/// appears); with n = k the entry (0, k-1)'s beta coefficient.
class EndoModel {
public:
    EndoModel(Int k, Int a);                    // bundle in general position
    EndoModel(Int k, Int a, Int n, Int m);      // L = O(n p + m q)

    Int k() const { return k_; }
    Int a() const { return a_; }
    bool special() const { return special_.has_value(); }
    Int special_n() const { return special_->first; }
    Int special_m() const { return special_->second; }

    Int variable_count() const { return k_ * k_; }

    // Variable indices into solution vectors; throw std::invalid_argument on
    // entries that are structurally zero or not of the requested kind.
    Int c_index(Int l, Int j) const;
    Int alpha_index(Int l, Int j) const;
    Int beta_index(Int l, Int j) const;
    std::string variable_name(Int idx) const;

    // Number of non-zero matrix entries of a solution; an alpha/beta pair is
    // one entry, non-zero when either coefficient is.
    Int entry_support(const std::vector<mpq_class>& phi) const;

private:
    Int k_, a_;
    std::optional<std::pair<Int, Int>> special_;  // (n, m)
};

struct ConstraintRow {
    std::vector<std::pair<Int, mpq_class>> coeffs;  // (variable index, coefficient)
    std::string tag;
};

/// Homogeneous linear system on an EndoModel's variables; its solution space
/// is the corresponding space of endomorphisms.
struct ConstraintSystem {
    Int nvars = 0;
    std::vector<ConstraintRow> rows;
};

/// Vanishing pattern forced by order preservation at the given ramification
/// point, including the special-position exemptions.
ConstraintSystem order_preserving_space(const EndoModel& m, RamPoint at);

ConstraintSystem stacked(const ConstraintSystem& a, const ConstraintSystem& b);

/// Dimension of the solution space, exact over the rationals.
Int nullity(const ConstraintSystem& cs);

std::vector<std::vector<mpq_class>> nullspace_basis(const ConstraintSystem& cs);

bool satisfies(const ConstraintSystem& cs, const std::vector<mpq_class>& phi);

/// Diagonal-extraction map on the doubly order-preserving space: rank of
/// phi -> (c[0][0], ..., c[k-1][k-1]) restricted to solutions of
/// at-p + at-q, its kernel dimension, and the largest matrix-entry support
/// among kernel basis vectors.
struct DiagAnalysis {
    Int rank;
    Int kernel_dim;
    Int max_kernel_entry_support;
};

DiagAnalysis diag_map_analysis(const EndoModel& m);
Int diag_map_rank(const EndoModel& m);

/// Induced scalars on the graded pieces of the vanishing-order filtration at
/// a ramification point: position r holds the diagonal entry of the basis
/// section with vanishing order exactly r there. Requires phi to be order
/// preserving at that point ("compatibility undefined" otherwise).
std::vector<mpq_class> node_diagonal(const EndoModel& m, const std::vector<mpq_class>& phi,
                                     RamPoint at);

/// Gluing condition on graded diagonals across a node: constant terms agree
/// and position j on the left matches position k-j on the right, j=1..k-1.
bool diagonals_node_compatible(const std::vector<mpq_class>& left,
                               const std::vector<mpq_class>& right);

/// Full check for two adjacent components meeting at a node: the left
/// solution must be order preserving at its q side, the right at its p side
/// (else std::invalid_argument("compatibility undefined")), then the graded
/// diagonals are matched index-reversed.
bool node_compatibility(const EndoModel& left_model, const std::vector<mpq_class>& left_phi,
                        const EndoModel& right_model, const std::vector<mpq_class>& right_phi);

/// Dimension bound for a chain of g elliptic components: evaluates the
/// component-by-component sum
///   2*(k(k+1)/2) + sum_{i=2}^{g-1}(k + eps_i) + eps_1 + eps_g - k(g-1)
/// and returns its simplified value k^2 + sum(eps). eps_i flags components
/// whose bundle sits in the special position at its node(s).
Int chain_bound(Int g, Int k, const std::vector<int>& eps);

/// One verified configuration of the nullity suite.
struct LemmaCaseReport {
    Int k, a;
    std::string case_name;  // "generic", "special n=.. m=..", "special n=k m=.."
    Int dim_wp, dim_wq, dim_wpq;
    Int expected_wp, expected_wq, expected_wpq;
    Int diag_rank, kernel_dim, max_kernel_support;
    bool pass;
};

/// Sweep every valid (a, position) configuration for 2 <= k <= kmax and
/// compare exact nullities, diagonal rank, and kernel supports against the
/// predicted case table.
std::vector<LemmaCaseReport> lemma_sweep(Int kmax);

}  // namespace splitloci

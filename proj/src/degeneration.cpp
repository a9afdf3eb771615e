#include "splitloci/degeneration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace splitloci {
namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

QMatrix to_matrix(const ConstraintSystem& cs) {
    QMatrix m(cs.rows.size(), static_cast<std::size_t>(cs.nvars));
    for (std::size_t i = 0; i < cs.rows.size(); ++i)
        for (const auto& [idx, coeff] : cs.rows[i].coeffs)
            m.at(i, static_cast<std::size_t>(idx)) += coeff;
    return m;
}

void push_unit_row(ConstraintSystem& cs, Int var, std::string tag) {
    cs.rows.push_back(ConstraintRow{{{var, mpq_class{1}}}, std::move(tag)});
}

std::string entry_tag(const char* kind, Int l, Int j, const char* where) {
    std::ostringstream os;
    os << kind << "[" << l << "][" << j << "] = 0 at " << where;
    return os.str();
}

}  // namespace

SplittingType elliptic_pushforward(Int k, Int d, bool pullback) {
    require(k >= 2, "cover degree must be at least 2");
    Int n = d / k;
    Int a = d % k;
    if (a < 0) {
        n -= 1;
        a += k;
    }
    std::vector<Int> parts;
    if (pullback) {
        require(a == 0, "pullback degree must be divisible by the cover degree");
        parts.push_back(n - 2);
        for (Int i = 0; i < k - 2; ++i) parts.push_back(n - 1);
        parts.push_back(n);
    } else {
        for (Int i = 0; i < k - a; ++i) parts.push_back(n - 1);
        for (Int i = 0; i < a; ++i) parts.push_back(n);
    }
    return SplittingType(std::move(parts));
}

EndoModel::EndoModel(Int k, Int a) : k_(k), a_(a) {
    require(k_ >= 1, "rank must be positive");
    require(a_ >= 0 && a_ < k_, "degree-1 summand count must satisfy 0 <= a < k");
}

EndoModel::EndoModel(Int k, Int a, Int n, Int m) : EndoModel(k, a) {
    require(n + m == a_ + k_, "special position requires n + m = a + k");
    require(m >= 1 && n >= m, "special position requires n >= m >= 1");
    require(n <= k_, "special position requires n <= k");
    special_ = std::make_pair(n, m);
}

Int EndoModel::c_index(Int l, Int j) const {
    if (l < a_ && j < a_) return l * a_ + j;
    if (l >= a_ && j >= a_ && l < k_ && j < k_)
        return a_ * a_ + (l - a_) * (k_ - a_) + (j - a_);
    throw std::invalid_argument("no scalar entry at this position");
}

Int EndoModel::alpha_index(Int l, Int j) const {
    if (!(l >= 0 && l < a_ && j >= a_ && j < k_))
        throw std::invalid_argument("no linear-form entry at this position");
    return a_ * a_ + (k_ - a_) * (k_ - a_) + 2 * (l * (k_ - a_) + (j - a_));
}

Int EndoModel::beta_index(Int l, Int j) const { return alpha_index(l, j) + 1; }

std::string EndoModel::variable_name(Int idx) const {
    std::ostringstream os;
    const Int b = k_ - a_;
    if (idx < a_ * a_) {
        os << "c[" << idx / a_ << "][" << idx % a_ << "]";
    } else if (idx < a_ * a_ + b * b) {
        const Int off = idx - a_ * a_;
        os << "c[" << a_ + off / b << "][" << a_ + off % b << "]";
    } else {
        const Int off = idx - a_ * a_ - b * b;
        os << (off % 2 == 0 ? "alpha[" : "beta[") << (off / 2) / b << "][" << a_ + (off / 2) % b
           << "]";
    }
    return os.str();
}

Int EndoModel::entry_support(const std::vector<mpq_class>& phi) const {
    if (static_cast<Int>(phi.size()) != variable_count())
        throw std::invalid_argument("solution vector has wrong length");
    Int count = 0;
    for (Int l = 0; l < k_; ++l)
        for (Int j = 0; j < k_; ++j) {
            if (l >= a_ && j < a_) continue;  // structurally zero block
            if (l < a_ && j >= a_) {
                if (phi[static_cast<std::size_t>(alpha_index(l, j))] != 0 ||
                    phi[static_cast<std::size_t>(beta_index(l, j))] != 0)
                    ++count;
            } else if (phi[static_cast<std::size_t>(c_index(l, j))] != 0) {
                ++count;
            }
        }
    return count;
}

ConstraintSystem order_preserving_space(const EndoModel& m, RamPoint at) {
    const Int k = m.k(), a = m.a();
    ConstraintSystem cs;
    cs.nvars = m.variable_count();
    const bool at_p = (at == RamPoint::p);

    if (at_p) {
        // Same pattern in every position of L: t vanishes at p, so no image
        // may pick up a linear form, and no section may map to one vanishing
        // less at p.
        for (Int l = 0; l < a; ++l)
            for (Int j = a; j < k; ++j)
                push_unit_row(cs, m.alpha_index(l, j), entry_tag("alpha", l, j, "p"));
        for (Int l = 0; l < k; ++l)
            for (Int j = l + 1; j < k; ++j) {
                if (l < a && j >= a) continue;  // linear-form entry, covered above
                push_unit_row(cs, m.c_index(l, j), entry_tag("c", l, j, "p"));
            }
        return cs;
    }

    if (!m.special()) {
        for (Int l = 0; l < a; ++l)
            for (Int j = a; j < k; ++j)
                push_unit_row(cs, m.beta_index(l, j), entry_tag("beta", l, j, "q"));
        for (Int j = 0; j < k; ++j)
            for (Int l = j + 1; l < k; ++l) {
                if (l >= a && j < a) continue;  // structurally zero
                push_unit_row(cs, m.c_index(l, j), entry_tag("c", l, j, "q"));
            }
        return cs;
    }

    const Int n = m.special_n();
    if (n != k) {
        // Basis sections n-1 and n trade vanishing orders at q: the (n, n-1)
        // entry escapes the below-diagonal pattern, (n-1, n) joins it.
        for (Int l = 0; l < a; ++l)
            for (Int j = a; j < k; ++j)
                push_unit_row(cs, m.beta_index(l, j), entry_tag("beta", l, j, "q"));
        for (Int j = 0; j < k; ++j)
            for (Int l = j + 1; l < k; ++l) {
                if (l >= a && j < a) continue;
                if (l == n && j == n - 1) continue;
                push_unit_row(cs, m.c_index(l, j), entry_tag("c", l, j, "q"));
            }
        push_unit_row(cs, m.c_index(n - 1, n), entry_tag("c", n - 1, n, "q"));
        return cs;
    }

    // n = k: the last O summand vanishes at q one order below the first O(1)
    // summand, freeing that beta coefficient.
    for (Int l = 0; l < a; ++l)
        for (Int j = a; j < k; ++j) {
            if (l == 0 && j == k - 1) continue;
            push_unit_row(cs, m.beta_index(l, j), entry_tag("beta", l, j, "q"));
        }
    for (Int j = 0; j < k; ++j)
        for (Int l = j + 1; l < k; ++l) {
            if (l >= a && j < a) continue;
            push_unit_row(cs, m.c_index(l, j), entry_tag("c", l, j, "q"));
        }
    return cs;
}

ConstraintSystem stacked(const ConstraintSystem& a, const ConstraintSystem& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("variable count mismatch");
    ConstraintSystem out = a;
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    return out;
}

Int nullity(const ConstraintSystem& cs) {
    return cs.nvars - static_cast<Int>(rank(to_matrix(cs)));
}

std::vector<std::vector<mpq_class>> nullspace_basis(const ConstraintSystem& cs) {
    return nullspace(to_matrix(cs));
}

bool satisfies(const ConstraintSystem& cs, const std::vector<mpq_class>& phi) {
    if (static_cast<Int>(phi.size()) != cs.nvars)
        throw std::invalid_argument("solution vector has wrong length");
    for (const ConstraintRow& row : cs.rows) {
        mpq_class acc{0};
        for (const auto& [idx, coeff] : row.coeffs)
            acc += coeff * phi[static_cast<std::size_t>(idx)];
        if (acc != 0) return false;
    }
    return true;
}

DiagAnalysis diag_map_analysis(const EndoModel& m) {
    const ConstraintSystem both =
        stacked(order_preserving_space(m, RamPoint::p), order_preserving_space(m, RamPoint::q));
    const auto basis = nullspace_basis(both);
    const Int k = m.k();

    // Matrix of the diagonal map in the solution basis: column per basis
    // vector, row per diagonal position.
    QMatrix dm(static_cast<std::size_t>(k), basis.size());
    for (Int r = 0; r < k; ++r)
        for (std::size_t b = 0; b < basis.size(); ++b)
            dm.at(static_cast<std::size_t>(r), b) =
                basis[b][static_cast<std::size_t>(m.c_index(r, r))];

    const Int diag_rank = static_cast<Int>(rank(dm));
    const auto kernel_coords = nullspace(dm);
    Int max_support = 0;
    for (const auto& x : kernel_coords) {
        std::vector<mpq_class> v(static_cast<std::size_t>(m.variable_count()), mpq_class{0});
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (x[b] == 0) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += x[b] * basis[b][i];
        }
        max_support = std::max(max_support, m.entry_support(v));
    }
    return DiagAnalysis{diag_rank, static_cast<Int>(kernel_coords.size()), max_support};
}

Int diag_map_rank(const EndoModel& m) { return diag_map_analysis(m).rank; }

std::vector<mpq_class> node_diagonal(const EndoModel& m, const std::vector<mpq_class>& phi,
                                     RamPoint at) {
    if (!satisfies(order_preserving_space(m, at), phi))
        throw std::invalid_argument("compatibility undefined");
    const Int k = m.k(), a = m.a();
    std::vector<mpq_class> d(static_cast<std::size_t>(k));
    if (at == RamPoint::p) {
        // Vanishing order of basis section j at p is j.
        for (Int j = 0; j < k; ++j)
            d[static_cast<std::size_t>(j)] = phi[static_cast<std::size_t>(m.c_index(j, j))];
        return d;
    }
    const Int n = m.special() ? m.special_n() : -1;
    for (Int r = 0; r < k; ++r) {
        Int j;
        if (n == k) {
            // Orders at q: u_j for j >= 1 sit at a-1-j, the last O summand at
            // a-1, u_0 at a, remaining O summands at k+a-1-j.
            if (r <= a - 2) j = a - 1 - r;
            else if (r == a - 1) j = k - 1;
            else if (r == a) j = 0;
            else j = k + a - 1 - r;
        } else {
            j = (r < a) ? a - 1 - r : k + a - 1 - r;
            if (n >= 0) {
                // Sections n-1 and n swap their q orders.
                if (j == n) j = n - 1;
                else if (j == n - 1) j = n;
            }
        }
        d[static_cast<std::size_t>(r)] = phi[static_cast<std::size_t>(m.c_index(j, j))];
    }
    return d;
}

bool diagonals_node_compatible(const std::vector<mpq_class>& left,
                               const std::vector<mpq_class>& right) {
    if (left.size() != right.size() || left.empty())
        throw std::invalid_argument("rank mismatch");
    const std::size_t k = left.size();
    if (left[0] != right[0]) return false;
    for (std::size_t j = 1; j < k; ++j)
        if (left[j] != right[k - j]) return false;
    return true;
}

bool node_compatibility(const EndoModel& left_model, const std::vector<mpq_class>& left_phi,
                        const EndoModel& right_model, const std::vector<mpq_class>& right_phi) {
    if (left_model.k() != right_model.k()) throw std::invalid_argument("rank mismatch");
    const auto dl = node_diagonal(left_model, left_phi, RamPoint::q);
    const auto dr = node_diagonal(right_model, right_phi, RamPoint::p);
    return diagonals_node_compatible(dl, dr);
}

Int chain_bound(Int g, Int k, const std::vector<int>& eps) {
    require(g >= 1, "genus must be at least 1");
    require(k >= 1, "rank must be positive");
    require(static_cast<Int>(eps.size()) == g, "one epsilon flag per component required");
    Int delta = 0;
    for (int e : eps) {
        require(e == 0 || e == 1, "epsilon entries must be 0 or 1");
        delta += e;
    }
    const Int direct = checked_add(checked_mul(k, k), delta);
    if (g == 1) return direct;  // single component, no nodes: full endomorphism space
    Int longform = checked_mul(k, k + 1);  // two end components at k(k+1)/2 each
    for (Int i = 2; i <= g - 1; ++i) longform = checked_add(longform, k + eps[static_cast<std::size_t>(i - 1)]);
    longform = checked_add(longform, eps.front() + eps.back());
    longform = checked_add(longform, -checked_mul(k, g - 1));
    if (longform != direct) throw std::logic_error("component sum does not simplify");
    return direct;
}

std::vector<LemmaCaseReport> lemma_sweep(Int kmax) {
    require(kmax >= 2, "sweep needs k >= 2");
    std::vector<LemmaCaseReport> out;
    const auto run = [&out](const EndoModel& m, std::string name, Int exp_wq, Int exp_wpq) {
        const Int k = m.k();
        const Int exp_wp = k * (k + 1) / 2;
        const ConstraintSystem at_p = order_preserving_space(m, RamPoint::p);
        const ConstraintSystem at_q = order_preserving_space(m, RamPoint::q);
        const Int wp = nullity(at_p);
        const Int wq = nullity(at_q);
        const Int wpq = nullity(stacked(at_p, at_q));
        const DiagAnalysis da = diag_map_analysis(m);
        LemmaCaseReport rep{m.k(), m.a(),   std::move(name), wp,      wq,
                            wpq,   exp_wp,  exp_wq,          exp_wpq, da.rank,
                            da.kernel_dim,  da.max_kernel_entry_support, false};
        rep.pass = wp == exp_wp && wq == exp_wq && wpq == exp_wpq && da.rank == k &&
                   da.kernel_dim == wpq - k && da.max_kernel_entry_support <= 1;
        out.push_back(std::move(rep));
    };

    for (Int k = 2; k <= kmax; ++k) {
        const Int half = k * (k + 1) / 2;
        for (Int a = 0; a < k; ++a) run(EndoModel(k, a), "generic", half, k);
        for (Int a = 0; a <= k - 2; ++a) {
            const Int n_lo = std::max(a + 1, (a + k + 1) / 2);
            for (Int n = n_lo; n <= k - 1; ++n) {
                std::ostringstream name;
                name << "special n=" << n << " m=" << (a + k - n);
                run(EndoModel(k, a, n, a + k - n), name.str(), half, k + 1);
            }
        }
        for (Int a = 1; a < k; ++a) {
            std::ostringstream name;
            name << "special n=k m=" << a;
            run(EndoModel(k, a, k, a), name.str(), half + 1, k + 1);
        }
    }
    return out;
}

}  // namespace splitloci

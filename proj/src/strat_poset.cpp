#include "splitloci/strat_poset.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace splitloci {
namespace {

// Ascending enumeration of parts with incremental u pruning. `partial_u` only
// grows as parts are appended, so any prefix already above the budget is dead.
void enumerate_nodes_rec(Int remaining_rank, Int remaining_degree, Int lo, Int hi, Int u_budget,
                         Int partial_u, Int node_cap, std::vector<Int>& prefix,
                         std::vector<SplittingType>& out, std::vector<Int>& codims) {
    if (remaining_rank == 0) {
        if (remaining_degree == 0) {
            if (static_cast<Int>(out.size()) >= node_cap) throw std::runtime_error("poset too large");
            out.push_back(SplittingType(prefix));
            codims.push_back(partial_u);
        }
        return;
    }
    Int hi_eff = hi;
    if (!prefix.empty()) hi_eff = std::min<Int>(hi_eff, prefix.front() + u_budget + 1);
    for (Int v = lo; v <= hi_eff; ++v) {
        const Int rest = remaining_rank - 1;
        const Int need = remaining_degree - v;
        if (need < checked_mul(rest, v)) break;
        if (need > checked_mul(rest, hi_eff)) continue;
        Int u_next = partial_u;
        for (Int p : prefix) u_next = checked_add(u_next, std::max<Int>(0, v - p - 1));
        if (u_next > u_budget) break;  // larger v only increases the pair sum
        prefix.push_back(v);
        enumerate_nodes_rec(rest, need, v, hi, u_budget, u_next, node_cap, prefix, out, codims);
        prefix.pop_back();
    }
}

struct BitMatrix {
    std::size_t n = 0, words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitMatrix(std::size_t n_) : n(n_), words((n_ + 63) / 64), bits(n_ * words, 0) {}
    std::uint64_t* row(std::size_t i) { return bits.data() + i * words; }
    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
    void set(std::size_t i, std::size_t j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }
};

// Strict dominance as a bit matrix. Nodes are lex-sorted and lex order extends
// dominance, so only pairs i < j can be related.
BitMatrix strict_order_matrix(const std::vector<SplittingType>& nodes, bool parallel) {
    const std::size_t n = nodes.size();
    BitMatrix above(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto si = static_cast<std::size_t>(i);
        for (std::size_t j = si + 1; j < n; ++j)
            if (dominance_leq(nodes[si], nodes[j])) above.set(si, j);
    }
    return above;
}

std::vector<std::pair<std::size_t, std::size_t>> covers_from_matrix(const BitMatrix& above,
                                                                    bool parallel) {
    const std::size_t n = above.n;
    const std::size_t words = above.words;
    std::vector<std::vector<std::size_t>> per_row(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const auto si = static_cast<std::size_t>(i);
        const std::uint64_t* ri = above.row(si);
        // reach = union of rows of everything strictly above i; a j both above
        // i and reachable through an intermediate is not a cover.
        std::vector<std::uint64_t> reach(words, 0);
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t m = ri[w];
            while (m) {
                const std::size_t z = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(m));
                m &= m - 1;
                const std::uint64_t* rz = above.row(z);
                for (std::size_t w2 = 0; w2 < words; ++w2) reach[w2] |= rz[w2];
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t m = ri[w] & ~reach[w];
            while (m) {
                const std::size_t j = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(m));
                m &= m - 1;
                per_row[si].push_back(j);
            }
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j : per_row[i]) covers.emplace_back(i, j);
    return covers;
}

std::vector<std::pair<std::size_t, std::size_t>> covers_impl(
    const std::vector<SplittingType>& nodes, bool parallel) {
    return covers_from_matrix(strict_order_matrix(nodes, parallel), parallel);
}

}  // namespace

StratPoset build_poset(const BNContext& ctx, Int extra_empty, Int node_cap) {
    if (extra_empty < 0) throw std::invalid_argument("extra must be non-negative");
    if (node_cap < 1) throw std::invalid_argument("node cap must be positive");
    const Int dp = ctx.pushforward_degree();
    const Int g_eff = checked_add(ctx.g, extra_empty);
    // Any node has min part <= floor(d'/k), max part >= ceil(d'/k), and
    // max - min <= g_eff + 1 (a single wider pair already pushes u past g_eff).
    Int q = dp / ctx.k;
    if (dp % ctx.k < 0) q -= 1;  // floor
    const Int ceil_avg = (dp % ctx.k == 0) ? q : q + 1;
    const Int lo = checked_add(ceil_avg, -(g_eff + 1));
    const Int hi = checked_add(q, g_eff + 1);

    StratPoset p{ctx, extra_empty, {}, {}, {}};
    std::vector<Int> prefix;
    prefix.reserve(static_cast<std::size_t>(ctx.k));
    enumerate_nodes_rec(ctx.k, dp, lo, hi, g_eff, 0, node_cap, prefix, p.nodes, p.codims);
    p.covers = hasse_covers(p.nodes);
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(
    const std::vector<SplittingType>& nodes) {
    return covers_impl(nodes, /*parallel=*/true);
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers_serial(
    const std::vector<SplittingType>& nodes) {
    return covers_impl(nodes, /*parallel=*/false);
}

std::vector<SplittingType> downset(const StratPoset& p, const SplittingType& e) {
    if (!std::binary_search(p.nodes.begin(), p.nodes.end(), e))
        throw std::invalid_argument("no such stratum");
    std::vector<SplittingType> out;
    for (const SplittingType& x : p.nodes)
        if (dominance_leq(x, e)) out.push_back(x);
    return out;
}

std::optional<Int> expected_dimension(const BNContext& ctx, const SplittingType& e) {
    if (e.rank() != ctx.k || e.degree() != ctx.pushforward_degree())
        throw std::invalid_argument("rank or degree mismatch");
    const Int u = expected_codim(e);
    if (u > ctx.g) return std::nullopt;
    return ctx.g - u;
}

std::string export_dot(const StratPoset& p) {
    std::ostringstream os;
    os << "digraph stratification {\n";
    os << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < p.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << p.nodes[i].str() << " u=" << p.codims[i] << "\"];\n";
    for (const auto& [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace splitloci

#include <random>
#include <vector>

#include "doctest.h"
#include "splitloci/degeneration.hpp"
#include "splitloci/rational_linalg.hpp"
#include "test_util.hpp"

using namespace splitloci;

TEST_CASE("exact rational elimination") {
    {
        QMatrix m(2, 3);
        m.at(0, 0) = 1;
        m.at(0, 1) = 2;
        m.at(0, 2) = 3;
        m.at(1, 0) = 2;
        m.at(1, 1) = 4;
        m.at(1, 2) = 6;  // dependent row
        CHECK(rank(m) == 1);
        const auto ns = nullspace(m);
        CHECK(ns.size() == 2);
    }
    std::mt19937_64 rng(51);
    for (int it = 0; it < 1000; ++it) {
        const Int rows = testutil::rand_int(rng, 1, 6);
        const Int cols = testutil::rand_int(rng, 1, 6);
        QMatrix m(rows, cols);
        for (Int i = 0; i < rows; ++i)
            for (Int j = 0; j < cols; ++j) {
                m.at(i, j) = mpq_class(testutil::rand_int(rng, -4, 4),
                                       testutil::rand_int(rng, 1, 4));
                m.at(i, j).canonicalize();  // two-arg mpq_class does not reduce
            }
        const std::size_t rk = rank(m);
        const auto ns = nullspace(m);
        CHECK(ns.size() == static_cast<std::size_t>(cols) - rk);  // rank-nullity
        for (const auto& v : ns)
            for (Int i = 0; i < rows; ++i) {
                mpq_class acc = 0;
                for (Int j = 0; j < cols; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("elliptic push-forwards") {
    CHECK(elliptic_pushforward(3, 0, true) == make_type({-2, -1, 0}));
    CHECK(elliptic_pushforward(3, 6, true) == make_type({0, 1, 2}));
    CHECK(elliptic_pushforward(3, 1, false) == make_type({-1, -1, 0}));
    CHECK(elliptic_pushforward(4, -2, false) == make_type({-2, -2, -1, -1}));
    CHECK_THROWS_WITH_AS(elliptic_pushforward(3, 1, true),
                         "pullback degree must be divisible by the cover degree",
                         std::invalid_argument);
    CHECK_THROWS_AS(elliptic_pushforward(1, 1, false), std::invalid_argument);
    std::mt19937_64 rng(52);
    for (int it = 0; it < 1000; ++it) {
        const Int k = testutil::rand_int(rng, 2, 9);
        const Int d = testutil::rand_int(rng, -40, 40);
        const SplittingType e = elliptic_pushforward(k, d, false);
        CHECK(e.rank() == k);
        CHECK(e.degree() == d - k);  // genus-1 push-forward degree law
        CHECK(e.max_part() - e.min_part() <= 1);
        const Int dk = k * testutil::rand_int(rng, -5, 5);
        const SplittingType p = elliptic_pushforward(k, dk, true);
        CHECK(p.rank() == k);
        CHECK(p.degree() == dk - k);
        CHECK(p.max_part() - p.min_part() == 2);
    }
}

TEST_CASE("endomorphism model shape") {
    const EndoModel m(3, 1);
    CHECK(m.variable_count() == 9);
    CHECK_FALSE(m.special());
    CHECK(m.c_index(0, 0) == 0);
    CHECK(m.alpha_index(0, 1) >= 0);
    CHECK_THROWS_AS(m.c_index(0, 1), std::invalid_argument);   // off-block entry is a linear form
    CHECK_THROWS_AS(m.alpha_index(1, 2), std::invalid_argument);  // scalar block
    CHECK_THROWS_AS(m.c_index(1, 0), std::invalid_argument);   // structurally zero
    // all indices distinct and within range
    std::vector<bool> seen(static_cast<std::size_t>(m.variable_count()), false);
    const auto mark = [&seen](Int idx) {
        REQUIRE(idx >= 0);
        REQUIRE(idx < 9);
        CHECK_FALSE(seen[static_cast<std::size_t>(idx)]);
        seen[static_cast<std::size_t>(idx)] = true;
    };
    mark(m.c_index(0, 0));
    for (Int l = 1; l < 3; ++l)
        for (Int j = 1; j < 3; ++j) mark(m.c_index(l, j));
    for (Int j = 1; j < 3; ++j) {
        mark(m.alpha_index(0, j));
        mark(m.beta_index(0, j));
    }
    for (bool b : seen) CHECK(b);

    CHECK_THROWS_AS(EndoModel(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(EndoModel(3, -1), std::invalid_argument);
    CHECK_THROWS_WITH_AS(EndoModel(3, 1, 2, 1), "special position requires n + m = a + k",
                         std::invalid_argument);
    CHECK_THROWS_AS(EndoModel(3, 1, 1, 3), std::invalid_argument);  // n < m
    CHECK_THROWS_AS(EndoModel(3, 1, 4, 0), std::invalid_argument);  // n > k
}

TEST_CASE("entry support counts matrix entries") {
    const EndoModel m(3, 1);
    std::vector<mpq_class> phi(9, 0);
    CHECK(m.entry_support(phi) == 0);
    phi[static_cast<std::size_t>(m.c_index(1, 1))] = 5;
    CHECK(m.entry_support(phi) == 1);
    // an alpha/beta pair is a single entry
    phi[static_cast<std::size_t>(m.alpha_index(0, 1))] = 1;
    CHECK(m.entry_support(phi) == 2);
    phi[static_cast<std::size_t>(m.beta_index(0, 1))] = 2;
    CHECK(m.entry_support(phi) == 2);
}

TEST_CASE("one-point and two-point nullities at k=3") {
    for (Int a = 0; a < 3; ++a) {
        const EndoModel m(3, a);
        const auto at_p = order_preserving_space(m, RamPoint::p);
        const auto at_q = order_preserving_space(m, RamPoint::q);
        CHECK(nullity(at_p) == 6);
        CHECK(nullity(at_q) == 6);
        CHECK(nullity(stacked(at_p, at_q)) == 3);
        // nullspace vectors solve both systems
        for (const auto& v : nullspace_basis(stacked(at_p, at_q))) {
            CHECK(satisfies(at_p, v));
            CHECK(satisfies(at_q, v));
        }
    }
}

TEST_CASE("special positions shift the nullities") {
    {
        const EndoModel m(3, 1, 2, 2);  // a < n < k
        CHECK(nullity(order_preserving_space(m, RamPoint::p)) == 6);
        CHECK(nullity(order_preserving_space(m, RamPoint::q)) == 6);
        CHECK(nullity(stacked(order_preserving_space(m, RamPoint::p),
                              order_preserving_space(m, RamPoint::q))) == 4);
    }
    {
        const EndoModel m(3, 1, 3, 1);  // n = k
        CHECK(nullity(order_preserving_space(m, RamPoint::p)) == 6);
        CHECK(nullity(order_preserving_space(m, RamPoint::q)) == 7);
        CHECK(nullity(stacked(order_preserving_space(m, RamPoint::p),
                              order_preserving_space(m, RamPoint::q))) == 4);
    }
}

TEST_CASE("diagonal extraction map") {
    CHECK(diag_map_rank(EndoModel(1, 0)) == 1);
    {
        const DiagAnalysis d = diag_map_analysis(EndoModel(3, 1));
        CHECK(d.rank == 3);
        CHECK(d.kernel_dim == 0);
    }
    {
        const DiagAnalysis d = diag_map_analysis(EndoModel(3, 1, 2, 2));
        CHECK(d.rank == 3);
        CHECK(d.kernel_dim == 1);
        CHECK(d.max_kernel_entry_support == 1);
    }
    {
        const DiagAnalysis d = diag_map_analysis(EndoModel(4, 1, 4, 1));
        CHECK(d.rank == 4);
        CHECK(d.kernel_dim == 1);
        CHECK(d.max_kernel_entry_support == 1);
    }
}

TEST_CASE("graded diagonals and node gluing") {
    const EndoModel m(3, 1);
    std::vector<mpq_class> id(9, 0);
    for (Int j = 0; j < 3; ++j) id[static_cast<std::size_t>(m.c_index(j, j))] = 1;
    const auto at_p = node_diagonal(m, id, RamPoint::p);
    const auto at_q = node_diagonal(m, id, RamPoint::q);
    CHECK(at_p == std::vector<mpq_class>{1, 1, 1});
    CHECK(at_q == std::vector<mpq_class>{1, 1, 1});

    CHECK(diagonals_node_compatible({1, 2, 3}, {1, 3, 2}));
    CHECK_FALSE(diagonals_node_compatible({1, 2, 3}, {1, 2, 3}));
    CHECK(diagonals_node_compatible({1, 2, 2}, {1, 2, 2}));
    CHECK(diagonals_node_compatible({5}, {5}));
    CHECK_FALSE(diagonals_node_compatible({1, 2, 3}, {2, 3, 2}));
    CHECK_THROWS_WITH_AS(diagonals_node_compatible({1, 2}, {1, 2, 3}), "rank mismatch",
                         std::invalid_argument);

    CHECK(node_compatibility(m, id, m, id));
    std::vector<mpq_class> twice(9, 0);
    for (Int j = 0; j < 3; ++j) twice[static_cast<std::size_t>(m.c_index(j, j))] = 2;
    CHECK_FALSE(node_compatibility(m, id, m, twice));

    std::vector<mpq_class> bad(9, 0);
    bad[static_cast<std::size_t>(m.beta_index(0, 1))] = 1;
    CHECK_THROWS_WITH_AS(node_diagonal(m, bad, RamPoint::q), "compatibility undefined",
                         std::invalid_argument);
    CHECK_THROWS_AS(node_compatibility(m, bad, m, id), std::invalid_argument);
}

TEST_CASE("chain bounds") {
    CHECK(chain_bound(5, 3, {0, 0, 0, 0, 0}) == 9);
    CHECK(chain_bound(5, 3, {1, 0, 1, 0, 0}) == 11);
    CHECK(chain_bound(1, 4, {0}) == 16);
    CHECK(chain_bound(2, 2, {1, 1}) == 6);
    CHECK_THROWS_AS(chain_bound(0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(chain_bound(3, 3, {0, 0}), std::invalid_argument);  // wrong eps length
    CHECK_THROWS_AS(chain_bound(3, 3, {0, 2, 0}), std::invalid_argument);  // eps not 0/1
    std::mt19937_64 rng(53);
    for (int it = 0; it < 2000; ++it) {
        const Int g = testutil::rand_int(rng, 1, 30);
        const Int k = testutil::rand_int(rng, 1, 8);
        std::vector<int> eps;
        Int delta = 0;
        for (Int i = 0; i < g; ++i) {
            eps.push_back(static_cast<int>(testutil::rand_int(rng, 0, 1)));
            delta += eps.back();
        }
        if (g == 1) {  // a single component has no node
            eps[0] = 0;
            delta = 0;
        }
        CHECK(chain_bound(g, k, eps) == k * k + delta);
    }
}

TEST_CASE("nullity case sweep") {
    const auto cases = lemma_sweep(5);
    CHECK(!cases.empty());
    Int generic = 0, special = 0;
    for (const auto& c : cases) {
        CHECK(c.pass);
        CHECK(c.dim_wp == c.k * (c.k + 1) / 2);
        CHECK(c.diag_rank == c.k);
        CHECK(c.max_kernel_support <= 1);
        if (c.case_name == "generic") {
            CHECK(c.dim_wpq == c.k);
            ++generic;
        } else {
            CHECK(c.dim_wpq == c.k + 1);
            ++special;
        }
    }
    // one generic case per (k, a); at least one special case per k >= 2
    CHECK(generic == 2 + 3 + 4 + 5);
    CHECK(special > 0);
    CHECK_THROWS_AS(lemma_sweep(1), std::invalid_argument);
}

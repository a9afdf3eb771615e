#include "splitloci/cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "splitloci/brill_noether.hpp"
#include "splitloci/degeneration.hpp"
#include "splitloci/splitting_type.hpp"
#include "splitloci/strat_poset.hpp"
#include "splitloci/theta.hpp"

namespace splitloci::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kSchema = "splitloci/1";
constexpr std::int64_t kValueCap = 1000000;    // |numeric flag| bound
constexpr std::int64_t kNodeCapMax = 100000000;

ordered_json parts_json(const SplittingType& e) {
    ordered_json a = ordered_json::array();
    for (Int p : e.parts()) a.push_back(p);
    return a;
}

ordered_json int_or_string(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

ordered_json rational_json(const mpq_class& q) {
    return ordered_json::array({int_or_string(q.get_num()), int_or_string(q.get_den())});
}

ordered_json dim_json(const std::optional<Int>& dim) {
    if (dim) return *dim;
    return nullptr;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

// Plain-text table: first row is the header, columns padded to the widest
// cell, two spaces between columns, no trailing padding on the last column.
struct Table {
    std::vector<std::vector<std::string>> rows;

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c >= width.size()) width.resize(c + 1, 0);
                width[c] = std::max(width[c], row[c].size());
            }
        std::ostringstream os;
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c + 1 == row.size()) {
                    os << row[c];
                } else {
                    os << row[c] << std::string(width[c] - row[c].size() + 2, ' ');
                }
            }
            os << '\n';
        }
        return os.str();
    }
};

std::string num(Int v) { return std::to_string(v); }

std::string dim_str(const std::optional<Int>& dim) { return dim ? num(*dim) : "-"; }

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
    if (!f) throw std::runtime_error("cannot write output file: " + path);
}

// ---------------------------------------------------------------- commands

std::string cmd_enumerate(Int k, Int degree, Int r, Int window, const std::string& format) {
    const std::vector<SplittingType> types = maximal_strata_bruteforce(k, degree, r, window);
    if (format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["k"] = k;
        j["degree"] = degree;
        j["r"] = r;
        j["window"] = window;
        j["types"] = ordered_json::array();
        for (const auto& e : types)
            j["types"].push_back({{"type", parts_json(e)}, {"u", expected_codim(e)}});
        return json_text(j);
    }
    Table t;
    t.rows.push_back({"type", "u"});
    for (const auto& e : types) t.rows.push_back({e.str(), num(expected_codim(e))});
    return t.str();
}

std::string cmd_poset(const BNContext& ctx, Int extra, Int node_cap, const std::string& format) {
    const StratPoset p = build_poset(ctx, extra, node_cap);
    if (format == "dot") return export_dot(p);
    if (format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["nodes"] = ordered_json::array();
        for (std::size_t i = 0; i < p.nodes.size(); ++i) {
            const Int u = p.codims[i];
            std::optional<Int> dim;
            if (u <= ctx.g) dim = ctx.g - u;
            j["nodes"].push_back({{"type", parts_json(p.nodes[i])}, {"u", u}, {"dim", dim_json(dim)}});
        }
        j["covers"] = ordered_json::array();
        for (const auto& [lo, hi] : p.covers)
            j["covers"].push_back({static_cast<Int>(lo), static_cast<Int>(hi)});
        return json_text(j);
    }
    Table nodes;
    nodes.rows.push_back({"node", "type", "u", "dim"});
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        const Int u = p.codims[i];
        std::optional<Int> dim;
        if (u <= ctx.g) dim = ctx.g - u;
        nodes.rows.push_back({num(static_cast<Int>(i)), p.nodes[i].str(), num(u), dim_str(dim)});
    }
    std::ostringstream os;
    os << nodes.str() << "covers:\n";
    for (const auto& [lo, hi] : p.covers) os << "  " << lo << " -> " << hi << '\n';
    return os.str();
}

std::string cmd_wrd(const BNContext& ctx, Int r, const std::string& format) {
    const WrdReport rep = wrd_decomposition(ctx, r);
    if (format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["g"] = ctx.g;
        j["k"] = ctx.k;
        j["d"] = ctx.d;
        j["r"] = r;
        if (rep.whole_picard) j["whole_picard"] = true;
        j["strata"] = ordered_json::array();
        for (const auto& s : rep.strata)
            j["strata"].push_back({{"type", parts_json(s.stratum)},
                                   {"ell", s.ell},
                                   {"u", s.codim},
                                   {"dim", dim_json(s.dim)},
                                   {"maximal", s.maximal}});
        return json_text(j);
    }
    if (rep.whole_picard) {
        std::ostringstream os;
        os << "all of Pic (dim " << ctx.g << ")\n";
        return os.str();
    }
    Table t;
    t.rows.push_back({"ell", "type", "u", "dim", "maximal"});
    for (const auto& s : rep.strata)
        t.rows.push_back({num(s.ell), s.stratum.str(), num(s.codim), dim_str(s.dim),
                          s.maximal ? "yes" : "no"});
    return t.str();
}

std::string cmd_rhok(const BNContext& ctx, Int r, const std::string& format) {
    const Int value = rho_k(ctx, r);
    if (format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["g"] = ctx.g;
        j["k"] = ctx.k;
        j["d"] = ctx.d;
        j["r"] = r;
        j["rho_k"] = value;
        return json_text(j);
    }
    std::ostringstream os;
    os << "rho_k(g=" << ctx.g << ", k=" << ctx.k << ", d=" << ctx.d << ", r=" << r
       << ") = " << value << '\n';
    return os.str();
}

std::string cmd_classes(Int k, Int degree, Int n, Int g, const std::string& format) {
    const ClassResult res = extreme_summand_class(k, degree, n, g);
    if (format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["k"] = k;
        j["degree"] = degree;
        j["n"] = n;
        j["g"] = g;
        j["a"] = rational_json(res.a);
        j["u"] = res.u;
        j["points"] = res.points ? int_or_string(*res.points) : ordered_json(nullptr);
        return json_text(j);
    }
    std::ostringstream os;
    os << res.a.get_str() << " · θ^" << res.u << '\n';
    if (res.points) os << "points = " << res.points->get_str() << '\n';
    return os.str();
}

std::string cmd_degen(Int kmax, const std::string& format, bool& all_pass) {
    const std::vector<LemmaCaseReport> cases = lemma_sweep(kmax);
    all_pass = std::all_of(cases.begin(), cases.end(),
                           [](const LemmaCaseReport& c) { return c.pass; });
    if (format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["kmax"] = kmax;
        j["all_pass"] = all_pass;
        j["cases"] = ordered_json::array();
        for (const auto& c : cases)
            j["cases"].push_back({{"k", c.k},
                                  {"a", c.a},
                                  {"case", c.case_name},
                                  {"wp", c.dim_wp},
                                  {"wq", c.dim_wq},
                                  {"wpq", c.dim_wpq},
                                  {"expected", {c.expected_wp, c.expected_wq, c.expected_wpq}},
                                  {"diag_rank", c.diag_rank},
                                  {"kernel_dim", c.kernel_dim},
                                  {"max_kernel_support", c.max_kernel_support},
                                  {"pass", c.pass}});
        return json_text(j);
    }
    Table t;
    t.rows.push_back({"k", "a", "case", "wp", "wq", "wpq", "diag", "ker", "supp", "result"});
    Int fails = 0;
    for (const auto& c : cases) {
        if (!c.pass) ++fails;
        t.rows.push_back({num(c.k), num(c.a), c.case_name, num(c.dim_wp), num(c.dim_wq),
                          num(c.dim_wpq), num(c.diag_rank), num(c.kernel_dim),
                          num(c.max_kernel_support), c.pass ? "pass" : "FAIL"});
    }
    std::ostringstream os;
    os << t.str();
    if (fails == 0) {
        os << "all " << cases.size() << " configurations pass\n";
    } else {
        os << fails << " of " << cases.size() << " configurations FAIL\n";
    }
    return os.str();
}

// ---------------------------------------------------------------- fixtures

struct Fixture {
    std::string name;
    std::function<bool()> check;
};

SplittingType ty(std::vector<Int> parts) { return make_type(std::move(parts)); }

std::vector<Fixture> fixture_list() {
    std::vector<Fixture> fx;
    const auto add = [&fx](std::string name, std::function<bool()> check) {
        fx.push_back({std::move(name), std::move(check)});
    };

    // splitting types
    add("parts are stored sorted ascending", [] {
        return ty({1, -3, -1}).parts() == std::vector<Int>{-3, -1, 1};
    });
    add("codim of (-4, 0, 0) is 6", [] { return expected_codim(ty({-4, 0, 0})) == 6; });
    add("codim of (-3, -2, 1) is 5", [] { return expected_codim(ty({-3, -2, 1})) == 5; });
    add("codim of (-4, 0, 0, 0, 0) is 12",
        [] { return expected_codim(ty({-4, 0, 0, 0, 0})) == 12; });
    add("balanced(3, -3) is (-1, -1, -1) with codim 0", [] {
        const SplittingType b = balanced(3, -3);
        return b.parts() == std::vector<Int>{-1, -1, -1} && expected_codim(b) == 0;
    });
    add("(-3, -1, 1) specializes to (-2, -2, 1), not conversely", [] {
        return dominance_leq(ty({-3, -1, 1}), ty({-2, -2, 1})) &&
               !dominance_leq(ty({-2, -2, 1}), ty({-3, -1, 1}));
    });
    add("(-2, -2, 1) and (-3, 0, 0) are incomparable", [] {
        return !dominance_leq(ty({-2, -2, 1}), ty({-3, 0, 0})) &&
               !dominance_leq(ty({-3, 0, 0}), ty({-2, -2, 1}));
    });
    add("twisted section count of (-3, 0, 0) at m=1 is 4",
        [] { return h0_twist(ty({-3, 0, 0}), 1) == 4; });
    add("endomorphism sections are rank^2 + codim", [] {
        return h0_end(ty({-3, 0, 0})) == 13 && h0_end(balanced(3, -3)) == 9;
    });
    add("dual of (-2, -2, 1) is (-3, 0, 0) and duality is an involution", [] {
        const SplittingType e = ty({-2, -2, 1});
        return serre_dual(e) == ty({-3, 0, 0}) && serre_dual(serre_dual(e)) == e;
    });
    add("section profile determines the type", [] {
        const SplittingType e = ty({-3, -1, 1});
        return type_from_hilbert(hilbert_profile(e), 3) == e;
    });

    // expected-dimension counts
    add("rho(5, 1, 4) = 1", [] { return rho(5, 1, 4) == 1; });
    add("rho_k is g when r <= d - g", [] { return rho_k(BNContext(5, 3, 9), 4) == 5; });
    add("rho_k(g=5, k=3, d=4, r=1) = 1", [] { return rho_k(BNContext(5, 3, 4), 1) == 1; });
    add("rho_k(g=6, k=3, d=4, r=1) = 1", [] { return rho_k(BNContext(6, 3, 4), 1) == 1; });
    add("candidate stratum (g=6, k=3, d=4, r=1, l=0) is (-4, 0, 0)", [] {
        return w_rl(BNContext(6, 3, 4), 1, 0) == ty({-4, 0, 0});
    });
    add("candidate stratum (g=6, k=3, d=4, r=1, l=1) is (-3, -2, 1)", [] {
        return w_rl(BNContext(6, 3, 4), 1, 1) == ty({-3, -2, 1});
    });
    add("codim ladder for k=5, d'=-4, r=3 is 12, 11, 12, 15", [] {
        const BNContext ctx(10, 5, 10);  // pushforward degree -4
        const Int expect[4] = {12, 11, 12, 15};
        for (Int l = 0; l <= 3; ++l) {
            if (u_wrl_closed_form(ctx, 3, l) != expect[l]) return false;
            if (expected_codim(w_rl(ctx, 3, l)) != expect[l]) return false;
        }
        return wrl_is_maximal(ctx, 3, 0) && wrl_is_maximal(ctx, 3, 1) &&
               wrl_is_maximal(ctx, 3, 2) && !wrl_is_maximal(ctx, 3, 3);
    });
    add("brute force confirms the maximal strata for k=5, d'=-4, r=3", [] {
        const BNContext ctx(10, 5, 10);
        std::vector<SplittingType> expect = {w_rl(ctx, 3, 0), w_rl(ctx, 3, 1), w_rl(ctx, 3, 2)};
        std::sort(expect.begin(), expect.end());
        const auto got =
            maximal_strata_bruteforce(5, -4, 3, maximal_strata_default_window(5, -4, 3));
        return got == expect;
    });
    add("decomposition (g=5, k=3, d=4, r=0): one stratum (-2, -1, 0) of dim 4", [] {
        const WrdReport rep = wrd_decomposition(BNContext(5, 3, 4), 0);
        return !rep.whole_picard && rep.strata.size() == 1 &&
               rep.strata[0].stratum == ty({-2, -1, 0}) && rep.strata[0].dim == 4 &&
               rep.strata[0].maximal;
    });
    add("decomposition (g=5, k=3, d=4, r=1): two strata of dim 1", [] {
        const WrdReport rep = wrd_decomposition(BNContext(5, 3, 4), 1);
        return rep.strata.size() == 2 && rep.strata[0].stratum == ty({-3, 0, 0}) &&
               rep.strata[1].stratum == ty({-2, -2, 1}) && rep.strata[0].dim == 1 &&
               rep.strata[1].dim == 1 && rep.strata[0].maximal && rep.strata[1].maximal;
    });
    add("decomposition (g=6, k=3, d=4, r=1): dims 0 and 1", [] {
        const WrdReport rep = wrd_decomposition(BNContext(6, 3, 4), 1);
        return rep.strata.size() == 2 && rep.strata[0].stratum == ty({-4, 0, 0}) &&
               rep.strata[1].stratum == ty({-3, -2, 1}) && rep.strata[0].dim == 0 &&
               rep.strata[1].dim == 1;
    });
    add("whole-Picard sentinel when r <= d - g", [] {
        const WrdReport rep = wrd_decomposition(BNContext(5, 3, 9), 4);
        return rep.whole_picard && rep.strata.empty();
    });
    add("parallel and serial maximal-strata filters agree", [] {
        const Int w = maximal_strata_default_window(4, -2, 2);
        return maximal_strata_bruteforce(4, -2, 2, w) ==
               maximal_strata_bruteforce_serial(4, -2, 2, w);
    });

    // stratification poset
    add("poset (g=5, k=3, d=4) has 5 nodes and 5 covers", [] {
        const StratPoset p = build_poset(BNContext(5, 3, 4));
        const std::vector<SplittingType> nodes = {ty({-3, -1, 1}), ty({-3, 0, 0}),
                                                  ty({-2, -2, 1}), ty({-2, -1, 0}),
                                                  ty({-1, -1, -1})};
        const std::vector<std::pair<std::size_t, std::size_t>> covers = {
            {0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}};
        return p.nodes == nodes && p.covers == covers &&
               p.codims == std::vector<Int>{5, 4, 4, 1, 0};
    });
    add("closed stratum of (-2, -2, 1) is itself plus (-3, -1, 1)", [] {
        const StratPoset p = build_poset(BNContext(5, 3, 4));
        const auto down = downset(p, ty({-2, -2, 1}));
        return down == std::vector<SplittingType>{ty({-3, -1, 1}), ty({-2, -2, 1})};
    });
    add("expected dimension of (-3, -1, 1) at genus 5 is 0", [] {
        return expected_dimension(BNContext(5, 3, 4), ty({-3, -1, 1})) == std::optional<Int>(0);
    });
    add("a stratum with codim above the genus has no dimension", [] {
        return !expected_dimension(BNContext(4, 3, 3), ty({-3, -1, 1})).has_value();
    });
    add("genus-0 poset is the single balanced node", [] {
        const StratPoset p = build_poset(BNContext(0, 2, 5));
        return p.nodes == std::vector<SplittingType>{ty({2, 2})} && p.covers.empty();
    });
    add("parallel and serial cover kernels agree", [] {
        const StratPoset p = build_poset(BNContext(8, 3, 6));
        return hasse_covers(p.nodes) == hasse_covers_serial(p.nodes);
    });
    add("DOT export draws every node and cover", [] {
        const std::string dot = export_dot(build_poset(BNContext(5, 3, 4)));
        std::size_t labels = 0, edges = 0;
        for (std::size_t pos = dot.find("label="); pos != std::string::npos;
             pos = dot.find("label=", pos + 1))
            ++labels;
        for (std::size_t pos = dot.find("->"); pos != std::string::npos;
             pos = dot.find("->", pos + 1))
            ++edges;
        return dot.rfind("digraph", 0) == 0 && labels == 5 && edges == 5;
    });

    // theta classes
    add("exponential series truncates as 1 - t + t^2/2 - t^3/6", [] {
        const ThetaPoly e = exp_series(-1, 3);
        return e.coeffs == std::vector<mpq_class>{1, -1, mpq_class(1, 2), mpq_class(-1, 6)};
    });
    add("series division inverts multiplication", [] {
        const ThetaPoly e = exp_series(1, 9);
        return div(mul(e, e), e).coeffs == e.coeffs;
    });
    add("class of the (-3, 0, 0) stratum is theta^4/24", [] {
        const ClassResult r = extreme_summand_class(3, -3, 3, 5);
        return r.a == mpq_class(1, 24) && r.u == 4 && !r.points.has_value();
    });
    add("class of the (-2, -1, 0) stratum is theta", [] {
        const ClassResult r = extreme_summand_class(3, -3, 2, 5);
        return r.a == 1 && r.u == 1;
    });
    add("class via duality: (-2, -2, 1) gives theta^4/24", [] {
        const ClassResult r = dual_class(ty({-2, -2, 1}), 5);
        return r.a == mpq_class(1, 24) && r.u == 4;
    });
    add("class coefficient is 1/u! in general", [] {
        const ClassResult r = extreme_summand_class(4, -6, 6, 9);
        mpz_class fac;
        mpz_fac_ui(fac.get_mpz_t(), 15);
        return r.u == 15 && r.a == mpq_class(1) / mpq_class(fac);
    });
    add("the two quartic stratum classes sum to theta^4/12", [] { return kkl_check(5); });
    add("a stored zero-dimensional stratum has 2 points", [] {
        return point_count(mpq_class(1, 60), 5, 5) == 2;
    });

    // degenerations
    add("elliptic push-forward of a pullback twist (k=3, d=0) is (-2, -1, 0)", [] {
        return elliptic_pushforward(3, 0, true) == ty({-2, -1, 0});
    });
    add("elliptic push-forward (k=3, d=1) is (-1, -1, 0)", [] {
        return elliptic_pushforward(3, 1, false) == ty({-1, -1, 0});
    });
    add("order preservation at one point cuts dim k(k+1)/2", [] {
        const EndoModel m(3, 1);
        return nullity(order_preserving_space(m, RamPoint::p)) == 6 &&
               nullity(order_preserving_space(m, RamPoint::q)) == 6;
    });
    add("two-point intersection has dim k in general position", [] {
        for (Int a = 0; a < 3; ++a) {
            const EndoModel m(3, a);
            if (nullity(stacked(order_preserving_space(m, RamPoint::p),
                                order_preserving_space(m, RamPoint::q))) != 3)
                return false;
        }
        return true;
    });
    add("special position adds one intersection dimension", [] {
        const EndoModel m(3, 1, 2, 2);
        return nullity(stacked(order_preserving_space(m, RamPoint::p),
                               order_preserving_space(m, RamPoint::q))) == 4;
    });
    add("diagonal extraction: full rank, scalar kernel entries", [] {
        const DiagAnalysis gen = diag_map_analysis(EndoModel(3, 1));
        const DiagAnalysis spc = diag_map_analysis(EndoModel(3, 1, 2, 2));
        return gen.rank == 3 && gen.kernel_dim == 0 && spc.rank == 3 && spc.kernel_dim == 1 &&
               spc.max_kernel_entry_support == 1;
    });
    add("graded diagonals glue index-reversed across a node", [] {
        const EndoModel m(3, 1);
        std::vector<mpq_class> id(static_cast<std::size_t>(m.variable_count()), 0);
        std::vector<mpq_class> twice = id;
        for (Int j = 0; j < 3; ++j) {
            id[static_cast<std::size_t>(m.c_index(j, j))] = 1;
            twice[static_cast<std::size_t>(m.c_index(j, j))] = 2;
        }
        return node_compatibility(m, id, m, id) && !node_compatibility(m, id, m, twice);
    });
    add("non-order-preserving input is rejected", [] {
        const EndoModel m(3, 1);
        std::vector<mpq_class> phi(static_cast<std::size_t>(m.variable_count()), 0);
        phi[static_cast<std::size_t>(m.beta_index(0, 1))] = 1;
        if (satisfies(order_preserving_space(m, RamPoint::q), phi)) return false;
        try {
            node_diagonal(m, phi, RamPoint::q);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what()) == "compatibility undefined";
        }
        return false;
    });
    add("chain bound: generic genus-5 chain at k=3 is 9",
        [] { return chain_bound(5, 3, {0, 0, 0, 0, 0}) == 9; });
    add("chain bound: each special component adds one",
        [] { return chain_bound(5, 3, {1, 0, 1, 0, 0}) == 11; });
    add("chain bound: genus 1 is the full endomorphism algebra",
        [] { return chain_bound(1, 4, {0}) == 16; });
    add("nullity sweep k <= 5: every configuration passes", [] {
        const auto cases = lemma_sweep(5);
        return std::all_of(cases.begin(), cases.end(),
                           [](const LemmaCaseReport& c) { return c.pass; });
    });

    // command-level output shapes
    add("bn-wrd table (g=6, k=3, d=4, r=1) prints two strata rows", [] {
        std::ostringstream out, err;
        const int code = run({"bn-wrd", "--g", "6", "--k", "3", "--d", "4", "--r", "1",
                              "--format", "table"},
                             out, err);
        const std::string text = out.str();
        const auto lines = static_cast<Int>(std::count(text.begin(), text.end(), '\n'));
        return code == 0 && lines == 3 && text.find("(-4, 0, 0)") != std::string::npos &&
               text.find("(-3, -2, 1)") != std::string::npos;
    });
    add("strata-poset dot (g=5, k=3, d=4) draws 5 nodes and 5 edges", [] {
        std::ostringstream out, err;
        const int code =
            run({"strata-poset", "--g", "5", "--k", "3", "--d", "4", "--format", "dot"}, out, err);
        const std::string dot = out.str();
        std::size_t labels = 0, edges = 0;
        for (std::size_t pos = dot.find("label="); pos != std::string::npos;
             pos = dot.find("label=", pos + 1))
            ++labels;
        for (std::size_t pos = dot.find("->"); pos != std::string::npos;
             pos = dot.find("->", pos + 1))
            ++edges;
        return code == 0 && labels == 5 && edges == 5;
    });
    return fx;
}

int run_fixtures(std::ostream& out) {
    const std::vector<Fixture> fx = fixture_list();
    Int passed = 0;
    for (const auto& f : fx) {
        bool ok = false;
        try {
            ok = f.check();
        } catch (const std::exception&) {
            ok = false;
        }
        if (ok) ++passed;
        out << (ok ? "PASS  " : "FAIL  ") << f.name << '\n';
    }
    out << passed << " of " << fx.size() << " fixtures pass\n";
    return passed == static_cast<Int>(fx.size()) ? 0 : 1;
}

Int env_node_cap(Int flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    const char* env = std::getenv("SPLITLOCI_NODE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultNodeCap;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || v < 1 || v > kNodeCapMax)
        throw std::runtime_error(std::string("invalid SPLITLOCI_NODE_CAP: ") + env);
    return static_cast<Int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"splitting-type loci of push-forward bundles on the projective line",
                 "splitloci"};
    app.require_subcommand(1);
    const auto value_range = CLI::Range(-kValueCap, kValueCap);
    const auto size_range = CLI::Range(std::int64_t{0}, kValueCap);

    Int g = 0, k = 0, d = 0, r = 0, n = 0, degree = 0;
    Int window = 0, extra = 0, node_cap = 0, kmax = 8;
    std::string fmt_enumerate{"table"}, fmt_poset{"table"}, fmt_wrd{"table"},
        fmt_rhok{"table"}, fmt_classes{"table"}, fmt_degen{"table"};
    std::string out_enumerate, out_poset, out_wrd, out_rhok, out_classes, out_degen;

    CLI::App* enumerate = app.add_subcommand(
        "strata-enumerate", "dominance-maximal splitting types with at least r+1 sections");
    enumerate->add_option("--k", k, "rank of the bundle")->required()->check(value_range);
    enumerate->add_option("--degree", degree, "total degree of the bundle")
        ->required()
        ->check(value_range);
    enumerate->add_option("--r", r, "at least r+1 sections")->required()->check(value_range);
    enumerate->add_option("--window", window, "search |part| bound (default: safe bound)")
        ->check(size_range);
    enumerate->add_option("--format", fmt_enumerate, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    enumerate->add_option("--out", out_enumerate, "write output to a file");

    CLI::App* poset = app.add_subcommand("strata-poset",
                                         "stratification poset of one Picard universe");
    poset->add_option("--g", g, "genus")->required()->check(value_range);
    poset->add_option("--k", k, "cover degree")->required()->check(value_range);
    poset->add_option("--d", d, "line-bundle degree")->required()->check(value_range);
    poset->add_option("--include-empty", extra, "also keep strata with codim <= g + N")
        ->check(size_range);
    poset->add_option("--node-cap", node_cap, "abort beyond this many nodes")
        ->check(CLI::Range(std::int64_t{1}, kNodeCapMax));
    poset->add_option("--format", fmt_poset, "json, table or dot")
        ->check(CLI::IsMember({"json", "table", "dot"}));
    poset->add_option("--out", out_poset, "write output to a file");

    CLI::App* wrd = app.add_subcommand(
        "bn-wrd", "splitting-type decomposition of a locus of bundles with many sections");
    wrd->add_option("--g", g, "genus")->required()->check(value_range);
    wrd->add_option("--k", k, "cover degree")->required()->check(value_range);
    wrd->add_option("--d", d, "line-bundle degree")->required()->check(value_range);
    wrd->add_option("--r", r, "at least r+1 sections")->required()->check(value_range);
    wrd->add_option("--format", fmt_wrd, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    wrd->add_option("--out", out_wrd, "write output to a file");

    CLI::App* rhok = app.add_subcommand("bn-rhok",
                                        "expected dimension of the locus, corrected for the cover");
    rhok->add_option("--g", g, "genus")->required()->check(value_range);
    rhok->add_option("--k", k, "cover degree")->required()->check(value_range);
    rhok->add_option("--d", d, "line-bundle degree")->required()->check(value_range);
    rhok->add_option("--r", r, "at least r+1 sections")->required()->check(value_range);
    rhok->add_option("--format", fmt_rhok, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    rhok->add_option("--out", out_rhok, "write output to a file");

    CLI::App* classes = app.add_subcommand(
        "classes", "theta-polynomial class of an extreme-summand stratum");
    classes->add_option("--k", k, "rank of the bundle")->required()->check(value_range);
    classes->add_option("--degree", degree, "total degree of the bundle")
        ->required()
        ->check(value_range);
    classes->add_option("--n", n, "twist of the extreme summand (part -n)")
        ->required()
        ->check(value_range);
    classes->add_option("--g", g, "ambient genus")->required()->check(value_range);
    classes->add_option("--format", fmt_classes, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    classes->add_option("--out", out_classes, "write output to a file");

    CLI::App* degen = app.add_subcommand(
        "degen-verify", "verify the nullity case table of the two-point endomorphism model");
    degen->add_option("--kmax", kmax, "sweep cover degrees 2..kmax")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{12}));
    degen->add_option("--format", fmt_degen, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    degen->add_option("--out", out_degen, "write output to a file");

    CLI::App* fixtures =
        app.add_subcommand("fixtures", "re-check every stored worked example");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) {
            if (enumerate->count("--window") == 0)
                window = maximal_strata_default_window(k, degree, r);
            write_output(cmd_enumerate(k, degree, r, window, fmt_enumerate), out_enumerate, out);
            return 0;
        }
        if (poset->parsed()) {
            const Int cap = env_node_cap(node_cap, poset->count("--node-cap") > 0);
            write_output(cmd_poset(BNContext(g, k, d), extra, cap, fmt_poset), out_poset, out);
            return 0;
        }
        if (wrd->parsed()) {
            write_output(cmd_wrd(BNContext(g, k, d), r, fmt_wrd), out_wrd, out);
            return 0;
        }
        if (rhok->parsed()) {
            write_output(cmd_rhok(BNContext(g, k, d), r, fmt_rhok), out_rhok, out);
            return 0;
        }
        if (classes->parsed()) {
            write_output(cmd_classes(k, degree, n, g, fmt_classes), out_classes, out);
            return 0;
        }
        if (degen->parsed()) {
            bool all_pass = false;
            write_output(cmd_degen(kmax, fmt_degen, all_pass), out_degen, out);
            return all_pass ? 0 : 1;
        }
        if (fixtures->parsed()) return run_fixtures(out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace splitloci::cli

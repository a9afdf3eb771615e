// Benchmark of the two parallel kernels against their serial references:
// Hasse-cover extraction on a large stratification poset and the
// dominance-maximality filter of the brute-force stratum search. Outputs are
// compared for equality before timings are reported.

#include <chrono>
#include <cstdint>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "splitloci/brill_noether.hpp"
#include "splitloci/strat_poset.hpp"

using namespace splitloci;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads = " << omp_get_max_threads() << "\n";
#else
    std::cout << "OpenMP disabled, serial build\n";
#endif

    {
        const BNContext ctx(90, 5, 40);  // ~2100 nodes
        const StratPoset p = build_poset(ctx, 0, 1000000);
        std::cout << "hasse covers: " << p.nodes.size() << " nodes\n";
        std::vector<std::pair<std::size_t, std::size_t>> par, ser;
        const double t_par = time_ms([&] { par = hasse_covers(p.nodes); });
        const double t_ser = time_ms([&] { ser = hasse_covers_serial(p.nodes); });
        if (par != ser) {
            std::cout << "MISMATCH between parallel and serial covers\n";
            return 1;
        }
        std::cout << "  parallel " << t_par << " ms, serial " << t_ser << " ms, " << par.size()
                  << " covers\n";
    }

    {
        const Int rank = 6, degree = -5, r = 6;
        const Int window = maximal_strata_default_window(rank, degree, r);
        std::cout << "maximal strata: rank " << rank << ", degree " << degree << ", r " << r
                  << ", window " << window << "\n";
        std::vector<SplittingType> par, ser;
        const double t_par =
            time_ms([&] { par = maximal_strata_bruteforce(rank, degree, r, window); });
        const double t_ser =
            time_ms([&] { ser = maximal_strata_bruteforce_serial(rank, degree, r, window); });
        if (par != ser) {
            std::cout << "MISMATCH between parallel and serial maximal strata\n";
            return 1;
        }
        std::cout << "  parallel " << t_par << " ms, serial " << t_ser << " ms, " << par.size()
                  << " maximal types\n";
    }

    std::cout << "parallel and serial kernels agree\n";
    return 0;
}

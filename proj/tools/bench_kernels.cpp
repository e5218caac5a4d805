// Times the OpenMP element-scan kernels against their serial references on
// enumerated groups of increasing size. Run with OMP_NUM_THREADS to vary the
// thread count.

#include "skewfact/constructors.hpp"
#include "skewfact/group.hpp"
#include "skewfact/kernels.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace skewfact;

namespace {

using clk = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    auto t0 = clk::now();
    f();
    auto t1 = clk::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_group(const char* spec) {
    GroupHandle g = make_group(spec);
    auto els = enumerate_elements(g);
    std::printf("%-18s |G| = %-8zu degree %u\n", spec, els.size(), g.degree());

    auto run = [&](const char* name, auto&& serial, auto&& parallel) {
        double ts = time_ms(serial);
        double tp = time_ms(parallel);
        std::printf("  %-24s serial %8.2f ms   parallel %8.2f ms   x%.2f\n", name, ts,
                    tp, tp > 0 ? ts / tp : 0.0);
    };

    run("order histogram",
        [&] { (void)kernels::order_histogram_serial(els); },
        [&] { (void)kernels::order_histogram(els); });
    run("find order 13",
        [&] { (void)kernels::find_order_serial(els, 13); },
        [&] { (void)kernels::find_order(els, 13); });

    std::vector<Perm> invs;
    run("involutions",
        [&] { (void)kernels::involution_indices_serial(els); },
        [&] {
            auto idx = kernels::involution_indices(els);
            invs.clear();
            for (uint32_t i : idx) invs.push_back(els[i]);
        });
    if (!invs.empty()) {
        run("pair order scan (miss)",
            [&] { (void)kernels::pair_product_order_serial(invs[0], invs, 97); },
            [&] { (void)kernels::pair_product_order(invs[0], invs, 97); });
    }
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif
    bench_group("S:8");
    bench_group("M12");
    bench_group("M12.2");
    return 0;
}

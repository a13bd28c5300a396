// Serial reference kernels vs the OpenMP ones on the full Han product.
// usage: bench_series [order] [ell] [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "hooklens/hook_series.hpp"
#include "hooklens/parallel.hpp"

using namespace hooklens;

namespace {

template <typename F>
double seconds(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv)
{
    const int order = argc > 1 ? std::atoi(argv[1]) : 1500;
    const int ell = argc > 2 ? std::atoi(argv[2]) : 2;
    const int threads = argc > 3 ? std::atoi(argv[3]) : default_threads();

    HookSeries a;
    HookSeries b;
    const double ts = seconds([&] { a = han_series_serial(ell, order); });
    SeriesOptions opts;
    opts.threads = threads;
    const double tp = seconds([&] { b = han_series(ell, order, opts); });

    std::printf("ell=%d order=%d threads=%d\n", ell, order, threads);
    std::printf("serial  %.3f s\n", ts);
    std::printf("openmp  %.3f s  (x%.2f)\n", tp, ts / tp);
    std::printf("tables %s\n", a == b ? "identical" : "DIFFER");
    return a == b ? 0 : 1;
}

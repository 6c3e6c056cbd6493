// Serial vs OpenMP timings for the enumeration kernels.
//
//   bench_counting [n_max] [repeats]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "treelattice/counter.hpp"
#include "treelattice/fixtures.hpp"

namespace tl = treelattice;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int n_max = argc > 1 ? std::atoi(argv[1]) : 19;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    const tl::RegularGraph g = tl::fixtures::k4();
    const tl::SpanningTree st = tl::SpanningTree::bfs(g);
    tl::ClassDescriptor k = tl::enumerate_classes(g, 3).back();
    const tl::TreePath x{st.path_from_base(g, k.start(g))};

    std::printf("threads=%d graph=K4 n_max=%d ball=%llu\n", omp_get_max_threads(), n_max,
                static_cast<unsigned long long>(tl::ball_size(g.q(), n_max)));

    tl::CountTable serial, parallel;
    const double ts = best_of(repeats, [&] { serial = tl::count_class(g, st, k, x, n_max, {tl::default_budget, tl::Execution::serial}); });
    const double tp = best_of(repeats, [&] { parallel = tl::count_class(g, st, k, x, n_max, {tl::default_budget, tl::Execution::parallel}); });
    std::printf("count_class   serial %.3fs  parallel %.3fs  speedup %.2f  identical=%s\n", ts, tp, ts / tp,
                serial.rows.size() == parallel.rows.size() &&
                        std::equal(serial.rows.begin(), serial.rows.end(), parallel.rows.begin(),
                                   [](const tl::CountRow& a, const tl::CountRow& b) { return a.count == b.count; })
                    ? "yes"
                    : "no");

    std::vector<std::uint64_t> s1, s2;
    const double ss = best_of(repeats, [&] { s1 = tl::sphere_sizes(g, 0, n_max, tl::Execution::serial); });
    const double sp = best_of(repeats, [&] { s2 = tl::sphere_sizes(g, 0, n_max, tl::Execution::parallel); });
    std::printf("sphere_sizes  serial %.3fs  parallel %.3fs  speedup %.2f  identical=%s\n", ss, sp, ss / sp,
                s1 == s2 ? "yes" : "no");
    return 0;
}

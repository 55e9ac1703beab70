#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "dedekind/cluster.hpp"
#include "dedekind/oracle.hpp"

using namespace dedekind;

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool report(const char* kernel, double serial, double parallel, bool same) {
    std::printf("%-28s serial %9.4f s  openmp %9.4f s  speedup %5.2fx  %s\n", kernel, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
    return same;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serial against OpenMP kernels"};
    bool quick = false;
    int j = 4, n = 6;
    app.add_flag("--quick", quick, "Small sizes for a smoke run");
    app.add_option("--j", j, "Cluster size for the class enumeration")->check(CLI::Range(1, 5));
    app.add_option("--n", n, "Dimension for antichain enumeration")->check(CLI::Range(1, 6));
    CLI11_PARSE(app, argc, argv);
    if (quick) j = 3, n = 5;

    std::printf("threads available: %d\n", omp_get_max_threads());
    bool ok = true;

    nlohmann::json a, b;
    EngineOptions serial_engine;
    serial_engine.parallel = false;
    double ts = seconds([&] {
        clear_cluster_cache();
        a = dump_classes(j, serial_engine);
    });
    double tp = seconds([&] {
        clear_cluster_cache();
        b = dump_classes(j);
    });
    char label[64];
    std::snprintf(label, sizeof label, "cluster classes j=%d", j);
    ok &= report(label, ts, tp, a == b);

    SizeProfile ps, pp;
    EnumOptions serial_enum, parallel_enum;
    parallel_enum.parallel = true;
    ts = seconds([&] { ps = antichain_profile(n, std::nullopt, std::nullopt, serial_enum); });
    tp = seconds([&] { pp = antichain_profile(n, std::nullopt, std::nullopt, parallel_enum); });
    std::snprintf(label, sizeof label, "antichain profile n=%d", n);
    ok &= report(label, ts, tp, ps.counts == pp.counts);

    return ok ? 0 : 1;
}

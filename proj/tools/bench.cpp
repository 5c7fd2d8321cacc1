// Times the parallel kernels against their serial reference
// implementations and cross-checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zsindex/dedekind.hpp"
#include "zsindex/parallel.hpp"
#include "zsindex/report.hpp"
#include "zsindex/verify.hpp"

namespace {

using namespace zsindex;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* task, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", task, serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0,
                identical ? "outputs identical" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel comparison"};
    long long collision_k = 20000;
    long long modulus = 307;
    long long range_min = 5, range_max = 150;
    int threads = 0;
    app.add_option("--k", collision_k, "modulus for the collision-table kernel");
    app.add_option("--n", modulus, "modulus for the single-modulus verifier kernel");
    app.add_option("--min", range_min, "range start for the range verifier");
    app.add_option("--max", range_max, "range end for the range verifier");
    app.add_option("--threads", threads, "thread count (default: all cores)");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", resolve_threads(threads));
    std::printf("%-28s %11s %11s %9s\n", "task", "serial", "parallel", "speedup");

    {
        auto t0 = std::chrono::steady_clock::now();
        CollisionTable ser = collision_classes_serial(collision_k, SumKind::S);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        CollisionTable par = collision_classes(collision_k, SumKind::S, threads);
        double tp = seconds_since(t0);
        row(("collisions s, k=" + std::to_string(collision_k)).c_str(), ts, tp,
            collision_csv(ser) == collision_csv(par));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        VerifyReport ser = verify_modulus_serial(modulus);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        VerifyReport par = verify_modulus(modulus, threads);
        double tp = seconds_since(t0);
        row(("verify n=" + std::to_string(modulus)).c_str(), ts, tp,
            to_jsonl(ser) == to_jsonl(par));
    }

    {
        std::string ser_out, par_out;
        auto t0 = std::chrono::steady_clock::now();
        verify_range(range_min, range_max, true, 1,
                     [&](const VerifyReport& r) { ser_out += to_jsonl(r) + "\n"; });
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        verify_range(range_min, range_max, true, threads,
                     [&](const VerifyReport& r) { par_out += to_jsonl(r) + "\n"; });
        double tp = seconds_since(t0);
        row(("verify range [" + std::to_string(range_min) + "," + std::to_string(range_max) + "]")
                .c_str(),
            ts, tp, ser_out == par_out);
    }

    return 0;
}

// Compares the serial and OpenMP-parallel paths of the axiom verifiers.
#include <chrono>
#include <cstdio>
#include <string>

#include "symring/birig.hpp"
#include "symring/plethysm.hpp"

using namespace symring;

namespace {

template <class F>
double time_seconds(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

void bench(const char* name, VerifyReport (*suite)(int, bool), int max_degree) {
    // warm the shared character/transition caches so neither path pays for them
    suite(std::min(max_degree, 2), false);
    bool ok = true;
    double serial = time_seconds([&] { ok &= suite(max_degree, false).all_pass(); });
    double parallel = time_seconds([&] { ok &= suite(max_degree, true).all_pass(); });
    std::printf("%-10s max_degree %d   serial %7.3fs   parallel %7.3fs   speedup %.2fx   %s\n",
                name, max_degree, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, ok ? "ok" : "FAILED");
}

}  // namespace

int main(int argc, char** argv) {
    int birig_deg = 8, plethory_deg = 3;
    if (argc > 1) birig_deg = std::atoi(argv[1]);
    if (argc > 2) plethory_deg = std::atoi(argv[2]);
    bench("birig", verify_birig_axioms, birig_deg);
    bench("plethory", verify_plethory, plethory_deg);
    return 0;
}

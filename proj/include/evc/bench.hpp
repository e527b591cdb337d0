#ifndef EVC_BENCH_HPP
#define EVC_BENCH_HPP

#include <chrono>
#include <vector>

#include "evc/engine.hpp"
#include "evc/generators.hpp"

namespace evc {

struct BenchRow {
    long long n = 0;
    long long evc = 0;
    double seconds = 0.0;
    double ratio = 0.0; // vs previous row; 0 for the first
};

// Times compute_evc (decomposition + fold) on random cacti, one row per
// size. Generation is excluded from the timed region.
inline std::vector<BenchRow> run_benchmark(const std::vector<long long>& sizes, uint64_t seed,
                                           double cycle_fraction = 0.3) {
    std::vector<BenchRow> rows;
    double prev = 0.0;
    SplitMix64 seeder(seed);
    for (long long n : sizes) {
        Graph g = random_cactus(static_cast<int>(n), cycle_fraction, seeder.next());
        auto t0 = std::chrono::steady_clock::now();
        EvcResult res = compute_evc(g);
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        BenchRow row{n, res.evc, dt, prev > 0.0 ? dt / prev : 0.0};
        rows.push_back(row);
        prev = dt;
    }
    return rows;
}

} // namespace evc

#endif // EVC_BENCH_HPP

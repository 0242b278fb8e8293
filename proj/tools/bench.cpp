// Timing comparison of the OpenMP kernels against their serial references:
// F_q matrix products, brute-force oracle enumeration, channel simulation.

#include "rankcode/oracle.hpp"
#include "rankcode/rng.hpp"
#include "rankcode/simulate.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace rankcode;

namespace {

double time_of(const std::function<void()>& fn, int reps) {
    fn();  // warm up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

MatQ random_mat(unsigned q, std::size_t rows, std::size_t cols, Rng& rng) {
    MatQ x(q, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) x.at(i, j) = Sym(rng.below(q));
    return x;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %10.6fs   openmp %10.6fs   speedup %.2fx\n", name, serial, parallel,
                serial / parallel);
}

}  // namespace

int main() {
    std::printf("threads=%d\n", omp_get_max_threads());
    Rng rng(1234);

    {
        const std::size_t n = 384;
        MatQ a = random_mat(5, n, n, rng), b = random_mat(5, n, n, rng);
        volatile Sym sink = 0;
        double ts = time_of([&] { sink = mul_serial(a, b).at(0, 0); }, 3);
        double tp = time_of([&] { sink = mul(a, b).at(0, 0); }, 3);
        (void)sink;
        report("matmul 384x384 (F_5)", ts, tp);
    }

    {
        GabidulinCode code = GabidulinCode::make(Field::make(2, 8), 8, 2);  // 2^16 codewords
        Rng lr(7);
        std::vector<Ext> u(code.k(), code.field().zero());
        for (auto& e : u)
            for (unsigned j = 0; j < 8; ++j) e.c[j] = Sym(lr.below(2));
        auto x = code.encode(u);
        ReceivedTuple t{x, MatQ(2, 8, 0), {}};
        t.r[0] = code.field().add(t.r[0], code.field().one());
        double ts = time_of([&] { brute_generalized_decode_serial(code, t); }, 2);
        double tp = time_of([&] { brute_generalized_decode(code, t); }, 2);
        report("oracle 65536 codewords", ts, tp);
    }

    {
        GabidulinCode code = GabidulinCode::make(Field::make(2, 8), 8, 4);  // d = 5
        SimConfig cfg;
        cfg.chan.n = 8;
        cfg.chan.m = 8;
        cfg.chan.N = 8;
        cfg.chan.rho_max = 1;
        cfg.chan.t_max = 1;
        cfg.chan.seed = 3;
        cfg.trials = 400;
        double ts = time_of([&] { run_simulation_serial(code, cfg); }, 2);
        double tp = time_of([&] { run_simulation(code, cfg); }, 2);
        report("simulate 400 trials", ts, tp);
    }
    return 0;
}

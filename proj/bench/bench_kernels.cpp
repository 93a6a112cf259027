// SPDX-License-Identifier: Apache-2.0
//
// mmbeam - location-aided compressive beam alignment for mmWave links
// Copyright (C) 2026 The mmbeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
// Serial reference vs OpenMP forms of the hot kernels, plus dense vs Kronecker-factored OMP.

#include "mmbeam/harness.hpp"
#include "mmbeam/kernels.hpp"
#include "mmbeam/strategies.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

using namespace mmbeam;

namespace
{
    // Best of `reps` wall-clock timings, in milliseconds.
    double time_ms(int reps, const std::function<void()> &fn)
    {
        double best = 1e300;
        for (int r = 0; r < reps; ++r)
        {
            const auto t0 = std::chrono::steady_clock::now();
            fn();
            best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
        }
        return best;
    }

    void row(const char *name, double serial_ms, double parallel_ms, bool same)
    {
        std::printf("%-28s %12.3f %12.3f %9.2fx  %s\n", name, serial_ms, parallel_ms, serial_ms / parallel_ms,
                    same ? "identical" : "MISMATCH");
    }

    cmat gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng)
    {
        cmat m(rows, cols);
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m.data()[i] = complex_gaussian(rng, 1.0);
        return m;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"mmbeam kernel benchmark"};
    int trials = 200, reps = 3, threads = 0;
    app.add_option("--trials", trials, "Monte-Carlo trials for the end-to-end row")->check(CLI::PositiveNumber);
    app.add_option("--reps", reps, "Repetitions per measurement, best is reported")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "OpenMP threads, 0 = default");
    CLI11_PARSE(app, argc, argv);
    if (threads > 0)
        omp_set_num_threads(threads);

    std::printf("threads: %d (processors: %d)\n", omp_get_max_threads(), omp_get_num_procs());
    std::printf("%-28s %12s %12s %10s\n", "kernel", "serial ms", "parallel ms", "speedup");

    Rng rng(1);
    {
        const cmat phi = gaussian_matrix(2500, 5184, rng); // 50 x 50 probes on a 72-point grid
        const cvec r = gaussian_matrix(2500, 1, rng);
        cvec s, p;
        const double ts = time_ms(reps, [&] { s = kernels::correlate_serial(phi, r); });
        const double tp = time_ms(reps, [&] { p = kernels::correlate_parallel(phi, r); });
        row("correlate 2500 x 5184", ts, tp, s == p);
    }
    {
        const SimConfig cfg;
        const Scenario sc = make_scenario(cfg);
        const cmat h = build_channel(sample_paths(rng, 4, 6.0), sc.bs, sc.ms);
        kernels::BeamPair s, p;
        const auto &w = sc.tx_codebook.weights;
        const double ts = time_ms(reps * 10, [&] { s = kernels::best_pair_serial(h, w, w); });
        const double tp = time_ms(reps * 10, [&] { p = kernels::best_pair_parallel(h, w, w); });
        row("exhaustive scan 72 x 72", ts, tp, s.tx == p.tx && s.rx == p.rx && s.power == p.power);
    }
    {
        SimConfig cfg;
        cfg.trials = trials;
        std::vector<TrialRecord> s, p;
        const double ts = time_ms(reps, [&] { s = run_monte_carlo_serial(cfg); });
        const double tp = time_ms(reps, [&] { p = run_monte_carlo(cfg, threads); });
        char name[64];
        std::snprintf(name, sizeof(name), "monte carlo %d trials", trials);
        row(name, ts, tp, s == p);
    }

    std::printf("\n%-28s %12s %12s %10s\n", "OMP, L = 4", "dense ms", "kron ms", "speedup");
    {
        const Dictionary d = build_dictionary(quantized_grid(73), {8, 0.5}, {8, 0.5});
        const auto tx = random_measurement_beams(50, d.bs, rng), rx = random_measurement_beams(50, d.ms, rng);
        const cmat h = build_channel(sample_paths(rng, 4, 6.0), d.bs, d.ms);
        const cvec y = simulate_measurements(h, tx, rx, 1.0, 0.1, rng);
        SparseEstimate a, b;
        cmat phi;
        const double tb = time_ms(reps, [&] { phi = build_sensing_matrix(tx, rx, d, 1.0); });
        const double td = time_ms(reps, [&] { a = omp(phi, y, 4, 1e-3); });
        const KroneckerSensing k = build_kronecker_sensing(tx, rx, d, 1.0);
        const double tk = time_ms(reps, [&] { b = omp(k, y, 4, 1e-3); });
        row("50 x 50 probes, grid 73", tb + td, tk, a.support == b.support);
        std::printf("  (dense column includes %.3f ms to form the 2500 x 5329 sensing matrix)\n", tb);
    }
    return 0;
}

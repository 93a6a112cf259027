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
// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

#include "mmbeam/harness.hpp"
#include "mmbeam/report.hpp"
#include "mmbeam/strategies.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mmbeam;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    int failures = 0;

    void criterion(const char *name, double budget_s, const std::function<Outcome()> &body)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out = body();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < budget_s;
        const bool pass = out.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s  %-34s %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", name, out.detail.c_str(), secs,
                    budget_s, in_time ? "" : " over budget");
        std::fflush(stdout);
    }

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof(buf), f, args...);
        return buf;
    }

    cmat gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng)
    {
        cmat m(rows, cols);
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m.data()[i] = complex_gaussian(rng, 1.0);
        return m;
    }

    struct OnGrid
    {
        cmat channel;
        cvec z;
    };

    OnGrid on_grid_channel(const Dictionary &d, int paths, Rng &rng)
    {
        PathSet s;
        cvec z = cvec::Zero(d.matrix.cols());
        std::set<int> used;
        while (static_cast<int>(used.size()) < paths)
        {
            const int u = static_cast<int>(rng() % d.grid.size()), v = static_cast<int>(rng() % d.grid.size());
            if (!used.insert(d.column_index(u, v)).second)
                continue;
            const cd mu = complex_gaussian(rng, 1.0);
            s.paths.push_back({mu, d.grid.angle(u), d.grid.angle(v), s.paths.empty()});
            z(d.column_index(u, v)) = mu;
        }
        s.path_loss = uniform(rng, 0.5, 2.0);
        return {build_channel(s, d.bs, d.ms), z / s.path_loss};
    }

    Outcome vectorization_identity()
    {
        Rng rng(101);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t)
        {
            const int n = t % 2 ? 4 : 3;
            const cmat h = gaussian_matrix(n, n, rng);
            const MeasurementBeams tx{gaussian_matrix(n, n, rng), std::nullopt};
            const MeasurementBeams rx{gaussian_matrix(n, n, rng), std::nullopt};
            const cvec lhs = simulate_measurements(h, tx, rx, 1.0, 0.0, rng);
            const cvec rhs = oracle::kron(tx.weights.transpose(), rx.weights.adjoint()) * oracle::vec(h);
            worst = std::max(worst, (lhs - rhs).norm() / oracle::vec(h).norm());
        }
        return {worst <= 1e-10, fmt("worst relative error %.2e (limit 1e-10), 100 cases", worst)};
    }

    Outcome sparse_model_consistency()
    {
        Rng rng(102);
        const Dictionary d = build_dictionary(quantized_grid(72), {8, 0.5}, {8, 0.5});
        double worst = 0.0;
        for (int t = 0; t < 100; ++t)
        {
            const OnGrid ch = on_grid_channel(d, 1 + t % 4, rng);
            const bool localized = t % 2 == 0;
            MeasurementBeams tx, rx;
            if (localized)
            {
                const int lo = static_cast<int>(rng() % 72);
                tx = build_sector_beams({lo, (lo + 12) % 72, 72}, 4, d.grid, d.bs);
                rx = build_sector_beams({(lo + 30) % 72, (lo + 40) % 72, 72}, 3, d.grid, d.ms);
            }
            else
            {
                tx = random_measurement_beams(1 + static_cast<int>(rng() % 8), d.bs, rng);
                rx = random_measurement_beams(1 + static_cast<int>(rng() % 8), d.ms, rng);
            }
            const double p = uniform(rng, 0.5, 2.0);
            const cvec y = simulate_measurements(ch.channel, tx, rx, p, 0.0, rng);
            const cvec model = build_sensing_matrix(tx, rx, d, p) * ch.z;
            const cvec factored = build_kronecker_sensing(tx, rx, d, p).dense() * ch.z;
            const double scale = std::max(y.norm(), 1e-300);
            worst = std::max({worst, (y - model).norm() / scale, (y - factored).norm() / scale});
        }
        return {worst <= 1e-9, fmt("worst relative error %.2e (limit 1e-9), 100 cases", worst)};
    }

    Outcome omp_oracle_equivalence()
    {
        Rng rng(103);
        const int trials = 200, paths = 2, columns = 64; // an 8-point grid
        const int rows = 8 * paths;
        int support_match = 0;
        double worst_gain = 0.0;
        for (int t = 0; t < trials; ++t)
        {
            const cmat phi = gaussian_matrix(rows, columns, rng);
            std::set<int> truth_set;
            while (static_cast<int>(truth_set.size()) < paths)
                truth_set.insert(static_cast<int>(rng() % columns));
            const std::vector<int> truth(truth_set.begin(), truth_set.end());
            cvec z = cvec::Zero(columns);
            for (int k : truth)
                z(k) = complex_gaussian(rng, 1.0);
            const cvec y = phi * z;

            SparseEstimate est = omp(phi, y, paths, 0.0);
            const auto brute = oracle::best_subset(phi, y, paths);
            std::vector<int> order(est.support.size());
            for (std::size_t i = 0; i < order.size(); ++i)
                order[i] = static_cast<int>(i);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return est.support[a] < est.support[b]; });
            std::vector<int> sorted;
            for (int i : order)
                sorted.push_back(est.support[static_cast<std::size_t>(i)]);
            if (sorted != brute.support)
                continue;
            ++support_match;
            for (std::size_t i = 0; i < order.size(); ++i)
                worst_gain = std::max(worst_gain, std::abs(est.gains(order[i]) - z(sorted[i])));
        }
        const double rate = static_cast<double>(support_match) / trials;

        // Information only: the same check on the physical steering dictionary (7-point grid,
        // 4 x 4 random steering beams), where Kronecker cross atoms make greedy selection harder.
        Rng rng2(104);
        const Dictionary d = build_dictionary(quantized_grid(7), {8, 0.5}, {8, 0.5});
        int physical = 0;
        for (int t = 0; t < trials; ++t)
        {
            const auto tx = random_measurement_beams(4, d.bs, rng2), rx = random_measurement_beams(4, d.ms, rng2);
            const cmat phi = build_sensing_matrix(tx, rx, d, 1.0);
            const OnGrid ch = on_grid_channel(d, paths, rng2);
            auto est = omp(phi, phi * ch.z, paths, 0.0);
            std::sort(est.support.begin(), est.support.end());
            physical += est.support == oracle::best_subset(phi, phi * ch.z, paths).support;
        }
        return {rate >= 0.99 && worst_gain <= 1e-6,
                fmt("support = brute force in %d/%d (need >= 99%%), worst gain error %.1e (limit 1e-6); "
                    "steering dictionary: %d/%d",
                    support_match, trials, worst_gain, physical, trials)};
    }

    Outcome exhaustive_self_oracle()
    {
        Rng rng(105);
        const ArrayConfig arr{8, 0.5};
        const Codebook cb = build_codebook(8, 72);
        int exact = 0;
        for (int t = 0; t < 100; ++t)
        {
            const cmat h = build_channel(sample_paths(rng, 4, 6.0), arr, arr);
            const AlignmentResult res = exhaustive_search(h, cb, cb);
            double best = -1.0;
            for (int a = 0; a < cb.beam_count(); ++a)
                for (int b = 0; b < cb.beam_count(); ++b)
                    best = std::max(best, oracle::gain(h, cb.weights.col(a), cb.weights.col(b)));
            exact += oracle::gain(h, res.tx_beam, res.rx_beam) == best;
        }
        return {exact == 100, fmt("returned pair attains the re-scan maximum exactly on %d/100 channels", exact)};
    }

    Outcome gain_ceiling()
    {
        Rng rng(106);
        const ArrayConfig arr{8, 0.5};
        const AngleGrid grid = quantized_grid(72);
        const Dictionary dict = build_dictionary(grid, arr, arr);
        const Codebook cb = build_codebook(8, 72);
        double worst = 0.0, worst_cs = 0.0;
        for (int t = 0; t < 100; ++t)
        {
            const int u = static_cast<int>(rng() % 72), v = static_cast<int>(rng() % 72);
            const cvec p_bs = array_response(grid.angle(u), arr), p_ms = array_response(grid.angle(v), arr);
            const cmat h = complex_gaussian(rng, 1.0) * p_ms * p_bs.adjoint();
            worst = std::max(worst, std::abs(bf_gain(h, p_bs, p_ms) - 64.0));

            // the same ceiling through the noiseless CS pipeline with sectors around the truth
            const auto tx = build_sector_beams({(u + 70) % 72, (u + 2) % 72, 72}, 5, grid, arr);
            const auto rx = build_sector_beams({(v + 70) % 72, (v + 2) % 72, 72}, 5, grid, arr);
            const auto res = run_cs_strategy(Strategy::CsLocalized, h, tx, rx, dict, {1, 1.0, 0.0, 1e-6},
                                             cb.weights.col(0), cb.weights.col(0), rng);
            worst_cs = std::max(worst_cs, std::abs(res.gain - 64.0));
        }
        return {worst <= 1e-6 && worst_cs <= 1e-6,
                fmt("max |gain - 64| %.1e matched, %.1e via CS recovery (limit 1e-6)", worst, worst_cs)};
    }

    // sup_x (F_a(x) - F_b(x)) over the pooled samples
    double ks_one_sided(std::vector<double> a, std::vector<double> b)
    {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::vector<double> xs = a;
        xs.insert(xs.end(), b.begin(), b.end());
        double d = 0.0;
        for (double x : xs)
        {
            const double fa = static_cast<double>(std::upper_bound(a.begin(), a.end(), x) - a.begin()) / a.size();
            const double fb = static_cast<double>(std::upper_bound(b.begin(), b.end(), x) - b.begin()) / b.size();
            d = std::max(d, fa - fb);
        }
        return d;
    }

    double mean_of(const std::vector<double> &v)
    {
        double s = 0.0;
        for (double x : v)
            s += x;
        return s / static_cast<double>(v.size());
    }

    std::vector<double> switches_of(const std::vector<TrialRecord> &recs, Strategy s)
    {
        std::vector<double> out;
        for (const auto &r : recs)
            if (r.strategy == s)
                out.push_back(r.switch_count);
        return out;
    }

    Outcome paper_replication()
    {
        SimConfig cfg; // 8 x 8 ULAs, L = 4, k = 6, 5 degree beams, U[0, 5] m, 20 dB, 1000 trials
        const auto recs = run_monte_carlo(cfg);
        const double es_sw = mean_of(switches_of(recs, Strategy::ExhaustiveSearch));
        const double rnd_sw = mean_of(switches_of(recs, Strategy::CsRandom));
        const double loc_sw = mean_of(switches_of(recs, Strategy::CsLocalized));
        const bool a = loc_sw >= 8.0 && loc_sw <= 25.0;
        const double red_es = 1.0 - loc_sw / es_sw, red_rnd = 1.0 - loc_sw / rnd_sw;
        const bool b = red_es >= 0.65 && red_rnd >= 0.50;
        const double med_es = median(gains_of(recs, Strategy::ExhaustiveSearch));
        const double med_loc = median(gains_of(recs, Strategy::CsLocalized));
        const bool c = med_loc >= 0.9 * med_es;

        SimConfig parity = cfg; // 16 probes each
        parity.switch_convention = SwitchConvention::Pair;
        parity.cs_random_budget = 16;
        parity.cs_localized_budget = 16;
        const auto low = run_monte_carlo(parity);
        const auto g_rnd = gains_of(low, Strategy::CsRandom), g_loc = gains_of(low, Strategy::CsLocalized);
        const double n = static_cast<double>(g_rnd.size()), m = static_cast<double>(g_loc.size());
        const double d_plus = ks_one_sided(g_rnd, g_loc);  // CsRandom CDF above CsLocalized
        const double d_minus = ks_one_sided(g_loc, g_rnd);
        const double critical = std::sqrt(-std::log(0.01) / 2.0) * std::sqrt((n + m) / (n * m));
        const double probes_rnd = mean_of(switches_of(low, Strategy::CsRandom));
        const double probes_loc = mean_of(switches_of(low, Strategy::CsLocalized));
        const bool d = d_plus > critical && d_plus > d_minus && probes_loc <= probes_rnd;

        return {a && b && c && d,
                fmt("(a) %s loc switches %.2f in [8,25]; (b) %s reduction %.1f%% vs ES (>=65%%), %.1f%% vs random "
                    "(>=50%%); (c) %s median %.2f vs 0.9 x %.2f; (d) %s KS D+ %.3f > %.3f, D- %.3f, probes %.1f/%.1f",
                    a ? "ok" : "FAIL", loc_sw, b ? "ok" : "FAIL", 100 * red_es, 100 * red_rnd, c ? "ok" : "FAIL",
                    med_loc, med_es, d ? "ok" : "FAIL", d_plus, critical, d_minus, probes_rnd, probes_loc)};
    }

    Outcome localization_soundness()
    {
        SimConfig cfg;
        const Scenario sc = make_scenario(cfg);
        int covered = 0;
        for (int t = 0; t < 1000; ++t)
        {
            const TrialGeometry g = draw_geometry(sc, trial_seed(2024, t));
            const int aod = sc.grid.nearest_index(bearing(g.bs_true, g.ms_true));
            const int aoa = sc.grid.nearest_index(bearing(g.ms_true, g.bs_true));
            covered += g.aod_range.contains(aod) && g.aoa_range.contains(aoa);
        }
        return {covered >= 990,
                fmt("LOS bearing index covered in %d/1000 placements (need >= 990)", covered)};
    }

    Outcome determinism()
    {
        SimConfig cfg;
        cfg.seed = 42;
        std::vector<std::string> outputs;
        for (int workers : {1, 2, 4, 1})
        {
            std::ostringstream os;
            write_csv(os, run_monte_carlo(cfg, workers));
            outputs.push_back(os.str());
        }
        const bool same = std::all_of(outputs.begin(), outputs.end(), [&](const std::string &s) { return s == outputs[0]; });
        return {same, fmt("seed 42 CSV (%zu bytes) identical across 4 runs with 1, 2, 4, 1 workers", outputs[0].size())};
    }
}

int main()
{
    criterion("vectorization identity", 1, vectorization_identity);
    criterion("sparse-model consistency", 5, sparse_model_consistency);
    criterion("OMP oracle equivalence", 30, omp_oracle_equivalence);
    criterion("exhaustive-search self-oracle", 60, exhaustive_self_oracle);
    criterion("gain ceiling", 60, gain_ceiling);
    criterion("paper replication", 300, paper_replication);
    criterion("localization-range soundness", 5, localization_soundness);
    criterion("determinism", 300, determinism);
    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}

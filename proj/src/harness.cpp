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

#include "mmbeam/harness.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mmbeam
{
    std::uint64_t trial_seed(std::uint64_t run_seed, int trial)
    {
        return mix_seed(run_seed, static_cast<std::uint64_t>(trial));
    }

    namespace
    {
        void append_trial(const Scenario &scenario, int trial, TrialRecord *out)
        {
            const std::uint64_t seed = trial_seed(scenario.config.seed, trial);
            const auto results = run_trial(scenario, seed);
            for (std::size_t s = 0; s < results.size(); ++s)
                out[s] = {trial, results[s].strategy, results[s].gain,
                          results[s].switches(scenario.config.switch_convention), results[s].fallback_used, seed};
        }

        constexpr std::size_t kStrategies = 3;
    }

    std::vector<TrialRecord> run_monte_carlo(const SimConfig &config, int workers)
    {
        const Scenario scenario = make_scenario(config);
        std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials) * kStrategies);
        const int trials = config.trials;

#ifdef _OPENMP
        const int threads = workers > 0 ? workers : omp_get_max_threads();
#else
        (void)workers;
#endif
        // Slots are indexed by trial, so the output is independent of scheduling.
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
        for (int t = 0; t < trials; ++t)
            append_trial(scenario, t, records.data() + static_cast<std::size_t>(t) * kStrategies);
        return records;
    }

    std::vector<TrialRecord> run_monte_carlo_serial(const SimConfig &config)
    {
        const Scenario scenario = make_scenario(config);
        std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials) * kStrategies);
        for (int t = 0; t < config.trials; ++t)
            append_trial(scenario, t, records.data() + static_cast<std::size_t>(t) * kStrategies);
        return records;
    }

    CdfSeries empirical_cdf(std::span<const double> samples)
    {
        if (samples.empty())
            throw std::domain_error("empirical_cdf: no samples");
        std::vector<double> sorted(samples.begin(), samples.end());
        std::sort(sorted.begin(), sorted.end());

        CdfSeries cdf;
        const double n = static_cast<double>(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
        {
            const double p = static_cast<double>(i + 1) / n;
            if (!cdf.values.empty() && cdf.values.back() == sorted[i])
                cdf.probabilities.back() = p;
            else
            {
                cdf.values.push_back(sorted[i]);
                cdf.probabilities.push_back(p);
            }
        }
        cdf.probabilities.back() = 1.0;
        return cdf;
    }

    double evaluate_cdf(const CdfSeries &cdf, double x)
    {
        const auto it = std::upper_bound(cdf.values.begin(), cdf.values.end(), x);
        if (it == cdf.values.begin())
            return 0.0;
        return cdf.probabilities[static_cast<std::size_t>(it - cdf.values.begin() - 1)];
    }

    double median(std::vector<double> values)
    {
        if (values.empty())
            throw std::domain_error("median: no values");
        std::sort(values.begin(), values.end());
        const std::size_t n = values.size();
        return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    }

    std::vector<double> gains_of(std::span<const TrialRecord> records, Strategy strategy)
    {
        std::vector<double> out;
        for (const auto &r : records)
            if (r.strategy == strategy)
                out.push_back(r.gain);
        return out;
    }

    std::map<Strategy, StrategySummary> summarize(std::span<const TrialRecord> records)
    {
        std::map<Strategy, StrategySummary> out;
        std::map<Strategy, std::vector<double>> gains;
        for (const auto &r : records)
        {
            auto &s = out[r.strategy];
            ++s.count;
            s.mean_gain += r.gain;
            s.mean_switch_count += r.switch_count;
            s.fallbacks += r.fallback_used ? 1 : 0;
            gains[r.strategy].push_back(r.gain);
        }
        for (auto &[strategy, s] : out)
        {
            s.mean_gain /= static_cast<double>(s.count);
            s.mean_switch_count /= static_cast<double>(s.count);
            s.median_gain = median(gains[strategy]);
        }
        return out;
    }
}

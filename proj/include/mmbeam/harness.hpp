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

#ifndef MMBEAM_HARNESS_HPP
#define MMBEAM_HARNESS_HPP

#include "mmbeam/config.hpp"
#include "mmbeam/strategies.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace mmbeam
{
    struct TrialRecord
    {
        int trial = 0;
        Strategy strategy = Strategy::ExhaustiveSearch;
        double gain = 0.0;
        int switch_count = 0; // in the run's switch convention
        bool fallback_used = false;
        std::uint64_t seed = 0; // per-trial stream seed; run_trial(scenario, seed) replays the trial

        bool operator==(const TrialRecord &) const = default;
    };

    // Seed of the random stream owned by a trial.
    std::uint64_t trial_seed(std::uint64_t run_seed, int trial);

    // `config.trials` independent trials, records ordered by (trial, strategy). The result does
    // not depend on `workers`; workers <= 0 uses the OpenMP default.
    std::vector<TrialRecord> run_monte_carlo(const SimConfig &config, int workers = 0);

    // Single-threaded reference.
    std::vector<TrialRecord> run_monte_carlo_serial(const SimConfig &config);

    struct CdfSeries
    {
        std::vector<double> values;        // strictly increasing
        std::vector<double> probabilities; // F(values[i]), last entry 1
    };

    // F(x_(i)) = i / n on the sorted samples; equal samples share one step.
    CdfSeries empirical_cdf(std::span<const double> samples);

    // Value of the empirical CDF at x.
    double evaluate_cdf(const CdfSeries &cdf, double x);

    struct StrategySummary
    {
        std::size_t count = 0;
        double mean_gain = 0.0;
        double median_gain = 0.0;
        double mean_switch_count = 0.0;
        std::size_t fallbacks = 0;
    };

    std::map<Strategy, StrategySummary> summarize(std::span<const TrialRecord> records);

    std::vector<double> gains_of(std::span<const TrialRecord> records, Strategy strategy);

    double median(std::vector<double> values);
}

#endif

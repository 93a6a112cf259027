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

#ifndef MMBEAM_STRATEGIES_HPP
#define MMBEAM_STRATEGIES_HPP

#include "mmbeam/beam_design.hpp"
#include "mmbeam/codebook.hpp"
#include "mmbeam/config.hpp"
#include "mmbeam/cs_engine.hpp"
#include "mmbeam/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmbeam
{
    enum class Strategy
    {
        ExhaustiveSearch,
        CsRandom,
        CsLocalized
    };

    std::string to_string(Strategy s);
    Strategy parse_strategy(const std::string &s);

    struct AlignmentResult
    {
        Strategy strategy = Strategy::ExhaustiveSearch;
        cvec tx_beam;
        cvec rx_beam;
        double gain = 0.0;      // |w_rx^H H w_tx|^2 / ||H||_F^2
        int switch_count = 0;   // beam-pair probes
        int per_side_count = 0; // beam vectors examined on the busier side
        bool fallback_used = false;
        int tx_index = -1; // chosen codebook column (exhaustive search)
        int rx_index = -1;
        std::optional<std::pair<double, double>> estimated_angles; // (aod, aoa), CS strategies

        int switches(SwitchConvention c) const
        {
            return c == SwitchConvention::Pair ? switch_count : per_side_count;
        }
    };

    // |w_rx^H H w_tx|^2 / ||H||_F^2. Bounded by N_BS * N_MS for beams of squared norm N_BS, N_MS.
    // Throws std::domain_error for a zero channel or mismatched dimensions.
    double bf_gain(const cmat &channel, const cvec &w_tx, const cvec &w_rx);

    // Best TX/RX codebook pair, ties to the smallest (b_tx, b_rx). The serial flavor is kept
    // as the reference for the parallel scan.
    AlignmentResult exhaustive_search(const cmat &channel, const Codebook &tx_cb, const Codebook &rx_cb);
    AlignmentResult exhaustive_search_serial(const cmat &channel, const Codebook &tx_cb, const Codebook &rx_cb);

    struct CsSettings
    {
        int num_paths = 4; // OMP sparsity bound
        double tx_power = 1.0;
        double noise_sigma = 0.0;
        double residual_tol = 1e-3;
    };

    // Index into est.support of the path with the largest |gain| * ||phi column||.
    int strongest_path(const SparseEstimate &est, const KroneckerSensing &phi);

    // Measure, recover with OMP and steer both arrays at the strongest recovered path.
    // Falls back to the given beams when OMP returns nothing.
    AlignmentResult run_cs_strategy(Strategy label, const cmat &channel, const MeasurementBeams &tx_beams,
                                    const MeasurementBeams &rx_beams, const Dictionary &dict,
                                    const CsSettings &settings, const cvec &fallback_tx, const cvec &fallback_rx,
                                    Rng &rng);

    // Immutable per-run state shared by all trials.
    struct Scenario
    {
        SimConfig config;
        ArrayConfig bs;
        ArrayConfig ms;
        AngleGrid grid;
        Dictionary dict;
        Codebook tx_codebook;
        Codebook rx_codebook;
    };

    Scenario make_scenario(const SimConfig &config);

    // Placement, localization error and the localized angle ranges of one trial.
    struct TrialGeometry
    {
        Location bs_true, ms_true, bs_est, ms_est;
        AngleIndexRange aod_range;
        AngleIndexRange aoa_range;
    };
    // The geometry run_trial uses for the same seed.
    TrialGeometry draw_geometry(const Scenario &scenario, std::uint64_t trial_seed);
    // Everything drawn for one trial, kept for inspection by the demo command.
    struct TrialDraw
    {
        Location bs_true, ms_true, bs_est, ms_est;
        PathSet paths;
        cmat channel;
        AngleIndexRange aod_range;
        AngleIndexRange aoa_range;
    };

    // One independent trial: placement, localization error, channel, then the three strategies
    // on the same channel. The result order is ExhaustiveSearch, CsRandom, CsLocalized.
    std::vector<AlignmentResult> run_trial(const Scenario &scenario, std::uint64_t trial_seed,
                                           TrialDraw *draw = nullptr);
}

#endif

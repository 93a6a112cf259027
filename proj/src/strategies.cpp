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

#include "mmbeam/strategies.hpp"
#include "mmbeam/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmbeam
{
    std::string to_string(Strategy s)
    {
        switch (s)
        {
        case Strategy::ExhaustiveSearch:
            return "ExhaustiveSearch";
        case Strategy::CsRandom:
            return "CsRandom";
        default:
            return "CsLocalized";
        }
    }

    Strategy parse_strategy(const std::string &s)
    {
        for (auto st : {Strategy::ExhaustiveSearch, Strategy::CsRandom, Strategy::CsLocalized})
            if (s == to_string(st))
                return st;
        throw std::invalid_argument("unknown strategy '" + s + "'");
    }

    double bf_gain(const cmat &channel, const cvec &w_tx, const cvec &w_rx)
    {
        if (w_tx.size() != channel.cols() || w_rx.size() != channel.rows())
            throw std::domain_error("bf_gain: beam and channel dimensions differ");
        const double h_power = channel.squaredNorm();
        if (h_power == 0.0)
            throw std::domain_error("bf_gain: zero channel");
        const cvec h_tx = channel * w_tx;
        return kernels::pair_power(h_tx, w_rx) / h_power;
    }

    namespace
    {
        AlignmentResult from_pair(const cmat &channel, const Codebook &tx_cb, const Codebook &rx_cb,
                                  const kernels::BeamPair &best)
        {
            const double h_power = channel.squaredNorm();
            if (h_power == 0.0)
                throw std::domain_error("exhaustive_search: zero channel");
            AlignmentResult res;
            res.strategy = Strategy::ExhaustiveSearch;
            res.tx_index = best.tx;
            res.rx_index = best.rx;
            res.tx_beam = tx_cb.weights.col(best.tx);
            res.rx_beam = rx_cb.weights.col(best.rx);
            res.gain = best.power / h_power;
            res.switch_count = tx_cb.beam_count() * rx_cb.beam_count();
            res.per_side_count = std::max(tx_cb.beam_count(), rx_cb.beam_count());
            return res;
        }
    }

    AlignmentResult exhaustive_search(const cmat &channel, const Codebook &tx_cb, const Codebook &rx_cb)
    {
        return from_pair(channel, tx_cb, rx_cb, kernels::best_pair_parallel(channel, tx_cb.weights, rx_cb.weights));
    }

    AlignmentResult exhaustive_search_serial(const cmat &channel, const Codebook &tx_cb, const Codebook &rx_cb)
    {
        return from_pair(channel, tx_cb, rx_cb, kernels::best_pair_serial(channel, tx_cb.weights, rx_cb.weights));
    }

    int strongest_path(const SparseEstimate &est, const KroneckerSensing &phi)
    {
        // Rank by the energy each path puts into the measurements. A raw |gain| ranking is
        // dominated by atoms the beams barely observe, whose least-squares gains are inflated.
        int best = 0;
        double best_energy = -1.0;
        for (std::size_t k = 0; k < est.support.size(); ++k)
        {
            const double energy = std::abs(est.gains(static_cast<Eigen::Index>(k))) * phi.column(est.support[k]).norm();
            if (energy > best_energy)
            {
                best_energy = energy;
                best = static_cast<int>(k);
            }
        }
        return best;
    }

    AlignmentResult run_cs_strategy(Strategy label, const cmat &channel, const MeasurementBeams &tx_beams,
                                    const MeasurementBeams &rx_beams, const Dictionary &dict,
                                    const CsSettings &settings, const cvec &fallback_tx, const cvec &fallback_rx,
                                    Rng &rng)
    {
        const cvec y =
            simulate_measurements(channel, tx_beams, rx_beams, settings.tx_power, settings.noise_sigma, rng);
        const KroneckerSensing phi = build_kronecker_sensing(tx_beams, rx_beams, dict, settings.tx_power);
        const SparseEstimate est = omp(phi, y, settings.num_paths, settings.residual_tol);

        AlignmentResult res;
        res.strategy = label;
        res.switch_count = tx_beams.count() * rx_beams.count();
        res.per_side_count = std::max(tx_beams.count(), rx_beams.count());

        if (est.support.empty())
        {
            res.fallback_used = true;
            res.tx_beam = fallback_tx;
            res.rx_beam = fallback_rx;
        }
        else
        {
            const int strongest = strongest_path(est, phi);
            const auto [aod, aoa] = support_to_angles(est.support[static_cast<std::size_t>(strongest)], dict.grid);
            res.estimated_angles = std::make_pair(aod, aoa);
            res.tx_beam = array_response(aod, dict.bs);
            res.rx_beam = array_response(aoa, dict.ms);
        }
        res.gain = bf_gain(channel, res.tx_beam, res.rx_beam);
        return res;
    }

    Scenario make_scenario(const SimConfig &config)
    {
        config.validate();
        const ArrayConfig bs = config.bs_array();
        const ArrayConfig ms = config.ms_array();
        const AngleGrid grid = quantized_grid(config.grid_size);
        return Scenario{config,
                        bs,
                        ms,
                        grid,
                        build_dictionary(grid, bs, ms),
                        build_codebook(config.n_bs, config.beam_count_es),
                        build_codebook(config.n_ms, config.beam_count_es)};
    }

    namespace
    {
        // Independent sub-streams so that e.g. the CsRandom budget does not shift the
        // CsLocalized noise draws.
        enum Stream : std::uint64_t
        {
            kGeometry = 0,
            kPaths = 1,
            kRandomBeams = 2,
            kRandomNoise = 3,
            kLocalizedNoise = 4
        };

        Location draw_location(Rng &rng, double side)
        {
            const double x = uniform(rng, 0.0, side);
            const double y = uniform(rng, 0.0, side);
            return {x, y};
        }

        std::pair<int, int> localized_beam_counts(const SimConfig &cfg, const AngleIndexRange &aod,
                                                  const AngleIndexRange &aoa)
        {
            if (cfg.cs_localized_budget == 0)
                return {sector_beam_count(aod, cfg.indices_per_beam()), sector_beam_count(aoa, cfg.indices_per_beam())};
            const auto [m_tx, m_rx] = split_budget(cfg.cs_localized_budget, cfg.switch_convention);
            return {std::min(m_tx, aod.count()), std::min(m_rx, aoa.count())};
        }
    }

    TrialGeometry draw_geometry(const Scenario &scenario, std::uint64_t trial_seed)
    {
        const SimConfig &cfg = scenario.config;
        TrialGeometry g;
        Rng geo(mix_seed(trial_seed, kGeometry));
        do
        {
            g.bs_true = draw_location(geo, cfg.area_side_m);
            g.ms_true = draw_location(geo, cfg.area_side_m);
        } while (distance(g.bs_true, g.ms_true) < cfg.min_separation_m);

        const LocalizationError err{cfg.max_loc_error_m, cfg.loc_error_model};
        g.bs_est = perturb_location(g.bs_true, err, geo);
        g.ms_est = perturb_location(g.ms_true, err, geo);
        const double combined = combined_error(err, err);
        g.aod_range = angular_range(g.bs_est, g.ms_est, combined, scenario.grid);
        g.aoa_range = angular_range(g.ms_est, g.bs_est, combined, scenario.grid);
        return g;
    }

    std::vector<AlignmentResult> run_trial(const Scenario &scenario, std::uint64_t trial_seed, TrialDraw *draw)
    {
        const SimConfig &cfg = scenario.config;

        const TrialGeometry geo = draw_geometry(scenario, trial_seed);
        const Location &bs_true = geo.bs_true, &ms_true = geo.ms_true;

        Rng path_rng(mix_seed(trial_seed, kPaths));
        PathSet paths = sample_paths(path_rng, cfg.num_paths, cfg.rician_k, {cfg.rician_mode, cfg.nlos_profile});
        anchor_los(paths, bearing(bs_true, ms_true), bearing(ms_true, bs_true));
        if (cfg.path_loss_model == PathLossModel::FreeSpace)
            paths.path_loss = std::pow(distance(bs_true, ms_true), cfg.path_loss_exponent);
        const cmat channel = build_channel(paths, scenario.bs, scenario.ms);

        const CsSettings cs{cfg.num_paths, cfg.tx_power, cfg.noise_sigma(), cfg.omp_residual_tol};
        const cvec fallback_tx = scenario.tx_codebook.weights.col(0);
        const cvec fallback_rx = scenario.rx_codebook.weights.col(0);

        std::vector<AlignmentResult> results;
        results.reserve(3);
        results.push_back(exhaustive_search(channel, scenario.tx_codebook, scenario.rx_codebook));

        {
            Rng beam_rng(mix_seed(trial_seed, kRandomBeams));
            const auto [m_tx, m_rx] = split_budget(cfg.cs_random_budget, cfg.switch_convention);
            const MeasurementBeams tx = random_measurement_beams(m_tx, scenario.bs, beam_rng);
            const MeasurementBeams rx = random_measurement_beams(m_rx, scenario.ms, beam_rng);
            Rng noise(mix_seed(trial_seed, kRandomNoise));
            results.push_back(run_cs_strategy(Strategy::CsRandom, channel, tx, rx, scenario.dict, cs, fallback_tx,
                                              fallback_rx, noise));
        }

        const AngleIndexRange &aod_range = geo.aod_range, &aoa_range = geo.aoa_range;
        {
            const auto [m_tx, m_rx] = localized_beam_counts(cfg, aod_range, aoa_range);
            const MeasurementBeams tx = build_sector_beams(aod_range, m_tx, scenario.grid, scenario.bs);
            const MeasurementBeams rx = build_sector_beams(aoa_range, m_rx, scenario.grid, scenario.ms);
            Rng noise(mix_seed(trial_seed, kLocalizedNoise));
            results.push_back(run_cs_strategy(Strategy::CsLocalized, channel, tx, rx, scenario.dict, cs,
                                              fallback_tx, fallback_rx, noise));
        }

        if (draw)
            *draw = {bs_true, ms_true, geo.bs_est, geo.ms_est, paths, channel, aod_range, aoa_range};
        return results;
    }
}

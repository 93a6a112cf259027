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

#include "mmbeam/config.hpp"

#include <cmath>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace mmbeam
{
    namespace
    {
        std::string join(const std::vector<std::string> &items)
        {
            std::ostringstream os;
            os << "invalid configuration:";
            for (const auto &item : items)
                os << "\n  - " << item;
            return os.str();
        }
    }

    ConfigError::ConfigError(std::vector<std::string> problems)
        : std::invalid_argument(join(problems)), problems_(std::move(problems))
    {
    }

    double SimConfig::noise_sigma() const
    {
        return std::sqrt(tx_power / std::pow(10.0, snr_db / 10.0));
    }

    int SimConfig::indices_per_beam() const
    {
        const double step_deg = 360.0 / grid_size;
        return std::max(1, static_cast<int>(std::lround(beamwidth_deg / step_deg)));
    }

    std::vector<std::string> SimConfig::violations() const
    {
        std::vector<std::string> out;
        auto need = [&out](bool ok, const std::string &msg) {
            if (!ok)
                out.push_back(msg);
        };
        need(n_bs >= 4 && n_bs % 4 == 0, "n_bs must be a positive multiple of 4 (codebook)");
        need(n_ms >= 4 && n_ms % 4 == 0, "n_ms must be a positive multiple of 4 (codebook)");
        need(element_spacing > 0.0 && std::isfinite(element_spacing), "element_spacing must be > 0");
        need(num_paths >= 1, "num_paths must be >= 1");
        need(grid_size >= 1, "grid_size must be >= 1");
        need(num_paths < 1 || grid_size >= 4 * num_paths, "grid_size must be >= 4 * num_paths");
        need(beam_count_es >= 2 && beam_count_es % 2 == 0, "beam_count_es must be a positive even number");
        if (beamwidth_deg > 0.0 && std::isfinite(beamwidth_deg))
        {
            const double beams = 360.0 / beamwidth_deg;
            need(std::abs(beams - std::round(beams)) < 1e-6, "beamwidth_deg must divide 360");
        }
        else
            need(false, "beamwidth_deg must be > 0");
        need(rician_k > 0.0 && std::isfinite(rician_k), "rician_k must be > 0");
        need(path_loss_exponent >= 0.0, "path_loss_exponent must be >= 0");
        need(max_loc_error_m >= 0.0, "max_loc_error_m must be >= 0");
        need(area_side_m > 0.0, "area_side_m must be > 0");
        need(min_separation_m >= 0.0, "min_separation_m must be >= 0");
        need(min_separation_m < area_side_m * std::sqrt(2.0) * 0.9,
             "min_separation_m must be well below the area diagonal");
        need(std::isfinite(snr_db), "snr_db must be finite");
        need(tx_power > 0.0, "tx_power must be > 0");
        need(omp_residual_tol >= 0.0, "omp_residual_tol must be >= 0");
        need(cs_random_budget >= 1, "cs_random_budget must be >= 1");
        need(cs_localized_budget >= 0, "cs_localized_budget must be >= 0");
        need(trials >= 1, "trials must be >= 1");
        return out;
    }

    void SimConfig::validate() const
    {
        auto problems = violations();
        if (!problems.empty())
            throw ConfigError(std::move(problems));
    }

    std::pair<int, int> split_budget(int budget, SwitchConvention convention)
    {
        if (budget < 1)
            throw std::domain_error("split_budget: budget must be >= 1");
        if (convention == SwitchConvention::PerSide)
            return {budget, budget};
        int m_tx = static_cast<int>(std::sqrt(static_cast<double>(budget)));
        while (budget % m_tx != 0)
            --m_tx;
        return {m_tx, budget / m_tx};
    }

    std::string to_string(SwitchConvention c) { return c == SwitchConvention::PerSide ? "per-side" : "pair"; }
    std::string to_string(RicianMode m) { return m == RicianMode::Fixed ? "fixed" : "uniform"; }
    std::string to_string(NlosProfile p) { return p == NlosProfile::EqualPower ? "equal" : "rayleigh"; }
    std::string to_string(PathLossModel m) { return m == PathLossModel::Unit ? "unit" : "free-space"; }
    std::string to_string(ErrorModel m) { return m == ErrorModel::OneSided ? "one-sided" : "zero-mean"; }

    namespace
    {
        template <typename E>
        E parse_choice(const std::string &s, std::initializer_list<std::pair<const char *, E>> choices,
                       const char *what)
        {
            for (const auto &[name, value] : choices)
                if (s == name)
                    return value;
            throw ConfigError({std::string(what) + ": unknown value '" + s + "'"});
        }
    }

    SwitchConvention parse_switch_convention(const std::string &s)
    {
        return parse_choice<SwitchConvention>(
            s, {{"per-side", SwitchConvention::PerSide}, {"pair", SwitchConvention::Pair}}, "switch_convention");
    }

    RicianMode parse_rician_mode(const std::string &s)
    {
        return parse_choice<RicianMode>(s, {{"fixed", RicianMode::Fixed}, {"uniform", RicianMode::Uniform}},
                                        "rician_mode");
    }

    NlosProfile parse_nlos_profile(const std::string &s)
    {
        return parse_choice<NlosProfile>(
            s, {{"equal", NlosProfile::EqualPower}, {"rayleigh", NlosProfile::Rayleigh}}, "nlos_profile");
    }

    PathLossModel parse_path_loss_model(const std::string &s)
    {
        return parse_choice<PathLossModel>(
            s, {{"unit", PathLossModel::Unit}, {"free-space", PathLossModel::FreeSpace}}, "path_loss_model");
    }

    ErrorModel parse_error_model(const std::string &s)
    {
        return parse_choice<ErrorModel>(
            s, {{"one-sided", ErrorModel::OneSided}, {"zero-mean", ErrorModel::ZeroMean}}, "loc_error_model");
    }
}

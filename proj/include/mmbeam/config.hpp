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

#ifndef MMBEAM_CONFIG_HPP
#define MMBEAM_CONFIG_HPP

#include "mmbeam/arrays_channel.hpp"
#include "mmbeam/geometry.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmbeam
{
    enum class SwitchConvention
    {
        PerSide, // beam vectors examined on the busier side: B for a full sweep, max(M_tx, M_rx) for CS
        Pair     // TX/RX beam pairs probed: B_tx * B_rx, M_tx * M_rx
    };

    enum class PathLossModel
    {
        Unit,     // gamma = 1
        FreeSpace // gamma = (distance / 1 m) ^ exponent
    };

    // Every knob of a Monte-Carlo run. Defaults reproduce the 8x8 ULA, 4-path, 5 degree setup.
    struct SimConfig
    {
        int n_bs = 8;
        int n_ms = 8;
        double element_spacing = 0.5; // d / lambda
        int grid_size = 72;
        int beam_count_es = 72;
        double beamwidth_deg = 5.0;
        int num_paths = 4;
        double rician_k = 6.0;
        RicianMode rician_mode = RicianMode::Fixed;
        NlosProfile nlos_profile = NlosProfile::EqualPower;
        PathLossModel path_loss_model = PathLossModel::Unit;
        double path_loss_exponent = 2.0;
        double max_loc_error_m = 5.0;
        ErrorModel loc_error_model = ErrorModel::OneSided;
        double area_side_m = 100.0;
        double min_separation_m = 10.0;
        double snr_db = 20.0;      // P / noise_sigma^2
        double tx_power = 1.0;     // P
        double omp_residual_tol = 1e-3;
        int cs_random_budget = 50; // counted in switch_convention
        int cs_localized_budget = 0; // 0: one sector beam per beamwidth over the localized range
        SwitchConvention switch_convention = SwitchConvention::PerSide;
        int trials = 1000;
        std::uint64_t seed = 1;
        double carrier_hz = 28e9;    // recorded only
        double bandwidth_hz = 100e6; // recorded only

        double noise_sigma() const;
        // Grid points per beamwidth, at least 1.
        int indices_per_beam() const;
        ArrayConfig bs_array() const { return {n_bs, element_spacing}; }
        ArrayConfig ms_array() const { return {n_ms, element_spacing}; }

        // Every violated constraint, empty when the config is usable.
        std::vector<std::string> violations() const;
        // Throws ConfigError listing all violations.
        void validate() const;
    };

    class ConfigError : public std::invalid_argument
    {
    public:
        explicit ConfigError(std::vector<std::string> problems);
        const std::vector<std::string> &problems() const { return problems_; }

    private:
        std::vector<std::string> problems_;
    };

    // Beams per side realizing a probe budget under a convention: per-side gives budget x budget,
    // pair gives the most square factorization m_tx * m_rx = budget with m_tx <= m_rx.
    std::pair<int, int> split_budget(int budget, SwitchConvention convention);

    std::string to_string(SwitchConvention c);
    std::string to_string(RicianMode m);
    std::string to_string(NlosProfile p);
    std::string to_string(PathLossModel m);
    std::string to_string(ErrorModel m);
    SwitchConvention parse_switch_convention(const std::string &s);
    RicianMode parse_rician_mode(const std::string &s);
    NlosProfile parse_nlos_profile(const std::string &s);
    PathLossModel parse_path_loss_model(const std::string &s);
    ErrorModel parse_error_model(const std::string &s);
}

#endif

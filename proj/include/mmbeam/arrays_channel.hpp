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

#ifndef MMBEAM_ARRAYS_CHANNEL_HPP
#define MMBEAM_ARRAYS_CHANNEL_HPP

#include "mmbeam/common.hpp"

#include <vector>

namespace mmbeam
{
    // Uniform linear array. Element n sits at n * spacing wavelengths along the array axis;
    // angles are measured from broadside in the common azimuth frame.
    struct ArrayConfig
    {
        int num_elements = 8;
        double element_spacing_over_wavelength = 0.5;

        void validate() const;
    };

    struct Path
    {
        cd gain{1.0, 0.0};
        double aod = 0.0; // [0, 2pi)
        double aoa = 0.0; // [0, 2pi)
        bool is_los = false;
    };

    // LOS path first, NLOS paths in draw order.
    struct PathSet
    {
        std::vector<Path> paths;
        double path_loss = 1.0;

        std::size_t size() const { return paths.size(); }
        double total_power() const;
        double los_to_nlos_ratio() const; // +inf when there are no NLOS paths
    };

    enum class RicianMode
    {
        Fixed,  // LOS / total NLOS power equals k in every draw
        Uniform // ratio drawn per draw from Uniform(0, k]
    };

    enum class NlosProfile
    {
        EqualPower, // random phases, equal magnitudes
        Rayleigh    // i.i.d. circular Gaussian magnitudes, rescaled as a group
    };

    struct PathOptions
    {
        RicianMode rician_mode = RicianMode::Fixed;
        NlosProfile nlos_profile = NlosProfile::EqualPower;
    };

    // Element n equals exp(j * n * 2pi * (d / lambda) * sin(angle)). Throws std::domain_error
    // for a non-finite angle.
    cvec array_response(double angle, const ArrayConfig &cfg);

    // Draws L paths with unit total power. The LOS/NLOS power ratio follows opts.rician_mode;
    // angles are continuous and uniform on [0, 2pi).
    PathSet sample_paths(Rng &rng, int num_paths, double rician_k, const PathOptions &opts = {});

    // Replaces the LOS angles by the geometric bearings between the two nodes.
    void anchor_los(PathSet &paths, double aod, double aoa);

    // H = (1 / gamma) * sum_l mu_l p_ms(aoa_l) p_bs(aod_l)^H, sized N_MS x N_BS.
    cmat build_channel(const PathSet &paths, const ArrayConfig &bs, const ArrayConfig &ms);
}

#endif

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

#include "mmbeam/arrays_channel.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace mmbeam
{
    void ArrayConfig::validate() const
    {
        if (num_elements < 1)
            throw std::invalid_argument("ArrayConfig: num_elements must be >= 1, got " + std::to_string(num_elements));
        if (!(element_spacing_over_wavelength > 0.0) || !std::isfinite(element_spacing_over_wavelength))
            throw std::invalid_argument("ArrayConfig: element spacing must be a positive finite number");
    }

    double PathSet::total_power() const
    {
        double p = 0.0;
        for (const auto &path : paths)
            p += std::norm(path.gain);
        return p;
    }

    double PathSet::los_to_nlos_ratio() const
    {
        double los = 0.0, nlos = 0.0;
        for (const auto &path : paths)
            (path.is_los ? los : nlos) += std::norm(path.gain);
        if (nlos == 0.0)
            return std::numeric_limits<double>::infinity();
        return los / nlos;
    }

    cvec array_response(double angle, const ArrayConfig &cfg)
    {
        if (!std::isfinite(angle))
            throw std::domain_error("array_response: angle must be finite");
        cfg.validate();

        const double phase_step = kTwoPi * cfg.element_spacing_over_wavelength * std::sin(angle);
        cvec p(cfg.num_elements);
        for (int n = 0; n < cfg.num_elements; ++n)
            p(n) = std::polar(1.0, n * phase_step);
        return p;
    }

    PathSet sample_paths(Rng &rng, int num_paths, double rician_k, const PathOptions &opts)
    {
        if (num_paths < 1)
            throw std::domain_error("sample_paths: number of paths must be >= 1");
        if (!(rician_k > 0.0) || !std::isfinite(rician_k))
            throw std::domain_error("sample_paths: Rician factor must be positive and finite");

        PathSet set;
        set.paths.resize(static_cast<std::size_t>(num_paths));

        // Draw order: LOS phase, NLOS gains, (aod, aoa) per path, then the ratio.
        const double los_phase = uniform(rng, 0.0, kTwoPi);
        std::vector<cd> nlos(static_cast<std::size_t>(num_paths - 1));
        for (auto &g : nlos)
            g = complex_gaussian(rng, 1.0);

        for (auto &path : set.paths)
        {
            path.aod = uniform(rng, 0.0, kTwoPi);
            path.aoa = uniform(rng, 0.0, kTwoPi);
        }

        double k = rician_k;
        if (opts.rician_mode == RicianMode::Uniform)
            k = rician_k * (1.0 - uniform(rng, 0.0, 1.0)); // (0, k]

        set.paths[0].is_los = true;
        if (num_paths == 1)
        {
            set.paths[0].gain = std::polar(1.0, los_phase);
            return set;
        }

        const double nlos_total = 1.0 / (k + 1.0);
        const double los_power = k / (k + 1.0);
        set.paths[0].gain = std::polar(std::sqrt(los_power), los_phase);

        if (opts.nlos_profile == NlosProfile::EqualPower)
        {
            const double mag = std::sqrt(nlos_total / static_cast<double>(nlos.size()));
            for (std::size_t i = 0; i < nlos.size(); ++i)
                set.paths[i + 1].gain = std::polar(mag, std::arg(nlos[i]));
        }
        else
        {
            double drawn = 0.0;
            for (const auto &g : nlos)
                drawn += std::norm(g);
            const double scale = std::sqrt(nlos_total / drawn);
            for (std::size_t i = 0; i < nlos.size(); ++i)
                set.paths[i + 1].gain = nlos[i] * scale;
        }
        return set;
    }

    void anchor_los(PathSet &paths, double aod, double aoa)
    {
        if (paths.paths.empty() || !paths.paths.front().is_los)
            throw std::invalid_argument("anchor_los: path set has no leading LOS path");
        paths.paths.front().aod = wrap_angle(aod);
        paths.paths.front().aoa = wrap_angle(aoa);
    }

    cmat build_channel(const PathSet &paths, const ArrayConfig &bs, const ArrayConfig &ms)
    {
        if (!(paths.path_loss > 0.0))
            throw std::invalid_argument("build_channel: path loss must be positive");

        cmat h = cmat::Zero(ms.num_elements, bs.num_elements);
        for (const auto &path : paths.paths)
        {
            const cvec p_ms = array_response(path.aoa, ms);
            const cvec p_bs = array_response(path.aod, bs);
            h.noalias() += path.gain * p_ms * p_bs.adjoint();
        }
        return h / paths.path_loss;
    }
}

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

#ifndef MMBEAM_BEAM_DESIGN_HPP
#define MMBEAM_BEAM_DESIGN_HPP

#include "mmbeam/arrays_channel.hpp"
#include "mmbeam/codebook.hpp"
#include "mmbeam/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mmbeam
{
    // Measurement beam matrix, N_ant x M. Columns are the weights actually applied at the array:
    // a column w radiates p(angle)^H w towards angle, as in y = w_rx^H H w_tx.
    struct MeasurementBeams
    {
        cmat weights;
        std::optional<AngleIndexRange> covered_range; // empty: all directions

        int count() const { return static_cast<int>(weights.cols()); }
    };

    // Response of an applied weight vector towards an angle, p(angle)^H w.
    cd beam_response(const cvec &w, double angle, const ArrayConfig &cfg);

    // Splits a range into M contiguous sub-ranges in order; sizes differ by at most one and
    // the first (count mod M) sub-ranges carry the extra index.
    std::vector<AngleIndexRange> partition_range(const AngleIndexRange &range, int num_beams);

    // Least-squares fit of the response to 1 on the sector and 0 on the rest of the grid,
    // minimum-norm on rank deficiency, rescaled to squared norm N_ant.
    cvec design_sector_beam(std::span<const int> sector, const AngleGrid &grid, const ArrayConfig &cfg);

    MeasurementBeams build_sector_beams(const AngleIndexRange &range, int num_beams, const AngleGrid &grid,
                                        const ArrayConfig &cfg);

    // Steering beams at the given directions, squared norm N_ant each.
    MeasurementBeams steering_beams(std::span<const double> directions, const ArrayConfig &cfg);

    // M steering beams at directions drawn i.i.d. uniform on [0, 2pi).
    MeasurementBeams random_measurement_beams(int num_beams, const ArrayConfig &cfg, Rng &rng);

    // Number of sector beams so that each covers about indices_per_beam grid points.
    int sector_beam_count(const AngleIndexRange &range, int indices_per_beam);

    struct SectorContrast
    {
        double min_in = 0.0;      // min |response| over the sector
        double max_out = 0.0;     // max |response| outside sector and guard
        double mean_in_sq = 0.0;  // mean |response|^2 over the sector
        double mean_out_sq = 0.0; // mean |response|^2 outside sector and guard
        int out_count = 0;
    };

    // In-sector versus out-of-sector response on the grid. One guard index on each side of the
    // sector is skipped, and so is every out-of-sector grid angle whose steering vector coincides
    // with a sector or guard angle (the ULA cannot tell psi from pi - psi, nor, at half-wavelength
    // spacing, one endfire direction from the other).
    SectorContrast sector_contrast(const cvec &w, std::span<const int> sector, const AngleGrid &grid,
                                   const ArrayConfig &cfg);
}

#endif

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

#ifndef MMBEAM_GEOMETRY_HPP
#define MMBEAM_GEOMETRY_HPP

#include "mmbeam/codebook.hpp"
#include "mmbeam/common.hpp"

#include <vector>

namespace mmbeam
{
    struct Location
    {
        double x = 0.0; // m
        double y = 0.0; // m
    };

    enum class ErrorModel
    {
        OneSided, // per-axis offset ~ U[0, max_error]
        ZeroMean  // per-axis offset ~ U[-max_error, max_error]
    };

    struct LocalizationError
    {
        double max_error = 0.0; // m, per axis
        ErrorModel model = ErrorModel::OneSided;
    };

    // Contiguous run of grid indices, possibly wrapping through index 0.
    // lo > hi means the range wraps: {lo, ..., G-1, 0, ..., hi}.
    struct AngleIndexRange
    {
        int lo = 0;
        int hi = 0;
        int grid_size = 1;

        bool wraps() const { return lo > hi; }
        int count() const;
        bool contains(int index) const;
        int at(int offset) const { return (lo + offset) % grid_size; }
        std::vector<int> members() const;

        static AngleIndexRange full(int grid_size) { return {0, grid_size - 1, grid_size}; }
    };

    double distance(const Location &a, const Location &b);

    // Bearing from observer to target, wrapped to [0, 2pi).
    double bearing(const Location &observer, const Location &target);

    Location perturb_location(const Location &true_loc, const LocalizationError &err, Rng &rng);

    // Worst-case relative displacement of two nodes, each off by up to max_error per axis.
    double combined_error(const LocalizationError &bs_err, const LocalizationError &ms_err);

    // Grid indices compatible with the target lying anywhere in a disk of radius
    // combined_err around its estimate. Endpoints of [theta - beta, theta + beta] are rounded
    // outward to their nearest grid index, so the range contains every grid point inside the
    // interval and the nearest grid point of every bearing in it. Falls back to the full grid
    // when combined_err >= distance.
    AngleIndexRange angular_range(const Location &observer_est, const Location &target_est, double combined_err,
                                  const AngleGrid &grid);
}

#endif

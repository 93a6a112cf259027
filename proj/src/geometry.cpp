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

#include "mmbeam/geometry.hpp"

#include <stdexcept>

namespace mmbeam
{
    int AngleIndexRange::count() const
    {
        return ((hi - lo) % grid_size + grid_size) % grid_size + 1;
    }

    bool AngleIndexRange::contains(int index) const
    {
        if (index < 0 || index >= grid_size)
            return false;
        if (!wraps())
            return index >= lo && index <= hi;
        return index >= lo || index <= hi;
    }

    std::vector<int> AngleIndexRange::members() const
    {
        std::vector<int> out;
        const int n = count();
        out.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            out.push_back(at(k));
        return out;
    }

    double distance(const Location &a, const Location &b)
    {
        return std::hypot(b.x - a.x, b.y - a.y);
    }

    double bearing(const Location &observer, const Location &target)
    {
        return wrap_angle(std::atan2(target.y - observer.y, target.x - observer.x));
    }

    Location perturb_location(const Location &true_loc, const LocalizationError &err, Rng &rng)
    {
        if (!(err.max_error >= 0.0))
            throw std::invalid_argument("perturb_location: max_error must be >= 0");
        const double lo = err.model == ErrorModel::OneSided ? 0.0 : -err.max_error;
        const double dx = uniform(rng, lo, err.max_error);
        const double dy = uniform(rng, lo, err.max_error);
        return {true_loc.x + dx, true_loc.y + dy};
    }

    double combined_error(const LocalizationError &bs_err, const LocalizationError &ms_err)
    {
        return std::sqrt(2.0) * (bs_err.max_error + ms_err.max_error);
    }

    AngleIndexRange angular_range(const Location &observer_est, const Location &target_est, double combined_err,
                                  const AngleGrid &grid)
    {
        if (!(combined_err >= 0.0))
            throw std::domain_error("angular_range: combined error must be >= 0");

        const int g = grid.size();
        const double d = distance(observer_est, target_est);
        if (d == 0.0)
        {
            if (combined_err == 0.0)
                throw std::domain_error("angular_range: coincident locations with zero error, bearing undefined");
            return AngleIndexRange::full(g);
        }
        if (combined_err >= d)
            return AngleIndexRange::full(g);

        const double theta = bearing(observer_est, target_est);
        const double beta = std::asin(combined_err / d);

        // Unwrapped grid coordinates; rounding absorbs the last-bit error of asin at grid points.
        const long long lo = std::llround((theta - beta) / grid.step());
        const long long hi = std::llround((theta + beta) / grid.step());
        if (hi - lo + 1 >= g)
            return AngleIndexRange::full(g);

        auto wrap_index = [g](long long i) { return static_cast<int>(((i % g) + g) % g); };
        return {wrap_index(lo), wrap_index(hi), g};
    }
}

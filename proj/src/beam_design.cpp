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

#include "mmbeam/beam_design.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mmbeam
{
    namespace
    {
        // Rows are p(grid[u])^H, so (A w)(u) is the response towards grid[u].
        cmat response_operator(const AngleGrid &grid, const ArrayConfig &cfg)
        {
            cmat a(grid.size(), cfg.num_elements);
            for (int u = 0; u < grid.size(); ++u)
                a.row(u) = array_response(grid.angle(u), cfg).adjoint();
            return a;
        }

        cvec normalized(cvec w, int num_elements)
        {
            const double norm = w.norm();
            if (norm == 0.0)
                return cvec::Constant(num_elements, cd(1.0, 0.0));
            return w * (std::sqrt(static_cast<double>(num_elements)) / norm);
        }

        cvec solve_sector(const Eigen::CompleteOrthogonalDecomposition<cmat> &cod, std::span<const int> sector,
                          int grid_size, int num_elements)
        {
            cvec target = cvec::Zero(grid_size);
            for (int u : sector)
            {
                if (u < 0 || u >= grid_size)
                    throw std::domain_error("design_sector_beam: sector index outside the grid");
                target(u) = 1.0;
            }
            return normalized(cod.solve(target), num_elements);
        }
    }

    cd beam_response(const cvec &w, double angle, const ArrayConfig &cfg)
    {
        return array_response(angle, cfg).dot(w); // dot() conjugates its left operand
    }

    std::vector<AngleIndexRange> partition_range(const AngleIndexRange &range, int num_beams)
    {
        const int n = range.count();
        if (num_beams < 1)
            throw std::domain_error("partition_range: beam count must be >= 1");
        if (num_beams > n)
            throw std::domain_error("partition_range: beam count exceeds range size");

        std::vector<AngleIndexRange> parts;
        parts.reserve(static_cast<std::size_t>(num_beams));
        const int base = n / num_beams;
        const int extra = n % num_beams;
        int offset = 0;
        for (int m = 0; m < num_beams; ++m)
        {
            const int len = base + (m < extra ? 1 : 0);
            parts.push_back({range.at(offset), range.at(offset + len - 1), range.grid_size});
            offset += len;
        }
        return parts;
    }

    cvec design_sector_beam(std::span<const int> sector, const AngleGrid &grid, const ArrayConfig &cfg)
    {
        if (sector.empty())
            throw std::domain_error("design_sector_beam: empty sector");
        cfg.validate();
        const Eigen::CompleteOrthogonalDecomposition<cmat> cod(response_operator(grid, cfg));
        return solve_sector(cod, sector, grid.size(), cfg.num_elements);
    }

    MeasurementBeams build_sector_beams(const AngleIndexRange &range, int num_beams, const AngleGrid &grid,
                                        const ArrayConfig &cfg)
    {
        if (range.grid_size != grid.size())
            throw std::domain_error("build_sector_beams: range and grid sizes differ");
        cfg.validate();
        const auto parts = partition_range(range, num_beams);
        const Eigen::CompleteOrthogonalDecomposition<cmat> cod(response_operator(grid, cfg));

        MeasurementBeams beams;
        beams.weights.resize(cfg.num_elements, num_beams);
        beams.covered_range = range;
        for (int m = 0; m < num_beams; ++m)
        {
            const auto members = parts[static_cast<std::size_t>(m)].members();
            beams.weights.col(m) = solve_sector(cod, members, grid.size(), cfg.num_elements);
        }
        return beams;
    }

    MeasurementBeams steering_beams(std::span<const double> directions, const ArrayConfig &cfg)
    {
        if (directions.empty())
            throw std::domain_error("steering_beams: need at least one direction");
        MeasurementBeams beams;
        beams.weights.resize(cfg.num_elements, static_cast<Eigen::Index>(directions.size()));
        for (std::size_t m = 0; m < directions.size(); ++m)
            beams.weights.col(static_cast<Eigen::Index>(m)) = array_response(directions[m], cfg);
        return beams;
    }

    MeasurementBeams random_measurement_beams(int num_beams, const ArrayConfig &cfg, Rng &rng)
    {
        if (num_beams < 1)
            throw std::domain_error("random_measurement_beams: beam count must be >= 1");
        std::vector<double> directions(static_cast<std::size_t>(num_beams));
        for (auto &d : directions)
            d = uniform(rng, 0.0, kTwoPi);
        return steering_beams(directions, cfg);
    }

    int sector_beam_count(const AngleIndexRange &range, int indices_per_beam)
    {
        if (indices_per_beam < 1)
            throw std::domain_error("sector_beam_count: indices per beam must be >= 1");
        return (range.count() + indices_per_beam - 1) / indices_per_beam;
    }

    SectorContrast sector_contrast(const cvec &w, std::span<const int> sector, const AngleGrid &grid,
                                   const ArrayConfig &cfg)
    {
        const int g = grid.size();
        std::vector<char> role(static_cast<std::size_t>(g), 0); // 0 out, 1 sector, 2 guard
        for (int u : sector)
            role[static_cast<std::size_t>(u)] = 1;
        for (int u : sector)
            for (int nb : {(u + 1) % g, (u + g - 1) % g})
                if (role[static_cast<std::size_t>(nb)] == 0)
                    role[static_cast<std::size_t>(nb)] = 2;

        std::vector<cvec> covered;
        for (int u = 0; u < g; ++u)
            if (role[static_cast<std::size_t>(u)] != 0)
                covered.push_back(array_response(grid.angle(u), cfg));
        const double same_tol = 1e-9 * std::sqrt(static_cast<double>(cfg.num_elements));

        SectorContrast c;
        c.min_in = std::numeric_limits<double>::infinity();
        int in_count = 0;
        for (int u = 0; u < g; ++u)
        {
            const double mag = std::abs(beam_response(w, grid.angle(u), cfg));
            const auto r = role[static_cast<std::size_t>(u)];
            if (r == 1)
            {
                c.min_in = std::min(c.min_in, mag);
                c.mean_in_sq += mag * mag;
                ++in_count;
            }
            else if (r == 0)
            {
                const cvec p = array_response(grid.angle(u), cfg);
                const bool ambiguous = std::any_of(covered.begin(), covered.end(),
                                                   [&](const cvec &q) { return (p - q).norm() < same_tol; });
                if (ambiguous)
                    continue;
                c.max_out = std::max(c.max_out, mag);
                c.mean_out_sq += mag * mag;
                ++c.out_count;
            }
        }
        c.mean_in_sq /= std::max(in_count, 1);
        if (c.out_count > 0)
            c.mean_out_sq /= c.out_count;
        return c;
    }
}

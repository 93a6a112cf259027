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

#include "mmbeam/codebook.hpp"

#include <stdexcept>
#include <string>

namespace mmbeam
{
    namespace
    {
        void check_codebook_shape(int num_elements, int beam_count)
        {
            if (num_elements < 4 || num_elements % 4 != 0)
                throw std::domain_error("codebook: element count must be a positive multiple of 4, got " +
                                        std::to_string(num_elements));
            if (beam_count < 2 || beam_count % 2 != 0)
                throw std::domain_error("codebook: beam count must be a positive even number, got " +
                                        std::to_string(beam_count));
        }
    }

    cd codebook_weight(int n, int b, int num_elements, int beam_count)
    {
        check_codebook_shape(num_elements, beam_count);
        if (n < 0 || n >= num_elements || b < 0 || b >= beam_count)
            throw std::domain_error("codebook_weight: index out of range");

        const long long shifted = (b + beam_count / 2) % beam_count;
        const long long exponent = (static_cast<long long>(n) * shifted) / (num_elements / 4);
        switch (exponent % 4)
        {
        case 0:
            return {1.0, 0.0};
        case 1:
            return {0.0, 1.0};
        case 2:
            return {-1.0, 0.0};
        default:
            return {0.0, -1.0};
        }
    }

    Codebook build_codebook(int num_elements, int beam_count)
    {
        check_codebook_shape(num_elements, beam_count);
        Codebook cb;
        cb.weights.resize(num_elements, beam_count);
        for (int b = 0; b < beam_count; ++b)
            for (int n = 0; n < num_elements; ++n)
                cb.weights(n, b) = codebook_weight(n, b, num_elements, beam_count);
        return cb;
    }

    AngleGrid::AngleGrid(int size) : size_(size)
    {
        if (size < 1)
            throw std::domain_error("AngleGrid: size must be >= 1");
        angles_.resize(static_cast<std::size_t>(size));
        for (int u = 0; u < size; ++u)
            angles_[static_cast<std::size_t>(u)] = kTwoPi * u / size;
    }

    double AngleGrid::angle(int u) const
    {
        if (u < 0 || u >= size_)
            throw std::domain_error("AngleGrid: index out of range");
        return angles_[static_cast<std::size_t>(u)];
    }

    int AngleGrid::nearest_index(double angle) const
    {
        const long long idx = std::llround(wrap_angle(angle) / step());
        return static_cast<int>(idx % size_);
    }

    AngleGrid quantized_grid(int size)
    {
        return AngleGrid(size);
    }

    std::pair<int, int> Dictionary::column_pair(int index) const
    {
        const int g = grid.size();
        if (index < 0 || index >= g * g)
            throw std::domain_error("Dictionary: column index out of range");
        return {index / g, index % g};
    }

    Dictionary build_dictionary(const AngleGrid &grid, const ArrayConfig &bs, const ArrayConfig &ms)
    {
        Dictionary dict{grid, bs, ms, {}, {}, {}};
        const int g = grid.size();
        dict.bs_atoms.resize(bs.num_elements, g);
        dict.ms_atoms.resize(ms.num_elements, g);
        for (int u = 0; u < g; ++u)
        {
            dict.bs_atoms.col(u) = array_response(grid.angle(u), bs);
            dict.ms_atoms.col(u) = array_response(grid.angle(u), ms);
        }

        const int n_ms = ms.num_elements;
        dict.matrix.resize(static_cast<Eigen::Index>(bs.num_elements) * n_ms, static_cast<Eigen::Index>(g) * g);
        for (int u = 0; u < g; ++u)
            for (int v = 0; v < g; ++v)
            {
                auto column = dict.matrix.col(dict.column_index(u, v));
                for (int i = 0; i < bs.num_elements; ++i)
                    column.segment(i * n_ms, n_ms) = std::conj(dict.bs_atoms(i, u)) * dict.ms_atoms.col(v);
            }
        return dict;
    }
}

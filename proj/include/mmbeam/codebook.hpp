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

#ifndef MMBEAM_CODEBOOK_HPP
#define MMBEAM_CODEBOOK_HPP

#include "mmbeam/arrays_channel.hpp"
#include "mmbeam/common.hpp"

#include <utility>
#include <vector>

namespace mmbeam
{
    // Phase-quantized steering codebook: N antenna elements x B beams, entries in {1, j, -1, -j}.
    struct Codebook
    {
        cmat weights;

        int beam_count() const { return static_cast<int>(weights.cols()); }
        int num_elements() const { return static_cast<int>(weights.rows()); }
    };

    // Uniform angle grid, angles[u] = 2 pi u / size.
    class AngleGrid
    {
    public:
        explicit AngleGrid(int size);

        int size() const { return size_; }
        double step() const { return kTwoPi / size_; }
        double angle(int u) const;
        const std::vector<double> &angles() const { return angles_; }

        // Index of the grid point closest to an angle (circular distance).
        int nearest_index(double angle) const;

    private:
        int size_;
        std::vector<double> angles_;
    };

    // Kronecker-structured sparse basis for vec(H). Column u * G + v equals
    // kron(conj(p_bs(grid[u])), p_ms(grid[v])), where G is the grid size.
    struct Dictionary
    {
        AngleGrid grid;
        ArrayConfig bs;
        ArrayConfig ms;
        cmat bs_atoms; // N_BS x G, column u = p_bs(grid[u])
        cmat ms_atoms; // N_MS x G, column v = p_ms(grid[v])
        cmat matrix;   // N_BS * N_MS x G^2

        int column_index(int u, int v) const { return u * grid.size() + v; }
        std::pair<int, int> column_pair(int index) const;
    };

    // j ^ floor(n * mod(b + B/2, B) / (N/4)). Throws std::domain_error for out-of-range
    // indices, N not divisible by 4, or odd B.
    cd codebook_weight(int n, int b, int num_elements, int beam_count);

    Codebook build_codebook(int num_elements, int beam_count);

    AngleGrid quantized_grid(int size);

    Dictionary build_dictionary(const AngleGrid &grid, const ArrayConfig &bs, const ArrayConfig &ms);
}

#endif

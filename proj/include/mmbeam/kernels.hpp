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

#ifndef MMBEAM_KERNELS_HPP
#define MMBEAM_KERNELS_HPP

#include "mmbeam/common.hpp"

#include <vector>

namespace mmbeam::kernels
{
    // phi^H r. The serial form is the reference the parallel form is tested against.
    cvec correlate_serial(const cmat &phi, const cvec &r);
    cvec correlate_parallel(const cmat &phi, const cvec &r);

    // Index of max(score[k] / norm[k]) over eligible columns, ties to the lowest index;
    // -1 when nothing is eligible or every score is zero.
    Eigen::Index select_atom(const Eigen::VectorXd &score, const Eigen::VectorXd &norm,
                             const std::vector<char> &excluded);

    struct BeamPair
    {
        int tx = 0;
        int rx = 0;
        double power = -1.0; // |w_rx^H H w_tx|^2
    };

    // Exhaustive scan of all beam pairs; ties go to the lexicographically smallest (tx, rx).
    BeamPair best_pair_serial(const cmat &channel, const cmat &tx_weights, const cmat &rx_weights);
    BeamPair best_pair_parallel(const cmat &channel, const cmat &tx_weights, const cmat &rx_weights);

    // |w_rx^H (H w_tx)|^2, the shared arithmetic of every gain evaluation.
    inline double pair_power(const cvec &h_tx, const cvec &w_rx)
    {
        return std::norm(w_rx.dot(h_tx));
    }
}

#endif

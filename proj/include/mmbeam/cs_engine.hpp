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

#ifndef MMBEAM_CS_ENGINE_HPP
#define MMBEAM_CS_ENGINE_HPP

#include "mmbeam/beam_design.hpp"
#include "mmbeam/codebook.hpp"
#include "mmbeam/common.hpp"

#include <utility>
#include <vector>

namespace mmbeam
{
    struct SparseEstimate
    {
        std::vector<int> support; // selection order
        cvec gains;               // aligned with support
        double residual_norm = 0.0;
        std::vector<double> residual_history; // ||r|| after each selection
    };

    // Phi = kron(tx_factor, rx_factor) with
    //   tx_factor = sqrt(P) W_tx^T conj(P_bs)   (M_tx x G)
    //   rx_factor = W_rx^H P_ms                 (M_rx x G)
    // so column u * G + v of Phi is kron(tx_factor.col(u), rx_factor.col(v)).
    struct KroneckerSensing
    {
        cmat tx_factor;
        cmat rx_factor;

        Eigen::Index rows() const { return tx_factor.rows() * rx_factor.rows(); }
        Eigen::Index cols() const { return tx_factor.cols() * rx_factor.cols(); }
        cvec column(Eigen::Index index) const;
        cmat dense() const;
    };

    // vec(sqrt(P) W_rx^H H W_tx) + vec(W_rx^H N), column-major, N with i.i.d. CN(0, sigma^2)
    // entries and one column per TX beam.
    cvec simulate_measurements(const cmat &channel, const MeasurementBeams &tx, const MeasurementBeams &rx,
                               double tx_power, double noise_sigma, Rng &rng);

    // sqrt(P) (W_tx^T kron W_rx^H) T_D, formed densely.
    cmat build_sensing_matrix(const MeasurementBeams &tx, const MeasurementBeams &rx, const Dictionary &dict,
                              double tx_power);

    KroneckerSensing build_kronecker_sensing(const MeasurementBeams &tx, const MeasurementBeams &rx,
                                             const Dictionary &dict, double tx_power);

    // Orthogonal matching pursuit. Picks the column with the largest |phi_k^H r| / ||phi_k||
    // (ties to the lowest index), refits least squares on the support and stops after
    // max_sparsity picks or once ||r|| <= residual_tol * ||y||.
    SparseEstimate omp(const cmat &phi, const cvec &y, int max_sparsity, double residual_tol);

    // Same algorithm on a Kronecker-structured sensing matrix without forming it.
    SparseEstimate omp(const KroneckerSensing &phi, const cvec &y, int max_sparsity, double residual_tol);

    // Inverse of the dictionary column order: index -> (grid[u], grid[v]) with u = index / G.
    std::pair<double, double> support_to_angles(int index, const AngleGrid &grid);
}

#endif

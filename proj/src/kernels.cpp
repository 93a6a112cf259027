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

#include "mmbeam/kernels.hpp"

#include <stdexcept>

namespace mmbeam::kernels
{
    cvec correlate_serial(const cmat &phi, const cvec &r)
    {
        cvec out(phi.cols());
        for (Eigen::Index k = 0; k < phi.cols(); ++k)
            out(k) = phi.col(k).dot(r);
        return out;
    }

    cvec correlate_parallel(const cmat &phi, const cvec &r)
    {
        cvec out(phi.cols());
        const Eigen::Index cols = phi.cols();
#pragma omp parallel for schedule(static)
        for (Eigen::Index k = 0; k < cols; ++k)
            out(k) = phi.col(k).dot(r);
        return out;
    }

    Eigen::Index select_atom(const Eigen::VectorXd &score, const Eigen::VectorXd &norm,
                             const std::vector<char> &excluded)
    {
        Eigen::Index best = -1;
        double best_value = 0.0;
        for (Eigen::Index k = 0; k < score.size(); ++k)
        {
            if (excluded[static_cast<std::size_t>(k)] || norm(k) <= 0.0)
                continue;
            const double value = score(k) / norm(k);
            if (value > best_value)
            {
                best_value = value;
                best = k;
            }
        }
        return best;
    }

    namespace
    {
        void check_shapes(const cmat &channel, const cmat &tx_weights, const cmat &rx_weights)
        {
            if (tx_weights.rows() != channel.cols() || rx_weights.rows() != channel.rows())
                throw std::domain_error("best_pair: beam and channel dimensions differ");
            if (tx_weights.cols() == 0 || rx_weights.cols() == 0)
                throw std::domain_error("best_pair: empty codebook");
        }

        // Scans tx in [tx_begin, tx_end) in lexicographic order with a strict comparison.
        BeamPair scan(const cmat &channel, const cmat &tx_weights, const cmat &rx_weights, Eigen::Index tx_begin,
                      Eigen::Index tx_end)
        {
            BeamPair best;
            cvec w_rx;
            for (Eigen::Index t = tx_begin; t < tx_end; ++t)
            {
                const cvec w_tx = tx_weights.col(t);
                const cvec h_tx = channel * w_tx;
                for (Eigen::Index r = 0; r < rx_weights.cols(); ++r)
                {
                    w_rx = rx_weights.col(r);
                    const double power = pair_power(h_tx, w_rx);
                    if (power > best.power)
                        best = {static_cast<int>(t), static_cast<int>(r), power};
                }
            }
            return best;
        }
    }

    BeamPair best_pair_serial(const cmat &channel, const cmat &tx_weights, const cmat &rx_weights)
    {
        check_shapes(channel, tx_weights, rx_weights);
        return scan(channel, tx_weights, rx_weights, 0, tx_weights.cols());
    }

    BeamPair best_pair_parallel(const cmat &channel, const cmat &tx_weights, const cmat &rx_weights)
    {
        check_shapes(channel, tx_weights, rx_weights);
        const Eigen::Index n_tx = tx_weights.cols();
        std::vector<BeamPair> per_tx(static_cast<std::size_t>(n_tx));
#pragma omp parallel for schedule(static)
        for (Eigen::Index t = 0; t < n_tx; ++t)
            per_tx[static_cast<std::size_t>(t)] = scan(channel, tx_weights, rx_weights, t, t + 1);

        // Merge in tx order so ties resolve exactly as in the serial scan.
        BeamPair best;
        for (const auto &candidate : per_tx)
            if (candidate.power > best.power)
                best = candidate;
        return best;
    }
}

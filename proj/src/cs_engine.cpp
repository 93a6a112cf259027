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

#include "mmbeam/cs_engine.hpp"
#include "mmbeam/kernels.hpp"

#include <stdexcept>
#include <string>

namespace mmbeam
{
    namespace
    {
        void check_beams(Eigen::Index tx_rows, Eigen::Index rx_rows, const MeasurementBeams &tx,
                         const MeasurementBeams &rx, const char *who)
        {
            if (tx.weights.rows() != tx_rows || rx.weights.rows() != rx_rows)
                throw std::domain_error(std::string(who) + ": beam and array dimensions differ");
            if (tx.weights.cols() == 0 || rx.weights.cols() == 0)
                throw std::domain_error(std::string(who) + ": empty measurement beam set");
        }

        // Shared OMP driver. `correlate` fills |phi^H r| for every column, `column` returns
        // one column of phi.
        template <typename Correlate, typename Column>
        SparseEstimate run_omp(Eigen::Index rows, const Eigen::VectorXd &column_norms, const cvec &y,
                               int max_sparsity, double residual_tol, Correlate &&correlate, Column &&column)
        {
            if (rows == 0 || column_norms.size() == 0)
                throw std::domain_error("omp: empty sensing matrix");
            if (y.size() != rows)
                throw std::domain_error("omp: measurement length differs from sensing matrix rows");
            if (!(residual_tol >= 0.0))
                throw std::domain_error("omp: residual tolerance must be >= 0");
            if (max_sparsity < 0)
                throw std::domain_error("omp: sparsity bound must be >= 0");

            SparseEstimate est;
            est.gains.resize(0);
            const double y_norm = y.norm();
            est.residual_norm = y_norm;
            if (y_norm == 0.0)
                return est;

            // Columns with negligible energy carry no usable direction.
            const double floor = 1e-12 * column_norms.maxCoeff();
            Eigen::VectorXd norms = column_norms;
            for (Eigen::Index k = 0; k < norms.size(); ++k)
                if (norms(k) <= floor)
                    norms(k) = 0.0;

            std::vector<char> excluded(static_cast<std::size_t>(norms.size()), 0);
            cvec residual = y;
            cmat selected(rows, 0);
            Eigen::VectorXd score;
            while (static_cast<int>(est.support.size()) < max_sparsity && est.residual_norm > residual_tol * y_norm)
            {
                correlate(residual, score);
                const Eigen::Index pick = kernels::select_atom(score, norms, excluded);
                if (pick < 0)
                    break;
                excluded[static_cast<std::size_t>(pick)] = 1;
                est.support.push_back(static_cast<int>(pick));

                selected.conservativeResize(Eigen::NoChange, selected.cols() + 1);
                selected.col(selected.cols() - 1) = column(pick);

                const Eigen::CompleteOrthogonalDecomposition<cmat> cod(selected);
                est.gains = cod.solve(y);
                residual = y - selected * est.gains;
                est.residual_norm = residual.norm();
                est.residual_history.push_back(est.residual_norm);
            }
            return est;
        }
    }

    cvec KroneckerSensing::column(Eigen::Index index) const
    {
        const Eigen::Index g_rx = rx_factor.cols();
        const Eigen::Index u = index / g_rx, v = index % g_rx;
        const Eigen::Index m_rx = rx_factor.rows();
        cvec c(rows());
        for (Eigen::Index i = 0; i < tx_factor.rows(); ++i)
            c.segment(i * m_rx, m_rx) = tx_factor(i, u) * rx_factor.col(v);
        return c;
    }

    cmat KroneckerSensing::dense() const
    {
        cmat out(rows(), cols());
        for (Eigen::Index k = 0; k < cols(); ++k)
            out.col(k) = column(k);
        return out;
    }

    cvec simulate_measurements(const cmat &channel, const MeasurementBeams &tx, const MeasurementBeams &rx,
                               double tx_power, double noise_sigma, Rng &rng)
    {
        check_beams(channel.cols(), channel.rows(), tx, rx, "simulate_measurements");
        if (!(tx_power >= 0.0) || !(noise_sigma >= 0.0))
            throw std::domain_error("simulate_measurements: power and noise must be >= 0");

        cmat y = std::sqrt(tx_power) * (rx.weights.adjoint() * channel * tx.weights);
        if (noise_sigma > 0.0)
        {
            cmat noise(channel.rows(), tx.weights.cols());
            for (Eigen::Index c = 0; c < noise.cols(); ++c)
                for (Eigen::Index r = 0; r < noise.rows(); ++r)
                    noise(r, c) = complex_gaussian(rng, noise_sigma);
            y.noalias() += rx.weights.adjoint() * noise;
        }
        return y.reshaped(); // column-major
    }

    cmat build_sensing_matrix(const MeasurementBeams &tx, const MeasurementBeams &rx, const Dictionary &dict,
                              double tx_power)
    {
        check_beams(dict.bs.num_elements, dict.ms.num_elements, tx, rx, "build_sensing_matrix");
        if (!(tx_power >= 0.0))
            throw std::domain_error("build_sensing_matrix: power must be >= 0");

        const Eigen::Index m_tx = tx.weights.cols(), m_rx = rx.weights.cols();
        const Eigen::Index n_bs = tx.weights.rows(), n_ms = rx.weights.rows();
        // kron(W_tx^T, W_rx^H), row i * M_rx + j, column a * N_MS + b
        cmat kron(m_tx * m_rx, n_bs * n_ms);
        const cmat rx_h = rx.weights.adjoint();
        for (Eigen::Index i = 0; i < m_tx; ++i)
            for (Eigen::Index a = 0; a < n_bs; ++a)
                kron.block(i * m_rx, a * n_ms, m_rx, n_ms) = tx.weights(a, i) * rx_h;
        return std::sqrt(tx_power) * (kron * dict.matrix);
    }

    KroneckerSensing build_kronecker_sensing(const MeasurementBeams &tx, const MeasurementBeams &rx,
                                             const Dictionary &dict, double tx_power)
    {
        check_beams(dict.bs.num_elements, dict.ms.num_elements, tx, rx, "build_kronecker_sensing");
        if (!(tx_power >= 0.0))
            throw std::domain_error("build_kronecker_sensing: power must be >= 0");
        return {std::sqrt(tx_power) * (tx.weights.transpose() * dict.bs_atoms.conjugate()),
                rx.weights.adjoint() * dict.ms_atoms};
    }

    SparseEstimate omp(const cmat &phi, const cvec &y, int max_sparsity, double residual_tol)
    {
        const Eigen::VectorXd norms = phi.colwise().norm().transpose();
        return run_omp(
            phi.rows(), norms, y, max_sparsity, residual_tol,
            [&phi](const cvec &r, Eigen::VectorXd &score) { score = kernels::correlate_parallel(phi, r).cwiseAbs(); },
            [&phi](Eigen::Index k) { return cvec(phi.col(k)); });
    }

    SparseEstimate omp(const KroneckerSensing &phi, const cvec &y, int max_sparsity, double residual_tol)
    {
        const Eigen::VectorXd tx_norms = phi.tx_factor.colwise().norm().transpose();
        const Eigen::VectorXd rx_norms = phi.rx_factor.colwise().norm().transpose();
        Eigen::VectorXd norms(phi.cols());
        for (Eigen::Index u = 0; u < tx_norms.size(); ++u)
            norms.segment(u * rx_norms.size(), rx_norms.size()) = tx_norms(u) * rx_norms;

        const cmat tx_conj = phi.tx_factor.conjugate();
        return run_omp(
            phi.rows(), norms, y, max_sparsity, residual_tol,
            [&](const cvec &r, Eigen::VectorXd &score) {
                // phi^H r = vec(B^H R conj(A)) with R the M_rx x M_tx reshape of r.
                const auto r_mat = r.reshaped(phi.rx_factor.rows(), phi.tx_factor.rows());
                const cmat c = phi.rx_factor.adjoint() * (r_mat * tx_conj);
                score = c.reshaped().cwiseAbs();
            },
            [&phi](Eigen::Index k) { return phi.column(k); });
    }

    std::pair<double, double> support_to_angles(int index, const AngleGrid &grid)
    {
        const int g = grid.size();
        if (index < 0 || index >= g * g)
            throw std::domain_error("support_to_angles: index out of range");
        return {grid.angle(index / g), grid.angle(index % g)};
    }
}

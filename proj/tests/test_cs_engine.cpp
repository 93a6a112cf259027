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

#include <catch_amalgamated.hpp>

#include "mmbeam/cs_engine.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace mmbeam;
using Catch::Matchers::WithinAbs;

namespace
{
    cmat gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng)
    {
        cmat m(rows, cols);
        for (Eigen::Index i = 0; i < m.size(); ++i)
            m.data()[i] = complex_gaussian(rng, 1.0);
        return m;
    }

    MeasurementBeams beams_from(const cmat &w)
    {
        return {w, std::nullopt};
    }

    // On-grid channel and its sparse coefficient vector in the dictionary basis.
    struct OnGrid
    {
        cmat channel;
        cvec z;
        std::vector<int> support;
    };

    OnGrid on_grid_channel(const Dictionary &d, int paths, Rng &rng)
    {
        OnGrid out{cmat::Zero(d.ms.num_elements, d.bs.num_elements), cvec::Zero(d.matrix.cols()), {}};
        PathSet s;
        std::set<int> used;
        while (static_cast<int>(used.size()) < paths)
        {
            const int u = static_cast<int>(rng() % d.grid.size()), v = static_cast<int>(rng() % d.grid.size());
            if (!used.insert(d.column_index(u, v)).second)
                continue;
            const cd mu = std::polar(uniform(rng, 0.5, 1.5), uniform(rng, 0.0, kTwoPi));
            s.paths.push_back({mu, d.grid.angle(u), d.grid.angle(v), s.paths.empty()});
            out.z(d.column_index(u, v)) = mu;
            out.support.push_back(d.column_index(u, v));
        }
        out.channel = build_channel(s, d.bs, d.ms);
        return out;
    }

    // Dictionary columns identical up to the psi / pi - psi ambiguity of a ULA are the same atom.
    bool same_atom(const cmat &phi, int a, int b)
    {
        return (phi.col(a) - phi.col(b)).norm() <= 1e-9 * phi.col(a).norm();
    }

    bool same_support_up_to_atoms(const cmat &phi, std::vector<int> got, const std::vector<int> &want)
    {
        if (got.size() != want.size())
            return false;
        for (int w : want)
        {
            auto it = std::find_if(got.begin(), got.end(), [&](int g) { return same_atom(phi, g, w); });
            if (it == got.end())
                return false;
            got.erase(it);
        }
        return true;
    }
}

TEST_CASE("simulate_measurements - examples")
{
    Rng rng(20);
    const ArrayConfig cfg{8, 0.5};
    SECTION("zero channel, no noise")
    {
        const auto tx = beams_from(gaussian_matrix(8, 3, rng));
        const auto rx = beams_from(gaussian_matrix(8, 2, rng));
        const cvec y = simulate_measurements(cmat::Zero(8, 8), tx, rx, 1.0, 0.0, rng);
        CHECK(y.size() == 6);
        CHECK(y.norm() == 0.0);
    }
    SECTION("single beams give the scalar sqrt(P) w_rx^H H w_tx")
    {
        const cmat h = gaussian_matrix(8, 8, rng);
        const cvec wt = gaussian_matrix(8, 1, rng), wr = gaussian_matrix(8, 1, rng);
        const cvec y = simulate_measurements(h, beams_from(wt), beams_from(wr), 2.0, 0.0, rng);
        REQUIRE(y.size() == 1);
        cd expected = 0.0;
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c)
                expected += std::conj(wr(r)) * h(r, c) * wt(c);
        CHECK(std::abs(y(0) - std::sqrt(2.0) * expected) < 1e-12);
    }
    SECTION("entry order is column-major over (rx beam, tx beam)")
    {
        const cmat h = gaussian_matrix(8, 8, rng);
        const cmat wt = gaussian_matrix(8, 3, rng), wr = gaussian_matrix(8, 2, rng);
        const cvec y = simulate_measurements(h, beams_from(wt), beams_from(wr), 1.0, 0.0, rng);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(std::abs(y(i * 2 + j) - (wr.col(j).adjoint() * h * wt.col(i))(0)) < 1e-12);
    }
    SECTION("noise statistics: E|n|^2 = sigma^2 ||w_rx||^2")
    {
        const double dir[] = {0.3};
        const auto tx = steering_beams(dir, cfg), rx = steering_beams(dir, cfg);
        double power = 0.0;
        const int draws = 20000;
        for (int i = 0; i < draws; ++i)
            power += simulate_measurements(cmat::Zero(8, 8), tx, rx, 1.0, 0.5, rng).squaredNorm();
        CHECK_THAT(power / draws, WithinAbs(0.25 * 8.0, 0.1));
    }
    SECTION("dimension mismatch")
    {
        CHECK_THROWS_AS(simulate_measurements(cmat::Zero(8, 8), beams_from(cmat::Ones(4, 1)),
                                              beams_from(cmat::Ones(8, 1)), 1.0, 0.0, rng),
                        std::domain_error);
    }
}

TEST_CASE("build_sensing_matrix - examples")
{
    const Dictionary d = build_dictionary(AngleGrid(16), {8, 0.5}, {8, 0.5});
    const auto ones = beams_from(cmat::Ones(8, 1));
    SECTION("all-ones beams against column (0, 0)")
    {
        const cmat phi = build_sensing_matrix(ones, ones, d, 4.0);
        CHECK(std::abs(phi(0, 0) - cd(2.0 * 64.0, 0.0)) < 1e-10);
    }
    SECTION("zero power")
    {
        CHECK(build_sensing_matrix(ones, ones, d, 0.0).norm() == 0.0);
    }
    SECTION("shape")
    {
        Rng rng(21);
        const auto tx = random_measurement_beams(4, d.bs, rng), rx = random_measurement_beams(4, d.ms, rng);
        const cmat phi = build_sensing_matrix(tx, rx, d, 1.0);
        CHECK(phi.rows() == 16);
        CHECK(phi.cols() == 256);
    }
    SECTION("matches the explicit Kronecker product")
    {
        Rng rng(22);
        const auto tx = beams_from(gaussian_matrix(8, 3, rng)), rx = beams_from(gaussian_matrix(8, 5, rng));
        const cmat expected = std::sqrt(3.0) * oracle::kron(tx.weights.transpose(), rx.weights.adjoint()) * d.matrix;
        const cmat phi = build_sensing_matrix(tx, rx, d, 3.0);
        CHECK((phi - expected).norm() <= 1e-12 * expected.norm());
        CHECK((build_kronecker_sensing(tx, rx, d, 3.0).dense() - expected).norm() <= 1e-12 * expected.norm());
    }
}

TEST_CASE("measurements agree with the sparse model on on-grid channels")
{
    Rng rng(23);
    const Dictionary d = build_dictionary(AngleGrid(16), {8, 0.5}, {8, 0.5});
    for (int trial = 0; trial < 100; ++trial)
    {
        const OnGrid ch = on_grid_channel(d, 1 + trial % 4, rng);
        const int m_tx = 1 + static_cast<int>(rng() % 6), m_rx = 1 + static_cast<int>(rng() % 6);
        const auto tx = beams_from(gaussian_matrix(8, m_tx, rng));
        const auto rx = beams_from(gaussian_matrix(8, m_rx, rng));
        const double p = uniform(rng, 0.1, 4.0);
        const cvec y = simulate_measurements(ch.channel, tx, rx, p, 0.0, rng);
        const cmat phi = build_sensing_matrix(tx, rx, d, p);
        CHECK((y - phi * ch.z).norm() <= 1e-9 * std::max(1.0, y.norm()));
    }

    // Full dictionary steering pairs as the measurement beams.
    const auto tx = beams_from(d.bs_atoms), rx = beams_from(d.ms_atoms);
    const OnGrid ch = on_grid_channel(d, 1, rng);
    const cvec y = simulate_measurements(ch.channel, tx, rx, 1.0, 0.0, rng);
    CHECK((y - build_sensing_matrix(tx, rx, d, 1.0) * ch.z).norm() <= 1e-10 * y.norm());
}

TEST_CASE("omp - examples")
{
    Rng rng(24);
    const cmat phi = gaussian_matrix(16, 64, rng);
    SECTION("zero measurement")
    {
        const auto est = omp(phi, cvec::Zero(16), 4, 1e-3);
        CHECK(est.support.empty());
        CHECK(est.residual_norm == 0.0);
    }
    SECTION("single scaled column")
    {
        const cvec y = 3.5 * phi.col(7);
        const auto est = omp(phi, y, 1, 1e-3);
        REQUIRE(est.support == std::vector<int>{7});
        CHECK(std::abs(est.gains(0) - cd(3.5, 0.0)) < 1e-12);
        CHECK(est.residual_norm < 1e-12);
        const auto brute = oracle::best_subset(phi, y, 1);
        CHECK(brute.support == est.support);
    }
    SECTION("stops early once the residual is small")
    {
        const cvec y = phi.col(3) - 2.0 * phi.col(40);
        const auto est = omp(phi, y, 10, 1e-6);
        CHECK(est.support.size() == 2);
    }
    SECTION("sparsity bound zero")
    {
        CHECK(omp(phi, phi.col(0), 0, 0.0).support.empty());
    }
    SECTION("errors")
    {
        CHECK_THROWS_AS(omp(phi, cvec::Zero(15), 2, 1e-3), std::domain_error);
        CHECK_THROWS_AS(omp(phi, cvec::Zero(16), 2, -1.0), std::domain_error);
        CHECK_THROWS_AS(omp(cmat(0, 0), cvec(0), 2, 1e-3), std::domain_error);
    }
    SECTION("rank-deficient support gives a minimum-norm fit, not an error")
    {
        cmat dup = phi;
        dup.col(1) = dup.col(0);
        const auto est = omp(dup, dup.col(0) + dup.col(2), 3, 0.0);
        CHECK(est.residual_norm < 1e-10 * dup.col(0).norm());
    }
}

TEST_CASE("omp - 2-sparse recovery matches exhaustive subset search")
{
    Rng rng(25);
    int agree = 0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t)
    {
        const cmat phi = gaussian_matrix(16, 64, rng);
        const int a = static_cast<int>(rng() % 64);
        int b = static_cast<int>(rng() % 64);
        while (b == a)
            b = static_cast<int>(rng() % 64);
        const cvec y = complex_gaussian(rng, 1.0) * phi.col(a) + complex_gaussian(rng, 1.0) * phi.col(b);
        auto est = omp(phi, y, 2, 0.0);
        auto brute = oracle::best_subset(phi, y, 2);
        std::sort(est.support.begin(), est.support.end());
        agree += est.support == brute.support && brute.support == std::vector<int>{std::min(a, b), std::max(a, b)};
    }
    CHECK(agree >= 99);
}

TEST_CASE("omp - selection ignores column scaling")
{
    Rng rng(26);
    for (int t = 0; t < 50; ++t)
    {
        const cmat phi = gaussian_matrix(20, 40, rng);
        cmat scaled = phi;
        scaled.col(5) *= 10.0;
        const cvec y = gaussian_matrix(20, 1, rng);
        CHECK(omp(phi, y, 4, 0.0).support == omp(scaled, y, 4, 0.0).support);
        const cvec own = phi.col(5) * cd(0.3, -1.2);
        CHECK(omp(phi, own, 1, 0.0).support == std::vector<int>{5});
        CHECK(omp(scaled, own, 1, 0.0).support == std::vector<int>{5});
    }
}

TEST_CASE("omp - residual is non-increasing")
{
    Rng rng(27);
    for (int t = 0; t < 100; ++t)
    {
        const cmat phi = gaussian_matrix(12, 30, rng);
        const cvec y = gaussian_matrix(12, 1, rng);
        const auto est = omp(phi, y, 8, 0.0);
        REQUIRE(est.residual_history.size() == est.support.size());
        double previous = y.norm();
        for (double r : est.residual_history)
        {
            CHECK(r <= previous * (1 + 1e-12));
            previous = r;
        }
        std::set<int> distinct(est.support.begin(), est.support.end());
        CHECK(distinct.size() == est.support.size());
        CHECK(est.support.size() <= 8);
    }
}

TEST_CASE("omp - dense and Kronecker-factored forms agree")
{
    Rng rng(28);
    // Odd grid: no two atoms coincide, so selection cannot hinge on rounding between twins.
    const Dictionary d = build_dictionary(AngleGrid(25), {8, 0.5}, {8, 0.5});
    for (int t = 0; t < 30; ++t)
    {
        const auto tx = random_measurement_beams(5, d.bs, rng), rx = random_measurement_beams(6, d.ms, rng);
        const OnGrid ch = on_grid_channel(d, 3, rng);
        const cvec y = simulate_measurements(ch.channel, tx, rx, 1.0, 0.05, rng);
        const auto dense = omp(build_sensing_matrix(tx, rx, d, 1.0), y, 3, 1e-3);
        const auto fact = omp(build_kronecker_sensing(tx, rx, d, 1.0), y, 3, 1e-3);
        CHECK(dense.support == fact.support);
        REQUIRE(dense.gains.size() == fact.gains.size());
        CHECK((dense.gains - fact.gains).norm() <= 1e-8 * std::max(1.0, dense.gains.norm()));
        CHECK_THAT(dense.residual_norm, WithinAbs(fact.residual_norm, 1e-8 * y.norm()));
    }
}

namespace
{
    // Fraction of trials whose 2-path support is recovered, random steering beams on both sides.
    int recovery_count(int grid_size, int beams, double sigma, int trials, Rng &rng)
    {
        const Dictionary d = build_dictionary(AngleGrid(grid_size), {8, 0.5}, {8, 0.5});
        const int paths = 2;
        int recovered = 0;
        for (int t = 0; t < trials; ++t)
        {
            const auto tx = random_measurement_beams(beams, d.bs, rng);
            const auto rx = random_measurement_beams(beams, d.ms, rng);
            REQUIRE(tx.count() * rx.count() >= 8 * paths);
            const OnGrid ch = on_grid_channel(d, paths, rng);
            const cvec y = simulate_measurements(ch.channel, tx, rx, 1.0, sigma, rng);
            const auto est = omp(build_sensing_matrix(tx, rx, d, 1.0), y, paths, 1e-3);
            recovered += same_support_up_to_atoms(d.matrix, est.support, ch.support);
        }
        return recovered;
    }
}

TEST_CASE("omp - support recovery at 20 dB on on-grid channels")
{
    Rng rng(29);
    const double sigma = 0.1; // P / sigma^2 = 20 dB
    SECTION("resolvable grid, 8 x 8 beams")
    {
        CHECK(recovery_count(8, 8, sigma, 200, rng) >= 190);
    }
    SECTION("regression floor: 16-point grid at the minimum of 16 rows")
    {
        // Atoms a few degrees apart are strongly coherent for 8 elements; measured 143 / 200.
        CHECK(recovery_count(16, 4, sigma, 200, rng) >= 130);
    }
}

TEST_CASE("support_to_angles")
{
    const AngleGrid g16(16);
    CHECK(support_to_angles(0, g16) == std::pair<double, double>{0.0, 0.0});
    const auto [aod, aoa] = support_to_angles(17, g16);
    CHECK_THAT(aod, WithinAbs(kPi / 8, 1e-15));
    CHECK_THAT(aoa, WithinAbs(kPi / 8, 1e-15));
    const Dictionary d = build_dictionary(g16, {4, 0.5}, {4, 0.5});
    for (int idx = 0; idx < 256; ++idx)
    {
        const auto [u, v] = d.column_pair(idx);
        const auto angles = support_to_angles(idx, g16);
        CHECK(angles.first == g16.angle(u));
        CHECK(angles.second == g16.angle(v));
        CHECK(d.column_index(g16.nearest_index(angles.first), g16.nearest_index(angles.second)) == idx);
    }
    CHECK_THROWS_AS(support_to_angles(256, g16), std::domain_error);
    CHECK_THROWS_AS(support_to_angles(-1, g16), std::domain_error);
}

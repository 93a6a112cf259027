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

#ifndef MMBEAM_COMMON_HPP
#define MMBEAM_COMMON_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace mmbeam
{
    using cd = std::complex<double>;
    using cvec = Eigen::VectorXcd;
    using cmat = Eigen::MatrixXcd;

    inline constexpr double kPi = std::numbers::pi;
    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

    // Every stochastic operation takes an explicit stream of this type.
    using Rng = std::mt19937_64;

    // Wraps a finite angle into [0, 2pi).
    inline double wrap_angle(double angle)
    {
        double a = std::fmod(angle, kTwoPi);
        if (a < 0.0)
            a += kTwoPi;
        if (a >= kTwoPi) // fmod of tiny negatives can round up to 2pi
            a = 0.0;
        return a;
    }

    // splitmix64 finalizer; used to derive independent per-trial streams.
    inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
    {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw on [lo, hi). Implemented here rather than through
    // std::uniform_real_distribution so sample streams do not depend on the
    // standard library vendor.
    inline double uniform(Rng &rng, double lo, double hi)
    {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // Circular complex Gaussian with E|z|^2 = sigma^2 (Box-Muller).
    inline cd complex_gaussian(Rng &rng, double sigma)
    {
        double u1 = uniform(rng, 0.0, 1.0);
        while (u1 <= 0.0)
            u1 = uniform(rng, 0.0, 1.0);
        const double u2 = uniform(rng, 0.0, 1.0);
        const double r = std::sqrt(-std::log(u1)) * sigma; // |z|^2 ~ Exp(sigma^2)
        return std::polar(r, kTwoPi * u2);
    }
}

#endif

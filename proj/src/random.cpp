// SPDX-License-Identifier: Apache-2.0
//
// dfrc-waveform: constant-modulus waveform synthesis for joint radar-communication
// Copyright (C) 2026 The dfrc-waveform Authors
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

#include "dfrc/random.hpp"

#include <cmath>
#include <random>

namespace dfrc::sim
{
    std::uint64_t mix64(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> indices)
    {
        std::uint64_t h = mix64(base);
        for (std::uint64_t i : indices)
            h = mix64(h ^ mix64(i + 0x632be59bd9b4e019ULL));
        return h;
    }

    CMatrix gen_channel(Eigen::Index n_users, Eigen::Index n_antennas, std::uint64_t seed)
    {
        require_shape(n_users >= 1 && n_antennas >= 1, "gen_channel: dimensions must be positive");
        return gen_noise(n_users, n_antennas, 1.0, seed);
    }

    metrics::SymbolMatrix gen_symbols(Eigen::Index n_users, Eigen::Index frame_length, std::uint64_t seed)
    {
        require_shape(n_users >= 1 && frame_length >= 1, "gen_symbols: dimensions must be positive");
        auto qpsk = metrics::Constellation::qpsk();
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<std::size_t> pick(0, qpsk.size() - 1);
        CMatrix s(n_users, frame_length);
        for (Eigen::Index j = 0; j < frame_length; ++j)
            for (Eigen::Index i = 0; i < n_users; ++i)
                s(i, j) = qpsk.points()[pick(gen)];
        return {std::move(s), std::move(qpsk)};
    }

    CMatrix gen_noise(Eigen::Index rows, Eigen::Index cols, double n0, std::uint64_t seed)
    {
        require_domain(n0 >= 0.0, "noise power must be non-negative");
        CMatrix z(rows, cols);
        if (n0 == 0.0)
        {
            z.setZero();
            return z;
        }
        std::mt19937_64 gen(seed);
        std::normal_distribution<double> g(0.0, std::sqrt(0.5 * n0));
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
            {
                const double re = g(gen);
                const double im = g(gen);
                z(i, j) = cplx(re, im);
            }
        return z;
    }

    CMatrix transmit(const CMatrix &channel, const CMatrix &waveform, double n0, std::uint64_t seed)
    {
        require_shape(channel.cols() == waveform.rows(), "transmit: H columns must equal X rows");
        require_domain(n0 >= 0.0, "transmit: noise power must be non-negative");
        CMatrix y = channel * waveform;
        if (n0 > 0.0)
            y += gen_noise(y.rows(), y.cols(), n0, seed);
        return y;
    }
}

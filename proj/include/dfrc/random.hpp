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

#ifndef DFRC_RANDOM_HPP
#define DFRC_RANDOM_HPP

#include <cstdint>
#include <initializer_list>

#include "dfrc/metrics.hpp"
#include "dfrc/types.hpp"

namespace dfrc::sim
{
    // SplitMix64 finalizer
    std::uint64_t mix64(std::uint64_t z);

    // Independent stream seed for (base, i0, i1, ...). Used to give every Monte-Carlo frame its own
    // generators so that results do not depend on the order in which frames are processed.
    std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> indices);

    // K x N, entries i.i.d. CN(0, 1)
    CMatrix gen_channel(Eigen::Index n_users, Eigen::Index n_antennas, std::uint64_t seed);

    // K x L, entries uniform over the unit-energy QPSK alphabet
    metrics::SymbolMatrix gen_symbols(Eigen::Index n_users, Eigen::Index frame_length, std::uint64_t seed);

    // rows x cols, entries i.i.d. CN(0, n0)
    CMatrix gen_noise(Eigen::Index rows, Eigen::Index cols, double n0, std::uint64_t seed);

    // Y = H X + Z, Z ~ CN(0, n0); n0 = 0 gives H X exactly
    CMatrix transmit(const CMatrix &channel, const CMatrix &waveform, double n0, std::uint64_t seed);
}

#endif

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

#ifndef DFRC_TOOLS_CONFIG_HPP
#define DFRC_TOOLS_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfrc/sim.hpp"

namespace dfrc::cli
{
    // Every option is also a key of the flat key=value config file, spelled like the long flag
    // without the leading dashes. Command-line values override the file.
    struct Options
    {
        std::string out_dir = ".";
        std::uint64_t seed = 1;
        int workers = 1;

        std::vector<std::string> methods;
        long n_antennas = 16;
        long n_users = 4;
        long frame_length = 32;
        double total_power = 1.0;
        double rho = 0.1;
        std::vector<double> snr_db{-2, 0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
        int frames = 100;
        int noise_draws = 1;
        std::vector<double> rho_list{0.1, 0.3, 0.5, 0.7, 0.9};
        double target_deg = 20.0;
        double pfa = 1e-7;
        double gain_quantile = 0.1;
        double max_failure_fraction = 0.01;

        double epsilon = 1e-4;
        int kmax = 500;
        double eta = 1e-5;
        int nmax = 100;
    };

    void register_options(CLI::App &app, Options &opt);

    // Throws DomainError when the resolved scenario is invalid
    sim::Scenario make_scenario(const Options &opt);
}

#endif

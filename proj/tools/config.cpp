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

#include "config.hpp"

namespace dfrc::cli
{
    void register_options(CLI::App &app, Options &opt)
    {
        app.set_config("--config", "", "Flat key=value file; keys are the long flag names");
        app.allow_config_extras(false);

        app.add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
        app.add_option("--seed", opt.seed, "Base seed for every random stream")->capture_default_str();
        app.add_option("--workers", opt.workers, "Worker threads for Monte-Carlo frames")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();

        app.add_option("--method", opt.methods,
                       "closed-form, cm-rcg, cm-altmin or cm-zf; comma list for ser/radar (default: all)")
            ->delimiter(',');
        app.add_option("--n", opt.n_antennas, "Transmit antennas")->capture_default_str();
        app.add_option("--k", opt.n_users, "Downlink users")->capture_default_str();
        app.add_option("--l", opt.frame_length, "Frame length in snapshots")->capture_default_str();
        app.add_option("--pt", opt.total_power, "Total transmit power [W]")->capture_default_str();
        app.add_option("--rho", opt.rho, "Communication weight in [0, 1]")->capture_default_str();
        app.add_option("--snr-db", opt.snr_db, "Transmit SNR grid P_T/N0 [dB]")->delimiter(',')->capture_default_str();
        app.add_option("--frames", opt.frames, "Monte-Carlo frames")->capture_default_str();
        app.add_option("--noise-draws", opt.noise_draws, "Noise realizations per frame and SNR point")
            ->capture_default_str();
        app.add_option("--rho-list", opt.rho_list, "Weights for sweep")->delimiter(',')->capture_default_str();
        app.add_option("--target-deg", opt.target_deg, "Radar target angle [deg]")->capture_default_str();
        app.add_option("--pfa", opt.pfa, "False-alarm probability")->capture_default_str();
        app.add_option("--gain-quantile", opt.gain_quantile, "Quantile of the per-frame target gain used for Pd")
            ->capture_default_str();
        app.add_option("--max-failure-fraction", opt.max_failure_fraction,
                       "Tolerated fraction of frames whose synthesis throws")
            ->capture_default_str();

        app.add_option("--epsilon", opt.epsilon, "RCG gradient-norm tolerance")->capture_default_str();
        app.add_option("--kmax", opt.kmax, "RCG iteration cap")->capture_default_str();
        app.add_option("--eta", opt.eta, "AltMin objective-decrease tolerance")->capture_default_str();
        app.add_option("--nmax", opt.nmax, "AltMin outer iteration cap")->capture_default_str();
    }

    sim::Scenario make_scenario(const Options &opt)
    {
        sim::Scenario sc;
        sc.n_antennas = opt.n_antennas;
        sc.n_users = opt.n_users;
        sc.frame_length = opt.frame_length;
        sc.total_power = opt.total_power;
        sc.rho = opt.rho;
        sc.snr_grid_db = opt.snr_db;
        sc.n_frames = opt.frames;
        sc.noise_draws = opt.noise_draws;
        if (!opt.methods.empty())
        {
            sc.methods.clear();
            for (const auto &m : opt.methods)
                sc.methods.push_back(sim::parse_method(m));
        }
        sc.target_angle_deg = opt.target_deg;
        sc.p_fa = opt.pfa;
        sc.gain_quantile = opt.gain_quantile;
        sc.max_failure_fraction = opt.max_failure_fraction;
        sc.solver.epsilon = opt.epsilon;
        sc.solver.k_max = opt.kmax;
        sc.solver.eta = opt.eta;
        sc.solver.n_max = opt.nmax;
        sim::apply_base_seed(sc, opt.seed);
        sc.validate();
        return sc;
    }
}

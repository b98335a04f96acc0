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

#ifndef DFRC_SIM_HPP
#define DFRC_SIM_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfrc/metrics.hpp"
#include "dfrc/random.hpp"
#include "dfrc/solvers.hpp"

namespace dfrc::sim
{
    enum class Method
    {
        ClosedForm, // orthogonal Procrustes design, no CM constraint
        CmRcg,      // single RCG solve against a fixed semi-unitary U
        CmAltMin,   // alternating minimization
        CmZf        // zero forcing with per-entry modulus normalization
    };

    std::string to_string(Method m);
    Method parse_method(const std::string &label); // throws DomainError on unknown labels
    std::vector<Method> all_methods();

    struct Scenario
    {
        Eigen::Index n_antennas = 16; // N
        Eigen::Index n_users = 4;     // K
        Eigen::Index frame_length = 32; // L
        double total_power = 1.0;     // P_T [W]
        double rho = 0.1;
        std::vector<double> snr_grid_db{-2, 0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
        int n_frames = 100;
        int noise_draws = 1; // noise realizations per frame and SNR point (SER only)
        std::vector<Method> methods = all_methods();
        solvers::SolverConfig solver;
        std::uint64_t channel_seed = 1;
        std::uint64_t symbol_seed = 2;
        std::uint64_t noise_seed = 3;

        double target_angle_deg = 20.0;
        double p_fa = 1e-7;
        // Pd is reported at this lower quantile of the per-frame gain toward the target
        double gain_quantile = 0.1;
        double spacing_wavelengths = 0.5;

        // Synthesis failures tolerated before an experiment aborts, as a fraction of n_frames
        double max_failure_fraction = 0.01;
        int max_redraws = 8;

        void validate() const; // throws DomainError
    };

    // Scenario with every stream seed derived from one base seed
    void apply_base_seed(Scenario &sc, std::uint64_t seed);

    struct CurvePoint
    {
        double snr_db = 0.0;
        double value = 0.0; // SER or Pd
        long n_samples = 0;
        double ci_halfwidth = 0.0;
    };

    struct MethodCurve
    {
        Method method;
        std::vector<CurvePoint> points;
    };

    struct ExperimentResult
    {
        std::vector<MethodCurve> curves;
        int frames_used = 0;
        int failures = 0;      // synthesis attempts that threw
        int non_converged = 0; // (frame, method) syntheses that stopped at k_max or n_max
    };

    struct RadarResult
    {
        ExperimentResult detection;
        std::vector<metrics::BeampatternCurve> beampatterns; // frame-averaged, one per method
        std::vector<double> mean_log_gain;                   // E[ln(P(theta_t) / P_T)] per method
        std::vector<double> quantile_log_gain;               // gain_quantile order statistic, drives Pd
    };

    struct TradeoffRow
    {
        double rho = 0.0;
        double mean_mui = 0.0;
        double mean_orth_err = 0.0;
        std::vector<double> mui;      // per frame
        std::vector<double> orth_err; // per frame
    };

    struct TradeoffResult
    {
        std::vector<TradeoffRow> rows;
        int failures = 0;
        int non_converged = 0;
    };

    class FailureBudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Synthesis
    {
        solvers::WaveformMatrix waveform;
        std::optional<solvers::AltMinResult> altmin; // CmAltMin only
        bool converged = true; // false when an iterative solve stopped at its iteration cap
    };

    // X_zf = H^H (H H^H)^{-1} S, then every entry rescaled to modulus sqrt(P_T / N) keeping its phase
    solvers::WaveformMatrix cm_zf_waveform(const CMatrix &channel, const CMatrix &symbols, double total_power);

    // sqrt(L P_T / N) [I_N 0]
    solvers::AuxiliaryUnitary fixed_unitary(Eigen::Index n_antennas, Eigen::Index frame_length, double total_power);

    // One RCG solve of the stacked problem against fixed_unitary(), from a random start seeded by cfg.seed
    solvers::RcgResult cm_rcg_solve(const CMatrix &channel, const CMatrix &symbols, double rho, double total_power,
                                    const solvers::SolverConfig &cfg);
    solvers::WaveformMatrix cm_rcg_waveform(const CMatrix &channel, const CMatrix &symbols, double rho,
                                            double total_power, const solvers::SolverConfig &cfg);

    Synthesis synthesize(Method method, const CMatrix &channel, const CMatrix &symbols, double rho,
                         double total_power, const solvers::SolverConfig &cfg);

    // SNR = P_T / N0. Per frame: draw (H, S), synthesize every method, then count QPSK decision errors over
    // noise_draws noise realizations per SNR point. The noise is shared across methods.
    ExperimentResult run_ser_experiment(const Scenario &sc, int workers = 1);

    // Radar SNR toward the target = transmit SNR * P(theta_t) / P_T, taken at the gain_quantile
    // order statistic over frames and mapped through detection_probability at sc.p_fa. The
    // orthogonal design has P(theta) = P_T in every frame, so its radar SNR equals the transmit SNR.
    RadarResult run_radar_experiment(const Scenario &sc, int workers = 1);

    // AltMin over every rho with paired (H, S, init) seeds.
    TradeoffResult run_tradeoff_sweep(const Scenario &sc, const std::vector<double> &rho_grid, int workers = 1);
}

#endif

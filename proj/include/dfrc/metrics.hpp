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

#ifndef DFRC_METRICS_HPP
#define DFRC_METRICS_HPP

#include <string>
#include <vector>

#include "dfrc/types.hpp"

namespace dfrc::metrics
{
    class Constellation
    {
    public:
        Constellation(std::string name, std::vector<cplx> points);

        // Gray-coded unit-energy QPSK: index b1 b0 -> ((1 - 2 b0) + j (1 - 2 b1)) / sqrt(2)
        static Constellation qpsk();

        const std::string &name() const { return name_; }
        const std::vector<cplx> &points() const { return points_; }
        std::size_t size() const { return points_.size(); }

        // Minimum-distance decision
        std::size_t nearest_index(cplx y) const;
        cplx nearest(cplx y) const { return points_[nearest_index(y)]; }

        bool contains(cplx s, double tol = 1e-12) const;

    private:
        std::string name_;
        std::vector<cplx> points_;
    };

    // K x L desired symbols drawn from `constellation`
    struct SymbolMatrix
    {
        CMatrix entries;
        Constellation constellation = Constellation::qpsk();
    };

    struct BeampatternCurve
    {
        std::vector<double> angles_deg;
        std::vector<double> power; // watts
    };

    // ||H X - S||_F^2
    double mui_energy(const CMatrix &channel, const CMatrix &waveform, const CMatrix &symbols);

    // (1/L) X X^H
    CMatrix covariance(const CMatrix &waveform);

    // ||(1/L) X X^H - (P_T / N) I_N||_F
    double orthogonality_error(const CMatrix &waveform, double total_power);

    // max_{n,l} | |x_{n,l}| - sqrt(P_T / N) |
    double constant_modulus_error(const CMatrix &waveform, double total_power);

    // ULA response a_n = exp(j 2 pi spacing n sin(theta)), n = 0..N-1
    CVector steering_vector(Eigen::Index n_antennas, double angle_deg, double spacing_wavelengths = 0.5);

    // P(theta) = a(theta)^H R a(theta), clamped at 0
    BeampatternCurve beampattern(const CMatrix &cov, const std::vector<double> &angles_deg,
                                 double spacing_wavelengths = 0.5);

    // 181 points, -90..90 deg in 1 deg steps
    std::vector<double> default_angle_grid();

    SymbolMatrix demodulate(const CMatrix &received, const Constellation &constellation);

    // Fraction of mismatched entries
    double ser(const SymbolMatrix &decided, const SymbolMatrix &truth);

    // Number of entries of `received` whose minimum-distance decision differs from `truth`
    long count_symbol_errors(const CMatrix &received, const CMatrix &truth, const Constellation &constellation);

    // Nonfluctuating point target, coherent detection: Pd = Q_1(sqrt(2 snr), sqrt(-2 ln p_fa)).
    // Pd(0) = p_fa exactly; result is clamped to [p_fa, 1].
    double detection_probability(double snr_linear, double p_fa);

    // First-order Marcum Q function Q_1(a, b)
    double marcum_q1(double a, double b);
}

#endif

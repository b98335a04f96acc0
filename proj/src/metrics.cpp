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

#include "dfrc/metrics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dfrc::metrics
{
    Constellation::Constellation(std::string name, std::vector<cplx> points)
        : name_(std::move(name)), points_(std::move(points))
    {
        require_shape(!points_.empty(), "Constellation: no points");
    }

    Constellation Constellation::qpsk()
    {
        const double a = 1.0 / std::numbers::sqrt2;
        return Constellation("qpsk", {{a, a}, {-a, a}, {a, -a}, {-a, -a}});
    }

    std::size_t Constellation::nearest_index(cplx y) const
    {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < points_.size(); ++i)
        {
            const double d = std::norm(y - points_[i]);
            if (d < best_d)
            {
                best_d = d;
                best = i;
            }
        }
        return best;
    }

    bool Constellation::contains(cplx s, double tol) const
    {
        for (const auto &p : points_)
            if (std::abs(s - p) <= tol)
                return true;
        return false;
    }

    double mui_energy(const CMatrix &channel, const CMatrix &waveform, const CMatrix &symbols)
    {
        require_shape(channel.cols() == waveform.rows(), "mui_energy: H columns must equal X rows");
        require_shape(symbols.rows() == channel.rows() && symbols.cols() == waveform.cols(),
                      "mui_energy: S must be K x L");
        return (channel * waveform - symbols).squaredNorm();
    }

    CMatrix covariance(const CMatrix &waveform)
    {
        require_shape(waveform.cols() >= 1 && waveform.rows() >= 1, "covariance: empty waveform");
        CMatrix r = waveform * waveform.adjoint() / static_cast<double>(waveform.cols());
        // exact Hermitian symmetry
        return 0.5 * (r + r.adjoint());
    }

    double orthogonality_error(const CMatrix &waveform, double total_power)
    {
        const Eigen::Index n = waveform.rows();
        const CMatrix r = covariance(waveform);
        return (r - (total_power / static_cast<double>(n)) * CMatrix::Identity(n, n)).norm();
    }

    double constant_modulus_error(const CMatrix &waveform, double total_power)
    {
        require_shape(waveform.size() >= 1, "constant_modulus_error: empty waveform");
        const double amp = std::sqrt(total_power / static_cast<double>(waveform.rows()));
        return (waveform.array().abs() - amp).abs().maxCoeff();
    }

    CVector steering_vector(Eigen::Index n_antennas, double angle_deg, double spacing_wavelengths)
    {
        CVector a(n_antennas);
        const double phase = 2.0 * std::numbers::pi * spacing_wavelengths * std::sin(angle_deg * std::numbers::pi / 180.0);
        for (Eigen::Index i = 0; i < n_antennas; ++i)
            a[i] = std::polar(1.0, phase * static_cast<double>(i));
        return a;
    }

    BeampatternCurve beampattern(const CMatrix &cov, const std::vector<double> &angles_deg,
                                 double spacing_wavelengths)
    {
        require_shape(cov.rows() == cov.cols() && cov.rows() >= 1, "beampattern: covariance must be square");
        BeampatternCurve out;
        out.angles_deg = angles_deg;
        out.power.reserve(angles_deg.size());
        for (double theta : angles_deg)
        {
            const CVector a = steering_vector(cov.rows(), theta, spacing_wavelengths);
            const double p = a.dot(cov * a).real();
            out.power.push_back(std::max(0.0, p));
        }
        return out;
    }

    std::vector<double> default_angle_grid()
    {
        std::vector<double> grid;
        grid.reserve(181);
        for (int d = -90; d <= 90; ++d)
            grid.push_back(static_cast<double>(d));
        return grid;
    }

    SymbolMatrix demodulate(const CMatrix &received, const Constellation &constellation)
    {
        SymbolMatrix out{CMatrix(received.rows(), received.cols()), constellation};
        for (Eigen::Index j = 0; j < received.cols(); ++j)
            for (Eigen::Index i = 0; i < received.rows(); ++i)
                out.entries(i, j) = constellation.nearest(received(i, j));
        return out;
    }

    double ser(const SymbolMatrix &decided, const SymbolMatrix &truth)
    {
        require_shape(decided.entries.rows() == truth.entries.rows() && decided.entries.cols() == truth.entries.cols(),
                      "ser: shape mismatch");
        require_shape(truth.entries.size() >= 1, "ser: empty symbol matrix");
        long errors = 0;
        for (Eigen::Index j = 0; j < truth.entries.cols(); ++j)
            for (Eigen::Index i = 0; i < truth.entries.rows(); ++i)
                errors += decided.entries(i, j) != truth.entries(i, j);
        return static_cast<double>(errors) / static_cast<double>(truth.entries.size());
    }

    long count_symbol_errors(const CMatrix &received, const CMatrix &truth, const Constellation &constellation)
    {
        require_shape(received.rows() == truth.rows() && received.cols() == truth.cols(),
                      "count_symbol_errors: shape mismatch");
        long errors = 0;
        for (Eigen::Index j = 0; j < truth.cols(); ++j)
            for (Eigen::Index i = 0; i < truth.rows(); ++i)
                errors += constellation.nearest(received(i, j)) != truth(i, j);
        return errors;
    }
}

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

#include "dfrc/solvers.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace dfrc::solvers
{
    CMatrix solve_opp(const CMatrix &target, double scale)
    {
        const Eigen::Index m = target.rows(), l = target.cols();
        require_shape(m >= 1, "solve_opp: empty target");
        require_shape(l >= m, "solve_opp: infeasible shape, need L >= M (got M=" + std::to_string(m) +
                                  ", L=" + std::to_string(l) + ")");
        require_domain(scale > 0.0 && std::isfinite(scale), "solve_opp: scale must be positive");
        if (!target.allFinite())
            throw NumericalError("solve_opp: non-finite target");

        Eigen::JacobiSVD<CMatrix> svd(target, Eigen::ComputeThinU | Eigen::ComputeThinV);
        // thin U is M x M, thin V is L x M
        CMatrix r = svd.matrixU() * svd.matrixV().adjoint();
        r *= std::sqrt(scale);
        return r;
    }

    WaveformMatrix solve_mui_orthogonal(const CMatrix &channel, const CMatrix &symbols, double total_power)
    {
        const Eigen::Index n = channel.cols(), l = symbols.cols();
        require_shape(channel.rows() == symbols.rows(), "solve_mui_orthogonal: H and S user counts differ");
        require_shape(l >= n, "solve_mui_orthogonal: frame length L must be at least N");
        require_domain(total_power > 0.0, "solve_mui_orthogonal: total power must be positive");
        if (channel.rows() > n)
            std::cerr << "solve_mui_orthogonal: warning, more users (" << channel.rows() << ") than antennas ("
                      << n << ")\n";

        // ||H X||_F^2 is fixed on the feasible set, so the problem reduces to max Re tr(X^H H^H S).
        const CMatrix target = channel.adjoint() * symbols;
        return solve_opp(target, static_cast<double>(l) * total_power / static_cast<double>(n));
    }

    StackedProblem build_stacked(const CMatrix &channel, const CMatrix &symbols, const AuxiliaryUnitary &aux,
                                 double rho, double total_power)
    {
        require_domain(rho >= 0.0 && rho <= 1.0, "build_stacked: rho must lie in [0, 1]");
        require_domain(total_power > 0.0, "build_stacked: total power must be positive");
        const Eigen::Index k = channel.rows(), n = channel.cols(), l = symbols.cols();
        require_shape(symbols.rows() == k, "build_stacked: S must have K rows");
        require_shape(aux.rows() == n && aux.cols() == l, "build_stacked: U must be N x L");

        const double wc = std::sqrt(rho), wr = std::sqrt(1.0 - rho);
        StackedProblem sp;
        sp.a_matrix.resize(k + n, n);
        sp.a_matrix.topRows(k) = wc * channel;
        sp.a_matrix.bottomRows(n) = wr * CMatrix::Identity(n, n);
        sp.b_matrix.resize(k + n, l);
        sp.b_matrix.topRows(k) = wc * symbols;
        sp.b_matrix.bottomRows(n) = wr * aux;
        sp.rho = rho;
        sp.total_power = total_power;
        return sp;
    }

    double stacked_value(const StackedProblem &sp, const WaveformMatrix &x)
    {
        require_shape(x.rows() == sp.a_matrix.cols() && x.cols() == sp.b_matrix.cols(),
                      "stacked_value: X shape mismatch");
        return (sp.a_matrix * x - sp.b_matrix).squaredNorm();
    }

    double weighted_objective(const CMatrix &channel, const CMatrix &symbols, const WaveformMatrix &x,
                              const AuxiliaryUnitary &aux, double rho)
    {
        require_shape(channel.cols() == x.rows() && symbols.rows() == channel.rows() && symbols.cols() == x.cols(),
                      "weighted_objective: shape mismatch");
        require_shape(aux.rows() == x.rows() && aux.cols() == x.cols(), "weighted_objective: U shape mismatch");
        return rho * (channel * x - symbols).squaredNorm() + (1.0 - rho) * (x - aux).squaredNorm();
    }

    LsObjective vectorize_problem(const StackedProblem &sp)
    {
        const Eigen::Index k = sp.n_users(), n = sp.n_antennas();
        require_shape(k >= 0 && sp.b_matrix.rows() == k + n, "vectorize_problem: malformed stacked problem");
        return LsObjective::stacked(sp.a_matrix.topRows(k), std::sqrt(1.0 - sp.rho), sp.b_matrix,
                                    std::sqrt(sp.total_power / static_cast<double>(n)));
    }

    CVector vectorize_waveform(const WaveformMatrix &x, double total_power)
    {
        require_domain(total_power > 0.0, "vectorize_waveform: total power must be positive");
        const double amp = std::sqrt(total_power / static_cast<double>(x.rows()));
        return Eigen::Map<const CVector>(x.data(), x.size()) / amp;
    }

    WaveformMatrix devectorize(const CVector &coords, Eigen::Index n_antennas, Eigen::Index frame_length,
                               double total_power)
    {
        require_shape(n_antennas >= 1 && coords.size() == n_antennas * frame_length, "devectorize: length mismatch");
        require_domain(total_power > 0.0, "devectorize: total power must be positive");
        const double amp = std::sqrt(total_power / static_cast<double>(n_antennas));
        return amp * Eigen::Map<const CMatrix>(coords.data(), n_antennas, frame_length);
    }

    WaveformMatrix devectorize(const manifold::CirclePoint &x, Eigen::Index n_antennas, Eigen::Index frame_length,
                               double total_power)
    {
        return devectorize(x.entries(), n_antennas, frame_length, total_power);
    }
}

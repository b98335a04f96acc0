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

namespace dfrc::solvers
{
    AltMinResult altmin(const CMatrix &channel, const CMatrix &symbols, double rho, double total_power,
                        const SolverConfig &cfg)
    {
        const Eigen::Index n = channel.cols(), l = symbols.cols();
        require_shape(n >= 1 && l >= 1, "altmin: empty problem");
        const auto start = manifold::random_point(n * l, cfg.seed);
        return altmin(channel, symbols, rho, total_power, cfg, devectorize(start, n, l, total_power));
    }

    AltMinResult altmin(const CMatrix &channel, const CMatrix &symbols, double rho, double total_power,
                        const SolverConfig &cfg, const WaveformMatrix &x0)
    {
        cfg.validate();
        const Eigen::Index k = channel.rows(), n = channel.cols(), l = symbols.cols();
        require_shape(symbols.rows() == k, "altmin: H and S user counts differ");
        require_shape(x0.rows() == n && x0.cols() == l, "altmin: X0 must be N x L");
        require_shape(l >= n, "altmin: frame length L must be at least N");
        require_domain(rho >= 0.0 && rho <= 1.0, "altmin: rho must lie in [0, 1]");
        require_domain(total_power > 0.0, "altmin: total power must be positive");

        const double opp_scale = static_cast<double>(l) * total_power / static_cast<double>(n);

        AltMinResult res;
        // also validates that X0 is constant modulus
        manifold::CirclePoint x(vectorize_waveform(x0, total_power));
        res.waveform = x0;
        res.auxiliary = solve_opp(x0, opp_scale);
        res.objective_trace.push_back(weighted_objective(channel, symbols, res.waveform, res.auxiliary, rho));

        for (int it = 1; it <= cfg.n_max; ++it)
        {
            res.auxiliary = solve_opp(res.waveform, opp_scale);

            const auto sp = build_stacked(channel, symbols, res.auxiliary, rho, total_power);
            const auto inner = rcg_solve(vectorize_problem(sp), x, cfg);
            x = inner.x;
            res.inner_iterations += inner.iterations;
            if (inner.grad_norm >= cfg.epsilon)
                ++res.capped_inner_solves;
            res.waveform = devectorize(x, n, l, total_power);

            const double f = weighted_objective(channel, symbols, res.waveform, res.auxiliary, rho);
            const double change = std::abs(f - res.objective_trace.back());
            res.objective_trace.push_back(f);
            res.iterations = it;
            if (change < cfg.eta)
            {
                res.converged = true;
                break;
            }
        }
        return res;
    }
}

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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dfrc::solvers
{
    namespace
    {
        struct LineSearch
        {
            double step = 0.0;
            CVector x_next;
            double value_next = 0.0;
            int backtracks = 0;
            bool accepted = false;
        };

        // Re(conj(x_i) egrad_i): the normal component of the Euclidean gradient
        void radial_part(const CVector &x, const CVector &egrad, RVector &out)
        {
            out = x.real().cwiseProduct(egrad.real()) + x.imag().cwiseProduct(egrad.imag());
        }

        // slope = <grad f(x), d> < 0, grad_norm = ||grad f(x)|| > 0. The first trial step minimizes the
        // second-order model f + t slope + t^2/2 <d, Hess f(x) d> along the retraction curve.
        LineSearch backtrack(const LsObjective &obj, const CVector &x, double value, double slope,
                             const CVector &d, const RVector &radial, double grad_norm, const SolverConfig &cfg)
        {
            LineSearch ls;
            const double hess_dd = 2.0 * obj.curvature(d) - (radial.array() * d.array().abs2()).sum();
            double mu = hess_dd > 0.0 ? cfg.armijo_initial_step * (-slope) / hess_dd
                                      : cfg.armijo_initial_step / grad_norm;
            for (int m = 0; m <= cfg.armijo_max_backtracks; ++m, mu *= cfg.armijo_shrink)
            {
                CVector trial;
                try
                {
                    manifold::kernel::retract_into(x, mu, d, trial);
                }
                catch (const ZeroSumEntry &)
                {
                    continue;
                }
                const double f = obj.value(trial);
                if (f <= value + cfg.armijo_c * mu * slope)
                {
                    ls.step = mu;
                    ls.x_next = std::move(trial);
                    ls.value_next = f;
                    ls.backtracks = m;
                    ls.accepted = true;
                    return ls;
                }
            }
            ls.backtracks = cfg.armijo_max_backtracks;
            return ls;
        }
    }

    void SolverConfig::validate() const
    {
        require_domain(epsilon > 0.0, "SolverConfig: epsilon must be positive");
        require_domain(k_max > 2, "SolverConfig: k_max must exceed 2");
        require_domain(eta > 0.0, "SolverConfig: eta must be positive");
        require_domain(n_max >= 1, "SolverConfig: n_max must be at least 1");
        require_domain(armijo_c > 0.0 && armijo_c < 1.0, "SolverConfig: armijo_c must lie in (0, 1)");
        require_domain(armijo_shrink > 0.0 && armijo_shrink < 1.0, "SolverConfig: armijo_shrink must lie in (0, 1)");
        require_domain(armijo_initial_step > 0.0, "SolverConfig: armijo_initial_step must be positive");
        require_domain(armijo_max_backtracks >= 0, "SolverConfig: armijo_max_backtracks must be non-negative");
    }

    double polak_ribiere_beta(const manifold::TangentVector &g_k, const manifold::TangentVector &g_prev_projected,
                              double g_prev_norm_sq)
    {
        require_domain(g_prev_norm_sq > 0.0, "polak_ribiere_beta: previous gradient norm must be positive");
        const double num = manifold::metric_inner(g_k, g_k) - manifold::metric_inner(g_k, g_prev_projected);
        return std::max(0.0, num / g_prev_norm_sq);
    }

    ArmijoResult armijo_step(const LsObjective &obj, const manifold::CirclePoint &x,
                             const manifold::TangentVector &d, const SolverConfig &cfg)
    {
        cfg.validate();
        const auto grad = manifold::riemannian_gradient(obj, x);
        const double slope = manifold::metric_inner(grad, d);
        if (!(slope < 0.0))
            throw NotDescentDirection("armijo_step: <grad f, d> = " + std::to_string(slope) + " is not negative");
        CVector egrad;
        const double value = obj.value_and_gradient(x.entries(), egrad);
        RVector radial;
        radial_part(x.entries(), egrad, radial);
        auto ls = backtrack(obj, x.entries(), value, slope, d.entries(), radial, manifold::norm(grad), cfg);
        if (!ls.accepted)
            throw BacktrackExhausted("armijo_step: no sufficient decrease after " +
                                     std::to_string(cfg.armijo_max_backtracks) + " backtracks");
        return ArmijoResult{ls.step, manifold::CirclePoint::normalized(ls.x_next), ls.value_next, ls.backtracks};
    }

    RcgResult rcg_solve(const LsObjective &obj, const manifold::CirclePoint &x0, const SolverConfig &cfg)
    {
        namespace mk = manifold::kernel;
        cfg.validate();
        require_shape(x0.size() == obj.dim(), "rcg_solve: starting point has wrong dimension");

        CVector x = x0.entries();
        CVector g;
        double value = obj.value_and_gradient(x, g);
        RVector radial;
        radial_part(x, g, radial);
        mk::project_inplace(x, g);
        double g_norm_sq = mk::inner(g, g);

        RcgResult res{x0, 0, 0.0, 0.0, 0, {}};
        res.value_trace.push_back(value);

        CVector d = -g, g_prev, d_prev;
        double g_prev_norm_sq = 0.0;
        int k = 0;
        while (k < cfg.k_max && std::sqrt(g_norm_sq) >= cfg.epsilon)
        {
            bool steepest = true;
            if (k > 0)
            {
                // transport previous gradient and direction by projection onto T_x M
                mk::project_inplace(x, g_prev);
                mk::project_inplace(x, d_prev);
                const double beta = std::max(0.0, (g_norm_sq - mk::inner(g, g_prev)) / g_prev_norm_sq);
                d = -g + beta * d_prev;
                steepest = beta == 0.0;
                if (mk::inner(g, d) >= 0.0)
                {
                    d = -g;
                    steepest = true;
                    ++res.restarts;
                }
            }
            const double grad_norm = std::sqrt(g_norm_sq);
            auto ls = backtrack(obj, x, value, mk::inner(g, d), d, radial, grad_norm, cfg);
            if (!ls.accepted && !steepest)
            {
                d = -g;
                ++res.restarts;
                ls = backtrack(obj, x, value, -g_norm_sq, d, radial, grad_norm, cfg);
            }
            if (!ls.accepted)
                throw BacktrackExhausted("rcg_solve: line search failed along steepest descent at iteration " +
                                         std::to_string(k) + " (||grad|| = " + std::to_string(grad_norm) + ")");

            x.swap(ls.x_next);
            g_prev.swap(g);
            g_prev_norm_sq = g_norm_sq;
            d_prev.swap(d);

            value = obj.value_and_gradient(x, g);
            radial_part(x, g, radial);
            mk::project_inplace(x, g);
            g_norm_sq = mk::inner(g, g);
            res.value_trace.push_back(value);
            ++k;
        }

        res.x = manifold::CirclePoint::normalized(x);
        res.iterations = k;
        res.grad_norm = std::sqrt(g_norm_sq);
        res.value = value;
        return res;
    }
}

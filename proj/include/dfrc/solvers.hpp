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

#ifndef DFRC_SOLVERS_HPP
#define DFRC_SOLVERS_HPP

#include <cstdint>
#include <vector>

#include "dfrc/manifold.hpp"
#include "dfrc/objective.hpp"
#include "dfrc/types.hpp"

namespace dfrc::solvers
{
    // N x L transmit waveform X (amplitude in sqrt(W))
    using WaveformMatrix = CMatrix;
    // N x L auxiliary matrix U with U U^H = (L P_T / N) I_N
    using AuxiliaryUnitary = CMatrix;

    struct SolverConfig
    {
        double epsilon = 1e-4;   // RCG Riemannian-gradient norm tolerance
        int k_max = 500;         // RCG iteration cap
        double eta = 1e-5;       // AltMin objective-change tolerance
        int n_max = 100;         // AltMin outer iteration cap
        double armijo_c = 1e-4;  // sufficient-decrease constant
        double armijo_shrink = 0.5;
        double armijo_initial_step = 1.0; // scales the first trial step (minimizer of the local quadratic model along d)
        int armijo_max_backtracks = 50;
        std::uint64_t seed = 0;  // random initialization

        // Throws DomainError on out-of-range fields.
        void validate() const;
    };

    // A = [sqrt(rho) H; sqrt(1 - rho) I_N], B = [sqrt(rho) S; sqrt(1 - rho) U]
    struct StackedProblem
    {
        CMatrix a_matrix;
        CMatrix b_matrix;
        double rho = 0.0;
        double total_power = 1.0;

        Eigen::Index n_users() const { return a_matrix.rows() - a_matrix.cols(); }
        Eigen::Index n_antennas() const { return a_matrix.cols(); }
        Eigen::Index frame_length() const { return b_matrix.cols(); }
    };

    struct ArmijoResult
    {
        double step = 0.0;
        manifold::CirclePoint x_next;
        double value_next = 0.0;
        int backtracks = 0;
    };

    struct RcgResult
    {
        manifold::CirclePoint x;
        int iterations = 0;      // accepted steps
        double grad_norm = 0.0;  // ||grad f|| at the returned point
        double value = 0.0;      // f at the returned point
        int restarts = 0;        // steepest-descent resets
        std::vector<double> value_trace; // f(x_0), f(x_1), ...
    };

    struct AltMinResult
    {
        WaveformMatrix waveform;
        AuxiliaryUnitary auxiliary;
        std::vector<double> objective_trace; // f_0, f_1, ..., f_n
        int iterations = 0;
        bool converged = false;
        long inner_iterations = 0; // total accepted RCG steps
        int capped_inner_solves = 0; // inner solves that stopped at k_max above epsilon
    };

    // ---- Orthogonal Procrustes ------------------------------------------------------------------

    // Nearest matrix R (in Frobenius norm) to `target` subject to R R^H = scale * I_M.
    // target is M x L with L >= M; R = sqrt(scale) * U V^H from the thin SVD target = U S V^H.
    CMatrix solve_opp(const CMatrix &target, double scale);

    // argmin ||H X - S||_F^2 s.t. (1/L) X X^H = (P_T / N) I_N
    WaveformMatrix solve_mui_orthogonal(const CMatrix &channel, const CMatrix &symbols, double total_power);

    // ---- Constant-modulus least squares ---------------------------------------------------------

    StackedProblem build_stacked(const CMatrix &channel, const CMatrix &symbols, const AuxiliaryUnitary &aux,
                                 double rho, double total_power);

    // ||A X - B||_F^2
    double stacked_value(const StackedProblem &sp, const WaveformMatrix &x);

    // rho ||H X - S||^2 + (1 - rho) ||X - U||^2, evaluated term by term
    double weighted_objective(const CMatrix &channel, const CMatrix &symbols, const WaveformMatrix &x,
                              const AuxiliaryUnitary &aux, double rho);

    // Kronecker-structured objective with scale sqrt(P_T / N) absorbed into A~
    LsObjective vectorize_problem(const StackedProblem &sp);

    // vec(X) / sqrt(P_T / N): the unit-modulus coordinates of a constant-modulus X
    CVector vectorize_waveform(const WaveformMatrix &x, double total_power);

    WaveformMatrix devectorize(const CVector &coords, Eigen::Index n_antennas, Eigen::Index frame_length,
                               double total_power);
    WaveformMatrix devectorize(const manifold::CirclePoint &x, Eigen::Index n_antennas,
                               Eigen::Index frame_length, double total_power);

    // PR+ coefficient: max(0, <g_k, g_k - g_prev> / ||g_prev||^2)
    double polak_ribiere_beta(const manifold::TangentVector &g_k, const manifold::TangentVector &g_prev_projected,
                              double g_prev_norm_sq);

    // Backtracking along the retraction curve t -> R_x(t d). Throws NotDescentDirection when
    // <grad f(x), d> >= 0 and BacktrackExhausted after cfg.armijo_max_backtracks shrinks.
    ArmijoResult armijo_step(const LsObjective &obj, const manifold::CirclePoint &x,
                             const manifold::TangentVector &d, const SolverConfig &cfg);

    // Riemannian conjugate gradient on the complex circle. Stops when ||grad f|| < epsilon or after
    // k_max accepted steps.
    RcgResult rcg_solve(const LsObjective &obj, const manifold::CirclePoint &x0, const SolverConfig &cfg);

    // ---- Alternating minimization ---------------------------------------------------------------

    // Random constant-modulus start drawn from cfg.seed.
    AltMinResult altmin(const CMatrix &channel, const CMatrix &symbols, double rho, double total_power,
                        const SolverConfig &cfg);

    // Starts from the given constant-modulus X_0 (U_0 = nearest scaled semi-unitary matrix to X_0).
    AltMinResult altmin(const CMatrix &channel, const CMatrix &symbols, double rho, double total_power,
                        const SolverConfig &cfg, const WaveformMatrix &x0);
}

#endif

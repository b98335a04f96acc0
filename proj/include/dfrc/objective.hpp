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

#ifndef DFRC_OBJECTIVE_HPP
#define DFRC_OBJECTIVE_HPP

#include "dfrc/types.hpp"

namespace dfrc
{
    // Least-squares cost f(x) = || scale * (I_L kron A) x - vec(B) ||^2 over x in C^{N L}.
    //
    // The Kronecker operator is never formed. x is viewed as the column-major N x L matrix X and
    // the residual is evaluated as scale * A X - B. A may carry a trailing block w * I_N
    // (the stacked form used by the waveform sub-problem), which is applied elementwise so that
    // one value/gradient evaluation costs O(N K L) complex multiplications with K the number of
    // dense rows on top.
    class LsObjective
    {
    public:
        // Dense form: A is an arbitrary m x N matrix, B is m x L.
        LsObjective(CMatrix a, CMatrix b, double scale = 1.0);

        // Stacked form: A = [top; identity_weight * I_N], B has top.rows() + N rows.
        static LsObjective stacked(CMatrix top, double identity_weight, CMatrix b, double scale);

        Eigen::Index n_antennas() const { return n_; }   // N
        Eigen::Index frame_length() const { return l_; } // L
        Eigen::Index dim() const { return n_ * l_; }     // N L
        Eigen::Index dense_rows() const { return top_.rows(); }
        bool has_identity_block() const { return has_identity_; }
        double identity_weight() const { return identity_weight_; }
        double scale() const { return scale_; }
        const CMatrix &dense_block() const { return top_; }
        const CMatrix &target() const { return b_; }

        // A X, with A the unscaled (K+N) x N (or m x N) matrix
        CMatrix apply(const CMatrix &x_mat) const;

        double value(const CVector &x) const;

        // ||scale A D||_F^2 for D = reshape(d): the second-order coefficient of f along x + t d
        double curvature(const CVector &d) const;
        CVector gradient(const CVector &x) const;

        // Shares the residual between the value and 2 scale A^H (scale A X - B).
        double value_and_gradient(const CVector &x, CVector &grad) const;

    private:
        LsObjective() = default;
        void check_dims(const CVector &x) const;
        CMatrix residual(const CVector &x) const;

        CMatrix top_;
        CMatrix b_;
        double identity_weight_ = 0.0;
        double scale_ = 1.0;
        bool has_identity_ = false;
        Eigen::Index n_ = 0;
        Eigen::Index l_ = 0;
    };
}

#endif

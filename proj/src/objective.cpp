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

#include "dfrc/objective.hpp"

#include <cmath>
#include <string>

namespace dfrc
{
    LsObjective::LsObjective(CMatrix a, CMatrix b, double scale)
        : top_(std::move(a)), b_(std::move(b)), scale_(scale)
    {
        require_shape(top_.rows() >= 1 && top_.cols() >= 1, "LsObjective: empty A");
        require_shape(b_.rows() == top_.rows(), "LsObjective: A and B row counts differ");
        require_shape(b_.cols() >= 1, "LsObjective: B has no columns");
        require_domain(scale_ > 0.0 && std::isfinite(scale_), "LsObjective: scale must be positive");
        n_ = top_.cols();
        l_ = b_.cols();
    }

    LsObjective LsObjective::stacked(CMatrix top, double identity_weight, CMatrix b, double scale)
    {
        require_domain(scale > 0.0 && std::isfinite(scale), "LsObjective: scale must be positive");
        require_shape(top.cols() >= 1, "LsObjective: empty A");
        require_shape(b.rows() == top.rows() + top.cols(), "LsObjective: B must have K + N rows");
        require_shape(b.cols() >= 1, "LsObjective: B has no columns");
        LsObjective obj;
        obj.n_ = top.cols();
        obj.l_ = b.cols();
        obj.top_ = std::move(top);
        obj.b_ = std::move(b);
        obj.identity_weight_ = identity_weight;
        obj.scale_ = scale;
        obj.has_identity_ = true;
        return obj;
    }

    void LsObjective::check_dims(const CVector &x) const
    {
        if (x.size() != n_ * l_)
            throw DimensionError("LsObjective: x has length " + std::to_string(x.size()) + ", expected " +
                                 std::to_string(n_ * l_));
    }

    CMatrix LsObjective::apply(const CMatrix &x_mat) const
    {
        require_shape(x_mat.rows() == n_, "LsObjective::apply: X row count mismatch");
        const Eigen::Index k = top_.rows();
        CMatrix out(k + (has_identity_ ? n_ : 0), x_mat.cols());
        out.topRows(k).noalias() = top_ * x_mat;
        if (has_identity_)
            out.bottomRows(n_) = identity_weight_ * x_mat;
        return out;
    }

    CMatrix LsObjective::residual(const CVector &x) const
    {
        check_dims(x);
        const Eigen::Map<const CMatrix> x_mat(x.data(), n_, l_);
        const Eigen::Index k = top_.rows();
        CMatrix r(b_.rows(), l_);
        r.topRows(k).noalias() = (scale_ * top_) * x_mat;
        r.topRows(k) -= b_.topRows(k);
        if (has_identity_)
            r.bottomRows(n_) = (scale_ * identity_weight_) * x_mat - b_.bottomRows(n_);
        return r;
    }

    double LsObjective::curvature(const CVector &d) const
    {
        check_dims(d);
        const Eigen::Map<const CMatrix> d_mat(d.data(), n_, l_);
        double c = (top_ * d_mat).squaredNorm();
        if (has_identity_)
            c += identity_weight_ * identity_weight_ * d_mat.squaredNorm();
        return scale_ * scale_ * c;
    }

    // The identity block of the residual is formed lazily inside each expression; only the K x L
    // top block is stored.
    double LsObjective::value(const CVector &x) const
    {
        check_dims(x);
        const Eigen::Map<const CMatrix> x_mat(x.data(), n_, l_);
        const Eigen::Index k = top_.rows();
        double v = ((scale_ * top_) * x_mat - b_.topRows(k)).squaredNorm();
        if (has_identity_)
            v += ((scale_ * identity_weight_) * x_mat - b_.bottomRows(n_)).squaredNorm();
        return v;
    }

    CVector LsObjective::gradient(const CVector &x) const
    {
        CVector g;
        value_and_gradient(x, g);
        return g;
    }

    double LsObjective::value_and_gradient(const CVector &x, CVector &grad) const
    {
        check_dims(x);
        const Eigen::Map<const CMatrix> x_mat(x.data(), n_, l_);
        const Eigen::Index k = top_.rows();
        CMatrix r_top(k, l_);
        r_top.noalias() = (scale_ * top_) * x_mat;
        r_top -= b_.topRows(k);
        double v = r_top.squaredNorm();

        grad.resize(n_ * l_);
        Eigen::Map<CMatrix> g_mat(grad.data(), n_, l_);
        g_mat.noalias() = (2.0 * scale_) * (top_.adjoint() * r_top);
        if (has_identity_)
        {
            const double sw = scale_ * identity_weight_;
            const auto r_bottom = sw * x_mat - b_.bottomRows(n_);
            v += r_bottom.squaredNorm();
            g_mat += (2.0 * sw) * r_bottom;
        }
        return v;
    }
}

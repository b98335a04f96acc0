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

#include "dfrc/manifold.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace dfrc::manifold
{
    namespace
    {
        constexpr double kMinRetractModulus = 1e-300;

        bool same_base(const CirclePoint &a, const CirclePoint &b)
        {
            return &a == &b || (a.size() == b.size() && a.entries() == b.entries());
        }
    }

    namespace kernel
    {
        // The elementwise kernels use real arithmetic: std::complex multiply and abs carry
        // inf/nan recovery paths that dominate the O(NL) part of an iteration.

        void project_inplace(const CVector &x, CVector &w)
        {
            require_shape(x.size() == w.size(), "project_to_tangent: dimension mismatch");
            const double *xp = reinterpret_cast<const double *>(x.data());
            double *wp = reinterpret_cast<double *>(w.data());
            for (Eigen::Index i = 0; i < 2 * x.size(); i += 2)
            {
                const double radial = wp[i] * xp[i] + wp[i + 1] * xp[i + 1];
                wp[i] -= radial * xp[i];
                wp[i + 1] -= radial * xp[i + 1];
            }
        }

        void retract_into(const CVector &x, double t, const CVector &w, CVector &out)
        {
            require_shape(x.size() == w.size(), "retract: dimension mismatch");
            out.resize(x.size());
            const double *xp = reinterpret_cast<const double *>(x.data());
            const double *wp = reinterpret_cast<const double *>(w.data());
            double *op = reinterpret_cast<double *>(out.data());
            for (Eigen::Index i = 0; i < 2 * x.size(); i += 2)
            {
                const double re = xp[i] + t * wp[i], im = xp[i + 1] + t * wp[i + 1];
                const double sq = re * re + im * im;
                // below 1e-150 the squares lose precision; hypot keeps the modulus exact
                const double mod = sq > 1e-300 ? std::sqrt(sq) : std::hypot(re, im);
                if (!(mod >= kMinRetractModulus))
                    throw ZeroSumEntry("retract: |x_i + w_i| vanishes at index " + std::to_string(i / 2));
                op[i] = re / mod;
                op[i + 1] = im / mod;
            }
        }

        CVector retract(const CVector &x, const CVector &w)
        {
            CVector out;
            retract_into(x, 1.0, w, out);
            return out;
        }

        double inner(const CVector &u, const CVector &v)
        {
            require_shape(u.size() == v.size(), "metric_inner: dimension mismatch");
            // Re(sum u_i conj(v_i)) is the real dot product of the interleaved coordinates
            const Eigen::Map<const Eigen::VectorXd> ur(reinterpret_cast<const double *>(u.data()), 2 * u.size());
            const Eigen::Map<const Eigen::VectorXd> vr(reinterpret_cast<const double *>(v.data()), 2 * v.size());
            return ur.dot(vr);
        }
    }

    CirclePoint::CirclePoint(CVector entries) : entries_(std::move(entries))
    {
        require_shape(entries_.size() >= 1, "CirclePoint: empty vector");
        for (Eigen::Index i = 0; i < entries_.size(); ++i)
        {
            if (!(std::abs(std::abs(entries_[i]) - 1.0) <= kModulusTol))
                throw DomainError("CirclePoint: entry " + std::to_string(i) + " is not unit modulus");
        }
    }

    CirclePoint CirclePoint::normalized(const CVector &raw)
    {
        require_shape(raw.size() >= 1, "CirclePoint: empty vector");
        return CirclePoint(kernel::retract(CVector::Zero(raw.size()), raw), Unchecked{});
    }

    TangentVector::TangentVector(CirclePoint base, CVector entries)
        : base_(std::move(base)), entries_(std::move(entries))
    {
        require_shape(base_.size() == entries_.size(), "TangentVector: dimension mismatch");
        const CVector &x = base_.entries();
        for (Eigen::Index i = 0; i < x.size(); ++i)
        {
            const double radial = (entries_[i] * std::conj(x[i])).real();
            if (!(std::abs(radial) <= kModulusTol * std::max(1.0, std::abs(entries_[i]))))
                throw DomainError("TangentVector: entry " + std::to_string(i) + " is not tangent");
        }
    }

    TangentVector project_to_tangent(const CirclePoint &x, const CVector &w)
    {
        CVector out = w;
        kernel::project_inplace(x.entries(), out);
        return TangentVector(x, std::move(out), TangentVector::Unchecked{});
    }

    CirclePoint retract(const CirclePoint &x, const CVector &w)
    {
        return CirclePoint(kernel::retract(x.entries(), w), CirclePoint::Unchecked{});
    }

    CirclePoint retract(const CirclePoint &x, const TangentVector &w)
    {
        require_shape(same_base(x, w.base()), "retract: tangent vector attached to a different point");
        return retract(x, w.entries());
    }

    CVector euclidean_gradient(const LsObjective &obj, const CirclePoint &x)
    {
        return obj.gradient(x.entries());
    }

    TangentVector riemannian_gradient(const LsObjective &obj, const CirclePoint &x)
    {
        return project_to_tangent(x, euclidean_gradient(obj, x));
    }

    double metric_inner(const TangentVector &u, const TangentVector &v)
    {
        require_shape(u.size() == v.size(), "metric_inner: dimension mismatch");
        require_shape(same_base(u.base(), v.base()), "metric_inner: base points differ");
        return kernel::inner(u.entries(), v.entries());
    }

    double norm(const TangentVector &u)
    {
        return u.entries().norm();
    }

    CirclePoint random_point(Eigen::Index n, std::uint64_t seed)
    {
        require_shape(n >= 1, "random_point: n must be positive");
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
        CVector x(n);
        for (Eigen::Index i = 0; i < n; ++i)
            x[i] = std::polar(1.0, phase(gen));
        return CirclePoint(std::move(x));
    }
}

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

#ifndef DFRC_MANIFOLD_HPP
#define DFRC_MANIFOLD_HPP

#include <cstdint>

#include "dfrc/objective.hpp"
#include "dfrc/types.hpp"

namespace dfrc::manifold
{
    inline constexpr double kModulusTol = 1e-12;

    // Point on the complex circle manifold { x in C^n : |x_i| = 1 }.
    class CirclePoint
    {
    public:
        // Throws DomainError if any |x_i| deviates from 1 by more than kModulusTol.
        explicit CirclePoint(CVector entries);

        // Divides every entry by its modulus (ZeroSumEntry on a zero entry).
        static CirclePoint normalized(const CVector &raw);

        const CVector &entries() const { return entries_; }
        Eigen::Index size() const { return entries_.size(); }

    private:
        struct Unchecked
        {
        };
        CirclePoint(CVector entries, Unchecked) : entries_(std::move(entries)) {}

        CVector entries_;

        friend CirclePoint retract(const CirclePoint &, const CVector &);
    };

    // Element of T_x M = { w : Re(w o conj(x)) = 0 }.
    class TangentVector
    {
    public:
        // Checks tangency relative to max(1, |w_i|) at tolerance kModulusTol.
        TangentVector(CirclePoint base, CVector entries);

        const CirclePoint &base() const { return base_; }
        const CVector &entries() const { return entries_; }
        Eigen::Index size() const { return entries_.size(); }

    private:
        struct Unchecked
        {
        };
        TangentVector(CirclePoint base, CVector entries, Unchecked)
            : base_(std::move(base)), entries_(std::move(entries)) {}

        CirclePoint base_;
        CVector entries_;

        friend TangentVector project_to_tangent(const CirclePoint &, const CVector &);
    };

    // w - Re(w o conj(x)) o x
    TangentVector project_to_tangent(const CirclePoint &x, const CVector &w);

    // Elementwise (x_i + w_i) / |x_i + w_i|
    CirclePoint retract(const CirclePoint &x, const CVector &w);
    CirclePoint retract(const CirclePoint &x, const TangentVector &w);

    // 2 A~^H (A~ x - b~), evaluated blockwise
    CVector euclidean_gradient(const LsObjective &obj, const CirclePoint &x);

    TangentVector riemannian_gradient(const LsObjective &obj, const CirclePoint &x);

    // Re <u, v> = sum_i Re(u_i conj(v_i)); both vectors must share a base point
    double metric_inner(const TangentVector &u, const TangentVector &v);

    double norm(const TangentVector &u);

    // Uniform phases on [0, 2 pi), deterministic in the seed
    CirclePoint random_point(Eigen::Index n, std::uint64_t seed);

    // Kernels on raw vectors, shared by the typed API above and the solvers.
    namespace kernel
    {
        void project_inplace(const CVector &x, CVector &w);
        CVector retract(const CVector &x, const CVector &w);
        // out = retract(x, t w) without forming t w; out must not alias x or w
        void retract_into(const CVector &x, double t, const CVector &w, CVector &out);
        double inner(const CVector &u, const CVector &v);
    }
}

#endif

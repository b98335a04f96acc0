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

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/non_central_chi_squared.hpp>

namespace dfrc::metrics
{
    double marcum_q1(double a, double b)
    {
        require_domain(a >= 0.0 && b >= 0.0 && std::isfinite(a) && std::isfinite(b), "marcum_q1: arguments must be finite and non-negative");
        if (b == 0.0)
            return 1.0;
        if (a == 0.0)
            return std::exp(-0.5 * b * b);
        // Q_1(a, b) = P[X > b^2], X ~ noncentral chi-square, 2 dof, noncentrality a^2
        const boost::math::non_central_chi_squared dist(2.0, a * a);
        return boost::math::cdf(boost::math::complement(dist, b * b));
    }

    double detection_probability(double snr_linear, double p_fa)
    {
        require_domain(p_fa > 0.0 && p_fa < 1.0, "detection_probability: p_fa must lie in (0, 1)");
        require_domain(snr_linear >= 0.0 && !std::isnan(snr_linear), "detection_probability: snr must be non-negative");
        if (snr_linear == 0.0)
            return p_fa;
        if (std::isinf(snr_linear))
            return 1.0;
        const double pd = marcum_q1(std::sqrt(2.0 * snr_linear), std::sqrt(-2.0 * std::log(p_fa)));
        return std::clamp(pd, p_fa, 1.0);
    }
}

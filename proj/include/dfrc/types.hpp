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

#ifndef DFRC_TYPES_HPP
#define DFRC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dfrc
{
    using cplx = std::complex<double>;
    using CMatrix = Eigen::MatrixXcd;
    using CVector = Eigen::VectorXcd;
    using RVector = Eigen::VectorXd;

    // Shape or length disagreement between operands
    class DimensionError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Parameter outside its admissible range (rho, power, tolerances, ...)
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // x_i + w_i vanished inside the retraction
    class ZeroSumEntry : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    class NotDescentDirection : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class BacktrackExhausted : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Linear system or SVD could not be solved (singular / non-finite input)
    class NumericalError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Literal messages stay const char * so a passing check never allocates
    inline void require_shape(bool ok, const char *what)
    {
        if (!ok)
            throw DimensionError(what);
    }

    inline void require_shape(bool ok, const std::string &what)
    {
        if (!ok)
            throw DimensionError(what);
    }

    inline void require_domain(bool ok, const char *what)
    {
        if (!ok)
            throw DomainError(what);
    }

    inline void require_domain(bool ok, const std::string &what)
    {
        if (!ok)
            throw DomainError(what);
    }
}

#endif

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

#ifndef DFRC_CSV_HPP
#define DFRC_CSV_HPP

#include <string>
#include <vector>

#include "dfrc/sim.hpp"

namespace dfrc::io
{
    // Shortest decimal string that parses back to the same double
    std::string format_number(double v);

    // snr_db,ser,n_symbols,ci_halfwidth,method
    std::string ser_csv(const sim::ExperimentResult &res);

    // snr_db,pd,method
    std::string radar_csv(const sim::ExperimentResult &res);

    // angle_deg,power_watts,method
    std::string beampattern_csv(const sim::RadarResult &res);

    // rho,mean_mui,mean_orth_err
    std::string sweep_csv(const sim::TradeoffResult &res);

    // One row per antenna, one column per snapshot; each cell is the quoted pair "re,im"
    std::string waveform_csv(const CMatrix &x);

    // iteration,objective
    std::string trace_csv(const std::vector<double> &trace);

    // RFC 4180 style reader (double-quoted fields may contain commas)
    std::vector<std::vector<std::string>> parse_csv(const std::string &text);

    // Inverse of waveform_csv
    CMatrix parse_waveform_csv(const std::string &text);
}

#endif

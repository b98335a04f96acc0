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

#ifndef DFRC_TOOLS_COMMANDS_HPP
#define DFRC_TOOLS_COMMANDS_HPP

#include <stdexcept>
#include <string>

#include "config.hpp"

namespace dfrc::cli
{
    enum ExitCode : int
    {
        kOk = 0,
        kConfigError = 2,
        kSolverFailure = 3,
        kIoError = 4
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Raised for configuration problems found after parsing (for example a missing --method)
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    inline constexpr const char *kToolVersion = "0.1.0";

    // Each command writes its CSV files and a manifest_<command>.json into opt.out_dir and a short
    // summary on stdout.
    void cmd_synth(const Options &opt);
    void cmd_ser(const Options &opt);
    void cmd_radar(const Options &opt);
    void cmd_sweep(const Options &opt);
}

#endif

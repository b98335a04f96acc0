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

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char **argv)
{
    using namespace dfrc::cli;

    CLI::App app{"Constant-modulus DFRC waveform synthesis and Monte-Carlo evaluation", "dfrc"};
    app.set_version_flag("--version", kToolVersion);
    Options opt;
    register_options(app, opt);
    app.fallthrough();
    app.require_subcommand(1);
    auto *synth = app.add_subcommand("synth", "Synthesize one waveform and report its metrics");
    auto *ser = app.add_subcommand("ser", "SER versus SNR for each method");
    auto *radar = app.add_subcommand("radar", "Detection probability and beampattern for each method");
    auto *sweep = app.add_subcommand("sweep", "AltMin trade-off over the communication weight");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion &e)
    {
        return app.exit(e);
    }
    catch (const CLI::FileError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kConfigError;
    }

    try
    {
        if (synth->parsed())
            cmd_synth(opt);
        else if (ser->parsed())
            cmd_ser(opt);
        else if (radar->parsed())
            cmd_radar(opt);
        else if (sweep->parsed())
            cmd_sweep(opt);
        return kOk;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "error: " << e.what() << "\n"
                  << "usage: dfrc synth --method <closed-form|cm-rcg|cm-altmin|cm-zf> [options]; see dfrc --help\n";
        return kConfigError;
    }
    catch (const dfrc::DomainError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    catch (const dfrc::DimensionError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    catch (const IoError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    }
    catch (const dfrc::sim::FailureBudgetExceeded &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverFailure;
    }
    catch (const std::exception &e)
    {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kSolverFailure;
    }
}

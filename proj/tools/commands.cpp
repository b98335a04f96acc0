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

#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "dfrc/csv.hpp"
#include "dfrc/metrics.hpp"
#include "dfrc/random.hpp"

namespace dfrc::cli
{
    namespace
    {
        namespace fs = std::filesystem;
        using json = nlohmann::ordered_json;
        using clock = std::chrono::steady_clock;

        json scenario_json(const sim::Scenario &sc)
        {
            json methods = json::array();
            for (auto m : sc.methods)
                methods.push_back(sim::to_string(m));
            return json{
                {"n_antennas", sc.n_antennas},
                {"n_users", sc.n_users},
                {"frame_length", sc.frame_length},
                {"total_power", sc.total_power},
                {"rho", sc.rho},
                {"snr_grid_db", sc.snr_grid_db},
                {"n_frames", sc.n_frames},
                {"noise_draws", sc.noise_draws},
                {"methods", methods},
                {"target_angle_deg", sc.target_angle_deg},
                {"p_fa", sc.p_fa},
                {"gain_quantile", sc.gain_quantile},
                {"spacing_wavelengths", sc.spacing_wavelengths},
                {"max_failure_fraction", sc.max_failure_fraction},
                {"max_redraws", sc.max_redraws},
                {"channel_seed", sc.channel_seed},
                {"symbol_seed", sc.symbol_seed},
                {"noise_seed", sc.noise_seed},
                {"solver",
                 {{"epsilon", sc.solver.epsilon},
                  {"k_max", sc.solver.k_max},
                  {"eta", sc.solver.eta},
                  {"n_max", sc.solver.n_max},
                  {"armijo_c", sc.solver.armijo_c},
                  {"armijo_shrink", sc.solver.armijo_shrink},
                  {"armijo_initial_step", sc.solver.armijo_initial_step},
                  {"armijo_max_backtracks", sc.solver.armijo_max_backtracks},
                  {"seed", sc.solver.seed}}},
            };
        }

        fs::path prepare_out_dir(const Options &opt)
        {
            std::error_code ec;
            fs::create_directories(opt.out_dir, ec);
            if (ec || !fs::is_directory(opt.out_dir))
                throw IoError("cannot create output directory '" + opt.out_dir + "'");
            return fs::path(opt.out_dir);
        }

        void write_file(const fs::path &path, const std::string &text)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open '" + path.string() + "' for writing");
            out << text;
            out.close();
            if (!out)
                throw IoError("write to '" + path.string() + "' failed");
        }

        class Manifest
        {
        public:
            Manifest(std::string command, const Options &opt, const sim::Scenario &sc)
                : start_(clock::now())
            {
                doc_["command"] = std::move(command);
                doc_["tool_version"] = kToolVersion;
                doc_["base_seed"] = opt.seed;
                doc_["workers"] = opt.workers;
                doc_["scenario"] = scenario_json(sc);
                doc_["outputs"] = json::array();
            }

            void add_output(const fs::path &p) { doc_["outputs"].push_back(p.filename().string()); }
            json &operator[](const char *key) { return doc_[key]; }

            void write(const fs::path &dir, int failures, int non_converged)
            {
                doc_["failures"] = failures;
                doc_["non_converged"] = non_converged;
                doc_["wall_clock_seconds"] = std::chrono::duration<double>(clock::now() - start_).count();
                const std::string name = "manifest_" + doc_["command"].get<std::string>() + ".json";
                write_file(dir / name, doc_.dump(2) + "\n");
            }

        private:
            json doc_;
            clock::time_point start_;
        };

        void emit(Manifest &manifest, const fs::path &dir, const std::string &name, const std::string &text)
        {
            write_file(dir / name, text);
            manifest.add_output(dir / name);
            std::cout << "wrote " << (dir / name).string() << "\n";
        }
    }

    void cmd_synth(const Options &opt)
    {
        if (opt.methods.size() != 1)
            throw ConfigError("synth requires exactly one --method");
        sim::Scenario sc = make_scenario(opt);
        const sim::Method method = sc.methods.front();
        const fs::path dir = prepare_out_dir(opt);
        Manifest manifest("synth", opt, sc);

        const CMatrix h = sim::gen_channel(sc.n_users, sc.n_antennas, sc.channel_seed);
        const auto symbols = sim::gen_symbols(sc.n_users, sc.frame_length, sc.symbol_seed);
        const auto syn = sim::synthesize(method, h, symbols.entries, sc.rho, sc.total_power, sc.solver);
        const CMatrix &x = syn.waveform;

        const double mui = metrics::mui_energy(h, x, symbols.entries);
        const double orth = metrics::orthogonality_error(x, sc.total_power);
        const double cm = metrics::constant_modulus_error(x, sc.total_power);
        json m{{"method", sim::to_string(method)},
               {"mui_energy", mui},
               {"orthogonality_error", orth},
               {"constant_modulus_error", cm}};

        emit(manifest, dir, "waveform.csv", io::waveform_csv(x));
        if (syn.altmin)
        {
            emit(manifest, dir, "trace.csv", io::trace_csv(syn.altmin->objective_trace));
            m["objective"] = syn.altmin->objective_trace.back();
            m["iterations"] = syn.altmin->iterations;
        }
        m["converged"] = syn.converged;
        manifest["metrics"] = m;
        manifest.write(dir, 0, syn.converged ? 0 : 1);

        std::cout << "method " << sim::to_string(method) << "\n"
                  << "mui_energy " << io::format_number(mui) << "\n"
                  << "orthogonality_error " << io::format_number(orth) << "\n"
                  << "constant_modulus_error " << io::format_number(cm) << "\n";
        if (syn.altmin)
            std::cout << "objective " << io::format_number(syn.altmin->objective_trace.back()) << "\n"
                      << "iterations " << syn.altmin->iterations << "\n";
        std::cout << "converged " << (syn.converged ? "true" : "false") << "\n";
        if (!syn.converged)
            std::cerr << "warning: solver stopped at its iteration cap before reaching tolerance\n";
    }

    void cmd_ser(const Options &opt)
    {
        const sim::Scenario sc = make_scenario(opt);
        const fs::path dir = prepare_out_dir(opt);
        Manifest manifest("ser", opt, sc);
        const auto res = sim::run_ser_experiment(sc, opt.workers);
        emit(manifest, dir, "ser.csv", io::ser_csv(res));
        manifest["frames_used"] = res.frames_used;
        manifest.write(dir, res.failures, res.non_converged);
        std::cout << "frames " << res.frames_used << " failures " << res.failures << " non_converged "
                  << res.non_converged << "\n";
    }

    void cmd_radar(const Options &opt)
    {
        const sim::Scenario sc = make_scenario(opt);
        const fs::path dir = prepare_out_dir(opt);
        Manifest manifest("radar", opt, sc);
        const auto res = sim::run_radar_experiment(sc, opt.workers);
        emit(manifest, dir, "radar.csv", io::radar_csv(res.detection));
        emit(manifest, dir, "beampattern.csv", io::beampattern_csv(res));
        json gains = json::object();
        for (std::size_t m = 0; m < res.detection.curves.size(); ++m)
            gains[sim::to_string(res.detection.curves[m].method)] = {{"mean_log_gain", res.mean_log_gain[m]},
                                                                     {"quantile_log_gain", res.quantile_log_gain[m]}};
        manifest["target_gain"] = gains;
        manifest["frames_used"] = res.detection.frames_used;
        manifest.write(dir, res.detection.failures, res.detection.non_converged);
        std::cout << "frames " << res.detection.frames_used << " failures " << res.detection.failures
                  << " non_converged " << res.detection.non_converged << "\n";
    }

    void cmd_sweep(const Options &opt)
    {
        sim::Scenario sc = make_scenario(opt);
        sc.methods = {sim::Method::CmAltMin};
        const fs::path dir = prepare_out_dir(opt);
        Manifest manifest("sweep", opt, sc);
        manifest["rho_list"] = opt.rho_list;
        const auto res = sim::run_tradeoff_sweep(sc, opt.rho_list, opt.workers);
        emit(manifest, dir, "sweep.csv", io::sweep_csv(res));
        manifest.write(dir, res.failures, res.non_converged);
        for (const auto &row : res.rows)
            std::cout << "rho " << io::format_number(row.rho) << " mean_mui " << io::format_number(row.mean_mui)
                      << " mean_orth_err " << io::format_number(row.mean_orth_err) << "\n";
    }
}

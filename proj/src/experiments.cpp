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

#include "dfrc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "dfrc/parallel.hpp"

namespace dfrc::sim
{
    namespace
    {
        struct Job
        {
            Method method;
            double rho;
        };

        struct FrameDraw
        {
            CMatrix channel;
            CMatrix symbols;
            std::vector<solvers::WaveformMatrix> waveforms; // one per job
            int attempt = 0;
            int failures = 0;
            int non_converged = 0; // syntheses of the accepted attempt that stopped at an iteration cap
            bool ok = false;
        };

        // Draws (H, S) for `frame` and synthesizes every job; a failing attempt is re-drawn with the next sub-seed.
        FrameDraw draw_frame(const Scenario &sc, int frame, const std::vector<Job> &jobs)
        {
            FrameDraw fd;
            const auto f = static_cast<std::uint64_t>(frame);
            for (int a = 0; a <= sc.max_redraws; ++a)
            {
                const auto att = static_cast<std::uint64_t>(a);
                fd.attempt = a;
                fd.channel = gen_channel(sc.n_users, sc.n_antennas, derive_seed(sc.channel_seed, {f, att}));
                fd.symbols = gen_symbols(sc.n_users, sc.frame_length, derive_seed(sc.symbol_seed, {f, att})).entries;
                auto cfg = sc.solver;
                cfg.seed = derive_seed(sc.solver.seed, {f, att});
                fd.waveforms.clear();
                fd.non_converged = 0;
                try
                {
                    for (const auto &job : jobs)
                    {
                        // an iteration cap still yields a valid constant-modulus waveform; only errors are redrawn
                        auto syn = synthesize(job.method, fd.channel, fd.symbols, job.rho, sc.total_power, cfg);
                        fd.non_converged += syn.converged ? 0 : 1;
                        fd.waveforms.push_back(std::move(syn.waveform));
                    }
                    fd.ok = true;
                    return fd;
                }
                catch (const std::exception &)
                {
                    ++fd.failures;
                }
            }
            return fd;
        }

        void check_failure_budget(const Scenario &sc, int failures)
        {
            if (static_cast<double>(failures) > sc.max_failure_fraction * static_cast<double>(sc.n_frames))
            {
                std::ostringstream msg;
                msg << failures << " synthesis attempts threw over " << sc.n_frames << " frames; budget is "
                    << sc.max_failure_fraction << " x n_frames";
                throw FailureBudgetExceeded(msg.str());
            }
        }

        std::vector<Job> method_jobs(const Scenario &sc)
        {
            std::vector<Job> jobs;
            for (auto m : sc.methods)
                jobs.push_back({m, sc.rho});
            return jobs;
        }

        // Neumaier-compensated running sum
        struct KahanSum
        {
            double sum = 0.0, c = 0.0;
            void add(double v)
            {
                const double t = sum + v;
                if (std::abs(sum) >= std::abs(v))
                    c += (sum - t) + v;
                else
                    c += (v - t) + sum;
                sum = t;
            }
            double value() const { return sum + c; }
        };
    }

    std::string to_string(Method m)
    {
        switch (m)
        {
        case Method::ClosedForm:
            return "closed-form";
        case Method::CmRcg:
            return "cm-rcg";
        case Method::CmAltMin:
            return "cm-altmin";
        case Method::CmZf:
            return "cm-zf";
        }
        return "unknown";
    }

    Method parse_method(const std::string &label)
    {
        for (auto m : all_methods())
            if (to_string(m) == label)
                return m;
        throw DomainError("unknown method '" + label + "' (expected closed-form, cm-rcg, cm-altmin or cm-zf)");
    }

    std::vector<Method> all_methods()
    {
        return {Method::ClosedForm, Method::CmRcg, Method::CmAltMin, Method::CmZf};
    }

    void Scenario::validate() const
    {
        require_domain(n_users >= 1, "scenario: K must be at least 1");
        require_domain(n_antennas >= n_users, "scenario: N must be at least K");
        require_domain(frame_length >= n_antennas, "scenario: L must be at least N");
        require_domain(total_power > 0.0 && std::isfinite(total_power), "scenario: P_T must be positive");
        require_domain(rho >= 0.0 && rho <= 1.0, "scenario: rho must lie in [0, 1]");
        require_domain(n_frames >= 1, "scenario: n_frames must be at least 1");
        require_domain(noise_draws >= 1, "scenario: noise_draws must be at least 1");
        require_domain(!methods.empty(), "scenario: no methods selected");
        require_domain(p_fa > 0.0 && p_fa < 1.0, "scenario: p_fa must lie in (0, 1)");
        require_domain(gain_quantile > 0.0 && gain_quantile < 1.0, "scenario: gain_quantile must lie in (0, 1)");
        require_domain(spacing_wavelengths > 0.0, "scenario: element spacing must be positive");
        require_domain(max_failure_fraction >= 0.0, "scenario: failure fraction must be non-negative");
        require_domain(max_redraws >= 0, "scenario: max_redraws must be non-negative");
        for (double s : snr_grid_db)
            require_domain(std::isfinite(s), "scenario: SNR grid must be finite");
        solver.validate();
    }

    void apply_base_seed(Scenario &sc, std::uint64_t seed)
    {
        sc.channel_seed = derive_seed(seed, {1});
        sc.symbol_seed = derive_seed(seed, {2});
        sc.noise_seed = derive_seed(seed, {3});
        sc.solver.seed = derive_seed(seed, {4});
    }

    solvers::WaveformMatrix cm_zf_waveform(const CMatrix &channel, const CMatrix &symbols, double total_power)
    {
        require_shape(channel.rows() == symbols.rows(), "cm_zf_waveform: H and S user counts differ");
        require_domain(total_power > 0.0, "cm_zf_waveform: total power must be positive");
        const Eigen::Index n = channel.cols();
        const CMatrix gram = channel * channel.adjoint();
        Eigen::FullPivLU<CMatrix> lu(gram);
        if (!lu.isInvertible())
            throw NumericalError("cm_zf_waveform: H H^H is singular");
        CMatrix x = channel.adjoint() * lu.solve(symbols);
        const double amp = std::sqrt(total_power / static_cast<double>(n));
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            for (Eigen::Index i = 0; i < x.rows(); ++i)
            {
                const double mod = std::abs(x(i, j));
                x(i, j) = mod > 0.0 ? amp * (x(i, j) / mod) : cplx(amp, 0.0);
            }
        return x;
    }

    solvers::AuxiliaryUnitary fixed_unitary(Eigen::Index n_antennas, Eigen::Index frame_length, double total_power)
    {
        require_shape(frame_length >= n_antennas, "fixed_unitary: L must be at least N");
        const double amp = std::sqrt(static_cast<double>(frame_length) * total_power / static_cast<double>(n_antennas));
        return amp * CMatrix::Identity(n_antennas, frame_length);
    }

    solvers::RcgResult cm_rcg_solve(const CMatrix &channel, const CMatrix &symbols, double rho, double total_power,
                                    const solvers::SolverConfig &cfg)
    {
        const Eigen::Index n = channel.cols(), l = symbols.cols();
        const auto aux = fixed_unitary(n, l, total_power);
        const auto sp = solvers::build_stacked(channel, symbols, aux, rho, total_power);
        return solvers::rcg_solve(solvers::vectorize_problem(sp), manifold::random_point(n * l, cfg.seed), cfg);
    }

    solvers::WaveformMatrix cm_rcg_waveform(const CMatrix &channel, const CMatrix &symbols, double rho,
                                            double total_power, const solvers::SolverConfig &cfg)
    {
        const auto res = cm_rcg_solve(channel, symbols, rho, total_power, cfg);
        return solvers::devectorize(res.x, channel.cols(), symbols.cols(), total_power);
    }

    Synthesis synthesize(Method method, const CMatrix &channel, const CMatrix &symbols, double rho,
                         double total_power, const solvers::SolverConfig &cfg)
    {
        Synthesis out;
        switch (method)
        {
        case Method::ClosedForm:
            out.waveform = solvers::solve_mui_orthogonal(channel, symbols, total_power);
            break;
        case Method::CmRcg:
        {
            const auto res = cm_rcg_solve(channel, symbols, rho, total_power, cfg);
            out.waveform = solvers::devectorize(res.x, channel.cols(), symbols.cols(), total_power);
            out.converged = res.grad_norm < cfg.epsilon;
            break;
        }
        case Method::CmAltMin:
        {
            auto res = solvers::altmin(channel, symbols, rho, total_power, cfg);
            out.waveform = res.waveform;
            out.converged = res.converged && res.capped_inner_solves == 0;
            out.altmin = std::move(res);
            break;
        }
        case Method::CmZf:
            out.waveform = cm_zf_waveform(channel, symbols, total_power);
            break;
        }
        return out;
    }

    ExperimentResult run_ser_experiment(const Scenario &sc, int workers)
    {
        sc.validate();
        require_domain(!sc.snr_grid_db.empty(), "run_ser_experiment: empty SNR grid");
        const auto jobs = method_jobs(sc);
        const std::size_t n_m = jobs.size(), n_s = sc.snr_grid_db.size();
        const auto qpsk = metrics::Constellation::qpsk();

        struct FrameOut
        {
            std::vector<long> errors; // [method][snr]
            int failures = 0;
            int non_converged = 0;
            bool ok = false;
        };
        std::vector<FrameOut> frames(static_cast<std::size_t>(sc.n_frames));

        for_each_frame(sc.n_frames, workers, [&](int f) {
            auto fd = draw_frame(sc, f, jobs);
            auto &out = frames[static_cast<std::size_t>(f)];
            out.failures = fd.failures;
            out.non_converged = fd.non_converged;
            out.ok = fd.ok;
            if (!fd.ok)
                return;
            std::vector<CMatrix> clean;
            for (const auto &x : fd.waveforms)
                clean.push_back(fd.channel * x);
            out.errors.assign(n_m * n_s, 0);
            for (std::size_t s = 0; s < n_s; ++s)
            {
                const double n0 = sc.total_power / std::pow(10.0, sc.snr_grid_db[s] / 10.0);
                for (int d = 0; d < sc.noise_draws; ++d)
                {
                    const auto seed = derive_seed(sc.noise_seed, {static_cast<std::uint64_t>(f),
                                                                  static_cast<std::uint64_t>(fd.attempt), s,
                                                                  static_cast<std::uint64_t>(d)});
                    const CMatrix z = gen_noise(sc.n_users, sc.frame_length, n0, seed);
                    for (std::size_t m = 0; m < n_m; ++m)
                        out.errors[m * n_s + s] += metrics::count_symbol_errors(clean[m] + z, fd.symbols, qpsk);
                }
            }
        });

        ExperimentResult res;
        std::vector<long> errors(n_m * n_s, 0);
        for (const auto &fo : frames)
        {
            res.failures += fo.failures;
            res.non_converged += fo.non_converged;
            if (!fo.ok)
                continue;
            ++res.frames_used;
            for (std::size_t i = 0; i < errors.size(); ++i)
                errors[i] += fo.errors[i];
        }
        check_failure_budget(sc, res.failures);

        const long n_sym = static_cast<long>(res.frames_used) * sc.noise_draws * static_cast<long>(sc.n_users) *
                           static_cast<long>(sc.frame_length);
        for (std::size_t m = 0; m < n_m; ++m)
        {
            MethodCurve curve{jobs[m].method, {}};
            for (std::size_t s = 0; s < n_s; ++s)
            {
                CurvePoint pt;
                pt.snr_db = sc.snr_grid_db[s];
                pt.n_samples = n_sym;
                if (n_sym > 0)
                {
                    const double p = static_cast<double>(errors[m * n_s + s]) / static_cast<double>(n_sym);
                    pt.value = p;
                    pt.ci_halfwidth = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n_sym));
                }
                curve.points.push_back(pt);
            }
            res.curves.push_back(std::move(curve));
        }
        return res;
    }

    RadarResult run_radar_experiment(const Scenario &sc, int workers)
    {
        sc.validate();
        const auto jobs = method_jobs(sc);
        const std::size_t n_m = jobs.size();
        const CVector a = metrics::steering_vector(sc.n_antennas, sc.target_angle_deg, sc.spacing_wavelengths);

        struct FrameOut
        {
            std::vector<double> log_gain;
            std::vector<CMatrix> cov;
            int failures = 0;
            int non_converged = 0;
            bool ok = false;
        };
        std::vector<FrameOut> frames(static_cast<std::size_t>(sc.n_frames));

        for_each_frame(sc.n_frames, workers, [&](int f) {
            auto fd = draw_frame(sc, f, jobs);
            auto &out = frames[static_cast<std::size_t>(f)];
            out.failures = fd.failures;
            out.non_converged = fd.non_converged;
            out.ok = fd.ok;
            if (!fd.ok)
                return;
            for (const auto &x : fd.waveforms)
            {
                CMatrix r = metrics::covariance(x);
                const double p = std::max(a.dot(r * a).real(), std::numeric_limits<double>::min());
                out.log_gain.push_back(std::log(p / sc.total_power));
                out.cov.push_back(std::move(r));
            }
        });

        RadarResult res;
        std::vector<KahanSum> sum(n_m);
        std::vector<std::vector<double>> gains(n_m);
        std::vector<CMatrix> cov_sum(n_m, CMatrix::Zero(sc.n_antennas, sc.n_antennas));
        for (const auto &fo : frames)
        {
            res.detection.failures += fo.failures;
            res.detection.non_converged += fo.non_converged;
            if (!fo.ok)
                continue;
            ++res.detection.frames_used;
            for (std::size_t m = 0; m < n_m; ++m)
            {
                sum[m].add(fo.log_gain[m]);
                gains[m].push_back(fo.log_gain[m]);
                cov_sum[m] += fo.cov[m];
            }
        }
        check_failure_budget(sc, res.detection.failures);

        const double n_used = static_cast<double>(res.detection.frames_used);
        const auto grid = metrics::default_angle_grid();
        for (std::size_t m = 0; m < n_m; ++m)
        {
            res.mean_log_gain.push_back(n_used > 0 ? sum[m].value() / n_used : 0.0);

            // Lower order statistic of the per-frame gain; the band spans +-3 binomial sd in rank.
            auto &g = gains[m];
            std::sort(g.begin(), g.end());
            const auto at_rank = [&](double r) {
                if (g.empty())
                    return 0.0;
                const double c = std::clamp(std::floor(r), 0.0, static_cast<double>(g.size() - 1));
                return g[static_cast<std::size_t>(c)];
            };
            const double q = sc.gain_quantile;
            const double rank = q * (n_used - 1.0);
            const double spread = 3.0 * std::sqrt(n_used * q * (1.0 - q));
            const double gain = at_rank(rank);
            const double gain_lo = at_rank(rank - spread);
            const double gain_hi = at_rank(rank + spread);
            res.quantile_log_gain.push_back(gain);

            MethodCurve curve{jobs[m].method, {}};
            for (double snr_db : sc.snr_grid_db)
            {
                const double snr = std::pow(10.0, snr_db / 10.0);
                CurvePoint pt;
                pt.snr_db = snr_db;
                pt.n_samples = res.detection.frames_used;
                pt.value = metrics::detection_probability(snr * std::exp(gain), sc.p_fa);
                const double lo = metrics::detection_probability(snr * std::exp(gain_lo), sc.p_fa);
                const double hi = metrics::detection_probability(snr * std::exp(gain_hi), sc.p_fa);
                pt.ci_halfwidth = std::max(pt.value - lo, hi - pt.value);
                curve.points.push_back(pt);
            }
            res.detection.curves.push_back(std::move(curve));

            const CMatrix mean_cov = n_used > 0 ? CMatrix(cov_sum[m] / n_used) : cov_sum[m];
            res.beampatterns.push_back(metrics::beampattern(mean_cov, grid, sc.spacing_wavelengths));
        }
        return res;
    }

    TradeoffResult run_tradeoff_sweep(const Scenario &sc, const std::vector<double> &rho_grid, int workers)
    {
        sc.validate();
        require_domain(!rho_grid.empty(), "run_tradeoff_sweep: empty rho grid");
        std::vector<Job> jobs;
        for (double rho : rho_grid)
        {
            require_domain(rho >= 0.0 && rho <= 1.0, "run_tradeoff_sweep: rho must lie in [0, 1]");
            jobs.push_back({Method::CmAltMin, rho});
        }
        const std::size_t n_r = jobs.size();

        struct FrameOut
        {
            std::vector<double> mui, orth;
            int failures = 0;
            int non_converged = 0;
            bool ok = false;
        };
        std::vector<FrameOut> frames(static_cast<std::size_t>(sc.n_frames));

        for_each_frame(sc.n_frames, workers, [&](int f) {
            auto fd = draw_frame(sc, f, jobs);
            auto &out = frames[static_cast<std::size_t>(f)];
            out.failures = fd.failures;
            out.non_converged = fd.non_converged;
            out.ok = fd.ok;
            if (!fd.ok)
                return;
            for (const auto &x : fd.waveforms)
            {
                out.mui.push_back(metrics::mui_energy(fd.channel, x, fd.symbols));
                out.orth.push_back(metrics::orthogonality_error(x, sc.total_power));
            }
        });

        TradeoffResult res;
        res.rows.resize(n_r);
        for (std::size_t r = 0; r < n_r; ++r)
            res.rows[r].rho = rho_grid[r];
        for (const auto &fo : frames)
        {
            res.failures += fo.failures;
            res.non_converged += fo.non_converged;
            if (!fo.ok)
                continue;
            for (std::size_t r = 0; r < n_r; ++r)
            {
                res.rows[r].mui.push_back(fo.mui[r]);
                res.rows[r].orth_err.push_back(fo.orth[r]);
            }
        }
        check_failure_budget(sc, res.failures);

        for (auto &row : res.rows)
        {
            KahanSum m, o;
            for (double v : row.mui)
                m.add(v);
            for (double v : row.orth_err)
                o.add(v);
            const auto cnt = static_cast<double>(row.mui.size());
            row.mean_mui = cnt > 0 ? m.value() / cnt : 0.0;
            row.mean_orth_err = cnt > 0 ? o.value() / cnt : 0.0;
        }
        return res;
    }
}

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


// Acceptance runner: one PASS/FAIL line per criterion, each under its own runtime budget.
// Usage: acceptance [id ...]   (no ids runs everything)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "cli_runner.hpp"
#include "dfrc/manifold.hpp"
#include "dfrc/metrics.hpp"
#include "dfrc/random.hpp"
#include "dfrc/sim.hpp"
#include "dfrc/solvers.hpp"
#include "oracles.hpp"

using namespace dfrc;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    std::string fmt(const char *f, auto... args)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, f, args...);
        return buf;
    }

    int workers()
    {
        return std::max(1, omp_get_max_threads());
    }

    bool non_increasing(const std::vector<double> &trace, double slack)
    {
        for (std::size_t i = 1; i < trace.size(); ++i)
            if (trace[i] > trace[i - 1] + slack)
                return false;
        return true;
    }

    // w - Re(w conj x) x, written out independently of the library kernel
    CVector tangent_part(const CVector &x, const CVector &w)
    {
        CVector p(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i)
            p[i] = w[i] - (w[i] * std::conj(x[i])).real() * x[i];
        return p;
    }

    double real_inner(const CVector &u, const CVector &v)
    {
        double s = 0.0;
        for (Eigen::Index i = 0; i < u.size(); ++i)
            s += u[i].real() * v[i].real() + u[i].imag() * v[i].imag();
        return s;
    }

    CMatrix dft(Eigen::Index n)
    {
        CMatrix f(n, n);
        for (Eigen::Index j = 0; j < n; ++j)
            for (Eigen::Index k = 0; k < n; ++k)
                f(j, k) = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
        return f;
    }

    Outcome manifold_geometry()
    {
        std::mt19937_64 gen(1001);
        double tangency = 0, idempotence = 0, orthogonality = 0, modulus = 0, zero_step = 0;
        for (int trial = 0; trial < 1000; ++trial)
        {
            std::uniform_int_distribution<int> size(1, 32);
            const Eigen::Index n = size(gen);
            const manifold::CirclePoint x(oracle::random_unit_modulus(n, gen));
            const CVector w = 3.0 * oracle::random_gaussian(n, 1, gen);
            const CVector p = manifold::project_to_tangent(x, w).entries();
            for (Eigen::Index i = 0; i < n; ++i)
                tangency = std::max(tangency, std::abs((p[i] * std::conj(x.entries()[i])).real()));
            idempotence = std::max(idempotence,
                                   (manifold::project_to_tangent(x, p).entries() - p).cwiseAbs().maxCoeff());
            orthogonality = std::max(orthogonality, std::abs(real_inner(w - p, p)));
            const CVector r = manifold::retract(x, p).entries();
            modulus = std::max(modulus, (r.array().abs() - 1.0).abs().maxCoeff());
            zero_step = std::max(zero_step,
                                 (manifold::retract(x, CVector::Zero(n)).entries() - x.entries()).cwiseAbs().maxCoeff());
        }
        const bool ok = tangency < 1e-12 && idempotence < 1e-12 && orthogonality < 1e-10 && modulus < 1e-12 &&
                        zero_step < 1e-12;
        return {ok, fmt("tangency %.1e idempotence %.1e orthogonality %.1e modulus %.1e R(x,0) %.1e", tangency,
                        idempotence, orthogonality, modulus, zero_step)};
    }

    Outcome gradient_check()
    {
        std::mt19937_64 gen(1002);
        double worst = 0.0;
        for (int inst = 0; inst < 100; ++inst)
        {
            std::uniform_int_distribution<int> dn(1, 8), dk(1, 4), dl(1, 16);
            const Eigen::Index n = dn(gen), l = std::max<Eigen::Index>(n, dl(gen)),
                               k = std::min<Eigen::Index>(n, dk(gen));
            const double pt = 1.0 + std::uniform_real_distribution<double>(0.0, 3.0)(gen);
            const double rho = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
            const CMatrix h = oracle::random_gaussian(k, n, gen), s = oracle::random_gaussian(k, l, gen);
            const CMatrix u = oracle::random_row_orthogonal(n, l, static_cast<double>(l) * pt / n, gen);
            const auto obj = solvers::vectorize_problem(solvers::build_stacked(h, s, u, rho, pt));
            const manifold::CirclePoint x(oracle::random_unit_modulus(n * l, gen));

            const CVector fd = tangent_part(
                x.entries(), oracle::fd_gradient([&](const CVector &v) { return obj.value(v); }, x.entries()));
            const CVector g = manifold::riemannian_gradient(obj, x).entries();
            worst = std::max(worst, (g - fd).norm() / std::max(fd.norm(), 1e-12));
        }
        return {worst < 1e-5, fmt("max relative error %.2e over 100 instances", worst)};
    }

    Outcome opp_optimality()
    {
        std::mt19937_64 gen(1003);
        double worst_feas = 0.0, worst_gap = -std::numeric_limits<double>::infinity();
        for (int inst = 0; inst < 50; ++inst)
        {
            std::uniform_int_distribution<int> dn(1, 4), dl(1, 8);
            const Eigen::Index n = dn(gen), l = std::max<Eigen::Index>(n, dl(gen));
            const Eigen::Index k = std::uniform_int_distribution<Eigen::Index>(1, n)(gen);
            const double pt = 1.0;
            const CMatrix h = oracle::random_gaussian(k, n, gen);
            const CMatrix s = sim::gen_symbols(k, l, 7000 + inst).entries;
            const CMatrix x = solvers::solve_mui_orthogonal(h, s, pt);
            const double scale = static_cast<double>(l) * pt / static_cast<double>(n);
            worst_feas = std::max(worst_feas,
                                  (x * x.adjoint() - scale * CMatrix::Identity(n, n)).norm());
            const double mine = metrics::mui_energy(h, x, s);
            double best_random = std::numeric_limits<double>::infinity();
            for (int t = 0; t < 10000; ++t)
                best_random = std::min(best_random,
                                       metrics::mui_energy(h, oracle::random_row_orthogonal(n, l, scale, gen), s));
            worst_gap = std::max(worst_gap, (mine - best_random) / std::max(best_random, 1e-300));
        }
        return {worst_feas < 1e-10 && worst_gap <= 1e-12,
                fmt("feasibility residual %.1e, worst (f - best random)/best random %.2e", worst_feas, worst_gap)};
    }

    Outcome rcg_vs_oracle()
    {
        std::mt19937_64 gen(1004);
        constexpr int kStarts = 8;
        int passed = 0, single_ok = 0;
        double worst = 0.0;
        for (int inst = 0; inst < 20; ++inst)
        {
            const LsObjective obj(oracle::random_gaussian(6, 4, gen), oracle::random_gaussian(6, 1, gen));
            const auto f = [&](const CVector &v) { return obj.value(v); };
            std::vector<double> rcg_values;
            double oracle_best = std::numeric_limits<double>::infinity();
            for (int start = 0; start < kStarts; ++start)
            {
                const CVector x0 = oracle::random_unit_modulus(4, gen);
                oracle_best = std::min(oracle_best, oracle::phase_grid_descent(f, x0, 256));
                rcg_values.push_back(solvers::rcg_solve(obj, manifold::CirclePoint(x0), {}).value);
            }
            const double rcg_best = *std::min_element(rcg_values.begin(), rcg_values.end());
            passed += rcg_best <= 1.01 * oracle_best;
            for (double v : rcg_values)
                single_ok += v <= 1.01 * oracle_best;
            worst = std::max(worst, rcg_best / oracle_best - 1.0);
        }
        return {passed == 20, fmt("%d/20 within 1%% (best of %d shared starts, worst excess %.2e); single-start %d/%d",
                                  passed, kStarts, worst, single_ok, 20 * kStarts)};
    }

    Outcome altmin_convergence()
    {
        const Eigen::Index n = 16, k = 4, l = 32;
        const double pt = 1.0;
        int runs = 0, monotone = 0, converged = 0, max_iter = 0;
        double cm = 0.0;
        for (double rho : {0.1, 0.5, 0.9})
            for (std::uint64_t seed = 1; seed <= 20; ++seed)
            {
                const CMatrix h = sim::gen_channel(k, n, sim::derive_seed(seed, {1}));
                const CMatrix s = sim::gen_symbols(k, l, sim::derive_seed(seed, {2})).entries;
                solvers::SolverConfig cfg;
                cfg.seed = sim::derive_seed(seed, {3});
                const auto res = solvers::altmin(h, s, rho, pt, cfg);
                ++runs;
                monotone += non_increasing(res.objective_trace, 1e-9);
                converged += res.converged;
                max_iter = std::max(max_iter, res.iterations);
                cm = std::max(cm, metrics::constant_modulus_error(res.waveform, pt));
            }
        return {monotone == runs && converged == runs && cm < 1e-12,
                fmt("monotone %d/%d, converged within 100 outer iterations %d/%d (max %d), CM error %.1e", monotone,
                    runs, converged, runs, max_iter, cm)};
    }

    Outcome altmin_fixed_point()
    {
        const Eigen::Index n = 16, k = 4;
        const double pt = 1.0;
        const CMatrix x0 = std::sqrt(pt / n) * dft(n);
        const CMatrix h = sim::gen_channel(k, n, 1006);
        const CMatrix s = h * x0;
        const auto res = solvers::altmin(h, s, 0.5, pt, {}, x0);
        const double f = res.objective_trace.back();
        return {f <= 1e-10 && res.iterations <= 1 && res.converged,
                fmt("f = %.2e after %d outer iteration(s)", f, res.iterations)};
    }

    Outcome ser_ordering()
    {
        sim::Scenario sc;
        sc.rho = 0.1;
        sc.methods = {sim::Method::ClosedForm, sim::Method::CmAltMin, sim::Method::CmZf};
        sc.snr_grid_db.clear();
        for (int db = 0; db <= 24; ++db)
            sc.snr_grid_db.push_back(db);
        sc.n_frames = 1000;
        sc.noise_draws = 8;
        sim::apply_base_seed(sc, 2024);
        const auto res = sim::run_ser_experiment(sc, workers());
        const auto &cf = res.curves[0].points, &am = res.curves[1].points, &zf = res.curves[2].points;
        long min_samples = std::numeric_limits<long>::max();
        for (const auto &c : res.curves)
            for (const auto &p : c.points)
                min_samples = std::min(min_samples, p.n_samples);
        for (std::size_t i = 0; i < cf.size(); ++i)
            if (cf[i].value < 1e-3)
            {
                const bool ok = am[i].value < cf[i].value && am[i].value < zf[i].value && min_samples >= 1000000;
                return {ok, fmt("at %g dB: closed-form %.3e, cm-altmin %.3e, cm-zf %.3e; %ld decisions per point, "
                                "%d frames capped",
                                cf[i].snr_db, cf[i].value, am[i].value, zf[i].value, min_samples, res.non_converged)};
            }
        return {false, fmt("closed-form SER never below 1e-3 (%.3e at %g dB)", cf.back().value, cf.back().snr_db)};
    }

    Outcome awgn_sanity()
    {
        const metrics::Constellation qpsk = metrics::Constellation::qpsk();
        const Eigen::Index rows = 1000, cols = 1000;
        const CMatrix s = sim::gen_symbols(rows, cols, 1008).entries;
        std::string detail;
        bool ok = true;
        for (double db : {4.0, 10.0})
        {
            const double gamma = std::pow(10.0, db / 10.0);
            const CMatrix y = s + sim::gen_noise(rows, cols, 1.0 / gamma, sim::derive_seed(1008, {static_cast<std::uint64_t>(db)}));
            const double n = static_cast<double>(rows * cols);
            const double measured = static_cast<double>(metrics::count_symbol_errors(y, s, qpsk)) / n;
            const double expected = oracle::qpsk_ser(gamma);
            const double sigma = std::sqrt(expected * (1.0 - expected) / n);
            const double z = (measured - expected) / sigma;
            ok = ok && std::abs(z) <= 3.0;
            detail += fmt("%g dB: %.4e vs %.4e (%.2f sigma)  ", db, measured, expected, z);
        }
        return {ok, detail};
    }

    Outcome omni_beampattern()
    {
        const Eigen::Index n = 16, k = 4, l = 32;
        const double pt = 1.0;
        const CMatrix h = sim::gen_channel(k, n, 1009);
        const CMatrix s = sim::gen_symbols(k, l, 1010).entries;
        const CMatrix x = solvers::solve_mui_orthogonal(h, s, pt);
        const auto bp = metrics::beampattern(metrics::covariance(x), metrics::default_angle_grid());
        double worst = 0.0;
        for (double p : bp.power)
            worst = std::max(worst, std::abs(p - pt) / pt);
        return {bp.power.size() == 181 && worst < 1e-9, fmt("max relative deviation %.2e over %zu angles", worst,
                                                            bp.power.size())};
    }

    Outcome tradeoff_monotonicity()
    {
        sim::Scenario sc;
        sc.n_frames = 20;
        sim::apply_base_seed(sc, 1011);
        const std::vector<double> grid{0.1, 0.3, 0.5, 0.7, 0.9};
        const auto res = sim::run_tradeoff_sweep(sc, grid, workers());

        // paired standard error of the mean difference between neighbouring rows
        const auto paired_se = [](const std::vector<double> &a, const std::vector<double> &b) {
            const double n = static_cast<double>(a.size());
            double mean = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                mean += b[i] - a[i];
            mean /= n;
            double var = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                var += (b[i] - a[i] - mean) * (b[i] - a[i] - mean);
            return std::sqrt(var / (n - 1.0) / n);
        };
        bool ok = true;
        double worst_mui = -1e300, worst_orth = -1e300;
        for (std::size_t i = 0; i + 1 < res.rows.size(); ++i)
        {
            const auto &a = res.rows[i], &b = res.rows[i + 1];
            const double mui_rise = (b.mean_mui - a.mean_mui) / std::max(paired_se(a.mui, b.mui), 1e-300);
            const double orth_drop = (a.mean_orth_err - b.mean_orth_err) / std::max(paired_se(a.orth_err, b.orth_err), 1e-300);
            ok = ok && mui_rise <= 1.0 && orth_drop <= 1.0;
            worst_mui = std::max(worst_mui, mui_rise);
            worst_orth = std::max(worst_orth, orth_drop);
        }
        return {ok && res.rows.size() == grid.size(),
                fmt("largest MUI rise %.2f SE, largest orthogonality-error drop %.2f SE (limit 1 SE); mean MUI %.3g -> %.3g",
                    worst_mui, worst_orth, res.rows.front().mean_mui, res.rows.back().mean_mui)};
    }

    Outcome detection_properties()
    {
        const double pd0 = metrics::detection_probability(0.0, 1e-7);
        sim::Scenario sc;
        sc.rho = 0.1;
        sc.methods = {sim::Method::ClosedForm, sim::Method::CmAltMin, sim::Method::CmZf};
        sc.snr_grid_db.clear();
        for (int db = -10; db <= 30; db += 2)
            sc.snr_grid_db.push_back(db);
        sc.n_frames = 100;
        sim::apply_base_seed(sc, 1012);
        const auto res = sim::run_radar_experiment(sc, workers());
        const auto &curves = res.detection.curves;
        bool monotone = true, bounded = true, ordered = true;
        for (const auto &c : curves)
            for (std::size_t i = 0; i < c.points.size(); ++i)
            {
                bounded = bounded && c.points[i].value >= 1e-7 && c.points[i].value <= 1.0;
                if (i > 0)
                    monotone = monotone && c.points[i].value >= c.points[i - 1].value;
            }
        for (std::size_t i = 0; i < curves[0].points.size(); ++i)
            ordered = ordered && curves[0].points[i].value >= curves[1].points[i].value &&
                      curves[1].points[i].value >= curves[2].points[i].value;
        return {pd0 == 1e-7 && monotone && bounded && ordered,
                fmt("Pd(0) = %.17g, monotone %d, bounded %d, closed-form >= cm-altmin >= cm-zf %d; "
                    "gain quantile log: %.3f %.3f %.3f",
                    pd0, monotone, bounded, ordered, res.quantile_log_gain[0], res.quantile_log_gain[1],
                    res.quantile_log_gain[2])};
    }

    Outcome complexity_scaling()
    {
        const int dims[3][3] = {{8, 2, 16}, {16, 4, 32}, {32, 8, 64}};
        constexpr int kReps = 101;
        std::vector<LsObjective> objs;
        for (const auto &d : dims)
        {
            const Eigen::Index n = d[0], k = d[1], l = d[2];
            const CMatrix h = sim::gen_channel(k, n, 1013);
            const CMatrix s = sim::gen_symbols(k, l, 1014).entries;
            objs.push_back(solvers::vectorize_problem(solvers::build_stacked(h, s, sim::fixed_unitary(n, l, 1.0), 0.5, 1.0)));
        }
        solvers::SolverConfig cfg;
        cfg.epsilon = 1e-300; // run every iteration up to the cap
        cfg.k_max = 40;

        // one unmeasured warm-up solve per size, then kReps timed solves
        std::vector<double> per_iter[3];
        for (int c = 0; c < 3; ++c)
            for (int r = -1; r < kReps; ++r)
            {
                const auto x0 = manifold::random_point(objs[c].dim(), 1015 + std::max(r, 0));
                const auto t0 = std::chrono::steady_clock::now();
                const auto res = solvers::rcg_solve(objs[c], x0, cfg);
                const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (r >= 0)
                    per_iter[c].push_back(dt / std::max(1, res.iterations));
            }

        double lx[3], ly[3];
        std::string detail;
        for (int c = 0; c < 3; ++c)
        {
            auto &t = per_iter[c];
            std::nth_element(t.begin(), t.begin() + kReps / 2, t.end());
            const long nkl = static_cast<long>(dims[c][0]) * dims[c][1] * dims[c][2];
            lx[c] = std::log(static_cast<double>(nkl));
            ly[c] = std::log(t[kReps / 2]);
            detail += fmt("NKL=%ld: %.3g us  ", nkl, t[kReps / 2] * 1e6);
        }
        const double mx = (lx[0] + lx[1] + lx[2]) / 3.0, my = (ly[0] + ly[1] + ly[2]) / 3.0;
        double num = 0.0, den = 0.0;
        for (int c = 0; c < 3; ++c)
        {
            num += (lx[c] - mx) * (ly[c] - my);
            den += (lx[c] - mx) * (lx[c] - mx);
        }
        const double slope = num / den;
        return {slope >= 0.8 && slope <= 1.3, detail + fmt("exponent %.3f", slope)};
    }

    Outcome cli_determinism()
    {
        clirun::Scratch dir("acceptance");
        const std::string common = " --n 8 --k 2 --l 16 --frames 16 --snr-db 0,6,12 --seed 13";
        bool ok = true;
        std::string detail;
        for (const char *cmd : {"ser", "radar"})
        {
            const std::vector<std::string> files =
                std::string(cmd) == "ser" ? std::vector<std::string>{"ser.csv"}
                                          : std::vector<std::string>{"radar.csv", "beampattern.csv"};
            std::vector<std::string> outs;
            for (int w : {1, 4})
                for (int rep = 0; rep < 2; ++rep)
                {
                    const std::string out = fmt("%s_w%d_r%d", cmd, w, rep);
                    const auto r = clirun::run(DFRC_CLI_PATH, std::string(cmd) + common + fmt(" --workers %d --out ", w) + out,
                                               dir.path());
                    if (r.code != 0)
                    {
                        ok = false;
                        detail += fmt("%s exited %d  ", cmd, r.code);
                    }
                    outs.push_back(out);
                }
            for (const auto &f : files)
            {
                const std::string ref = clirun::slurp(dir / (outs[0] + "/" + f));
                bool same = !ref.empty();
                for (std::size_t i = 1; i < outs.size(); ++i)
                    same = same && clirun::slurp(dir / (outs[i] + "/" + f)) == ref;
                ok = ok && same;
                detail += fmt("%s %s  ", f.c_str(), same ? "identical" : "DIFFERS");
            }
        }
        return {ok, detail + "(workers 1 and 4, two runs each)"};
    }

    struct Criterion
    {
        int id;
        const char *name;
        double budget_s;
        std::function<Outcome()> run;
    };

    const std::vector<Criterion> &criteria()
    {
        static const std::vector<Criterion> all{
            {1, "manifold geometry", 5, manifold_geometry},
            {2, "riemannian gradient vs finite differences", 30, gradient_check},
            {3, "closed-form design optimality", 60, opp_optimality},
            {4, "rcg vs phase-grid oracle", 120, rcg_vs_oracle},
            {5, "altmin convergence", 300, altmin_convergence},
            {6, "altmin zero-objective fixed point", 1, altmin_fixed_point},
            {7, "ser ordering below 1e-3", 1200, ser_ordering},
            {8, "awgn ser sanity", 60, awgn_sanity},
            {9, "omni-directional beampattern", 1, omni_beampattern},
            {10, "trade-off monotonicity", 600, tradeoff_monotonicity},
            {11, "detection properties", 300, detection_properties},
            {12, "per-iteration complexity scaling", 300, complexity_scaling},
            {13, "cli determinism", 300, cli_determinism},
        };
        return all;
    }
}

int main(int argc, char **argv)
{
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i)
        wanted.push_back(std::atoi(argv[i]));

    int failed = 0, ran = 0;
    for (const auto &c : criteria())
    {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
            continue;
        ++ran;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try
        {
            o = c.run();
        }
        catch (const std::exception &e)
        {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = dt < c.budget_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("criterion %2d %-44s %s  %s (%.2f s / %g s%s)\n", c.id, c.name, pass ? "PASS" : "FAIL",
                    o.detail.c_str(), dt, c.budget_s, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    if (ran == 0)
    {
        std::fprintf(stderr, "acceptance: no criterion matched\n");
        return 2;
    }
    return failed == 0 ? 0 : 1;
}

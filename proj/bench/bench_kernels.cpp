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


// Timing harness: serial vs OpenMP frame loop, and RCG cost per iteration across problem sizes.
// Usage: dfrc_bench [frames] [workers]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "dfrc/parallel.hpp"
#include "dfrc/random.hpp"
#include "dfrc/sim.hpp"

using namespace dfrc;

namespace
{
    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point t0)
    {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }

    // One frame of the SER workload: draw (H, S) and run the CM-RCG design
    double frame_work(int frame)
    {
        const Eigen::Index n = 16, k = 4, l = 32;
        const auto seed = static_cast<std::uint64_t>(frame);
        const CMatrix h = sim::gen_channel(k, n, sim::derive_seed(seed, {1}));
        const CMatrix s = sim::gen_symbols(k, l, sim::derive_seed(seed, {2})).entries;
        solvers::SolverConfig cfg;
        cfg.seed = sim::derive_seed(seed, {3});
        return sim::cm_rcg_solve(h, s, 0.1, 1.0, cfg).value;
    }

    void bench_frame_loop(int frames, int workers)
    {
        std::vector<double> serial(frames), parallel(frames);

        auto t0 = Clock::now();
        sim::for_each_frame_serial(frames, [&](int i) { serial[i] = frame_work(i); });
        const double ts = seconds_since(t0);

        t0 = Clock::now();
        sim::for_each_frame_parallel(frames, workers, [&](int i) { parallel[i] = frame_work(i); });
        const double tp = seconds_since(t0);

        std::printf("frame loop, %d frames of cm-rcg at N=16 K=4 L=32\n", frames);
        std::printf("  serial            %8.3f s\n", ts);
        std::printf("  openmp %2d workers %8.3f s  speedup %.2fx  identical %s\n", workers, tp, ts / tp,
                    serial == parallel ? "yes" : "NO");
    }

    void bench_rcg_iteration()
    {
        const int dims[][3] = {{8, 2, 16}, {16, 4, 32}, {32, 8, 64}, {64, 16, 128}};
        constexpr int kReps = 51;
        std::printf("rcg cost per iteration (median of %d solves, 40 iterations each)\n", kReps);
        for (const auto &d : dims)
        {
            const Eigen::Index n = d[0], k = d[1], l = d[2];
            const CMatrix h = sim::gen_channel(k, n, 11);
            const CMatrix s = sim::gen_symbols(k, l, 12).entries;
            const auto obj = solvers::vectorize_problem(solvers::build_stacked(h, s, sim::fixed_unitary(n, l, 1.0), 0.5, 1.0));
            solvers::SolverConfig cfg;
            cfg.epsilon = 1e-300;
            cfg.k_max = 40;
            std::vector<double> t;
            for (int r = -1; r < kReps; ++r)
            {
                const auto x0 = manifold::random_point(n * l, 100 + std::max(r, 0));
                const auto t0 = Clock::now();
                const auto res = solvers::rcg_solve(obj, x0, cfg);
                if (r >= 0)
                    t.push_back(seconds_since(t0) / std::max(1, res.iterations));
            }
            std::nth_element(t.begin(), t.begin() + kReps / 2, t.end());
            std::printf("  N=%-3ld K=%-2ld L=%-3ld NKL=%-7ld %9.2f us\n", static_cast<long>(n), static_cast<long>(k),
                        static_cast<long>(l), static_cast<long>(n * k * l), t[kReps / 2] * 1e6);
        }
    }
}

int main(int argc, char **argv)
{
    const int frames = argc > 1 ? std::atoi(argv[1]) : 64;
    const int workers = argc > 2 ? std::atoi(argv[2]) : std::max(2, omp_get_num_procs());
    if (frames < 1 || workers < 1)
    {
        std::fprintf(stderr, "usage: dfrc_bench [frames >= 1] [workers >= 1]\n");
        return 2;
    }
    std::printf("hardware threads: %d\n", omp_get_num_procs());
    bench_frame_loop(frames, workers);
    bench_rcg_iteration();
    return 0;
}

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

#ifndef DFRC_PARALLEL_HPP
#define DFRC_PARALLEL_HPP

#include <algorithm>

namespace dfrc::sim
{
    // Reference loop: frames are visited in index order on the calling thread.
    template <typename Fn>
    void for_each_frame_serial(int n_frames, Fn &&fn)
    {
        for (int i = 0; i < n_frames; ++i)
            fn(i);
    }

    // OpenMP loop over frames. `fn` must not throw and must only write to the slot owned by frame i;
    // every reduction is done afterwards in frame order, so the output is independent of `workers`.
    template <typename Fn>
    void for_each_frame_parallel(int n_frames, int workers, Fn &&fn)
    {
        workers = std::max(1, workers);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
        for (int i = 0; i < n_frames; ++i)
            fn(i);
    }

    template <typename Fn>
    void for_each_frame(int n_frames, int workers, Fn &&fn)
    {
        if (workers <= 1)
            for_each_frame_serial(n_frames, fn);
        else
            for_each_frame_parallel(n_frames, workers, fn);
    }
}

#endif

// SPDX-License-Identifier: Apache-2.0
//
// lbbsec - secrecy outage analysis for beamformed Rician wiretap channels
// Copyright (C) 2026 lbbsec developers
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

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace lbb {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stream identifiers for deterministic substream derivation. Every random
/// quantity in an experiment draws from its own stream, so enabling or
/// disabling one component (e.g. the jammer) never perturbs the others.
enum class Stream : std::uint64_t {
    main_channel = 1,   // h_ab
    jammer_channel = 2, // h_jb
    eve_scatter = 3,    // G_ae^r trials
    jam_scatter = 4,    // G_je^r trials
    location = 5,       // location draws
    exhaustive = 6,     // shared trial set for the exhaustive search
};

/// Seeded generator with deterministic substream derivation.
///
/// Substreams are derived from the construction seed (not the evolving
/// state), so `rng.substream(s, i)` is reproducible no matter how much the
/// parent has been consumed. Normal variates use Box-Muller directly; the
/// complex draw consumes exactly one uniform pair, which keeps trial
/// streams platform-stable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw on (0, 1), never exactly 0.
    double uniform()
    {
        // 53-bit mantissa; offset by half an ulp to stay in the open interval
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// CN(0,1): real and imaginary parts are independent N(0, 1/2).
    std::complex<double> complex_gaussian()
    {
        const double r = std::sqrt(-std::log(uniform()));
        const double phase = 2.0 * M_PI * uniform();
        return {r * std::cos(phase), r * std::sin(phase)};
    }

    double standard_normal()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double phase = 2.0 * M_PI * uniform();
        spare_ = r * std::sin(phase);
        have_spare_ = true;
        return r * std::cos(phase);
    }

    Rng substream(Stream stream, std::uint64_t index = 0) const
    {
        return substream(static_cast<std::uint64_t>(stream), index);
    }

    Rng substream(std::uint64_t stream, std::uint64_t index) const
    {
        const std::uint64_t mixed =
            splitmix64(seed_ ^ splitmix64(stream ^ splitmix64(index) ^ 0xa5a5a5a5a5a5a5a5ULL));
        return Rng(mixed);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace lbb

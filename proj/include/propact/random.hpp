/*
   Copyright 2026 The propact Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Philox4x32-10 (Salmon et al., SC'11). A pure function of (counter, key):
// any sample can be regenerated from its coordinates alone.

#include <array>
#include <cmath>
#include <cstdint>

namespace propact {

class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key)
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            ctr = single_round(ctr, key);
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static Counter single_round(const Counter& c, const Key& k)
    {
        std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
        auto hi = [](std::uint64_t p) { return static_cast<std::uint32_t>(p >> 32); };
        auto lo = [](std::uint64_t p) { return static_cast<std::uint32_t>(p); };
        return {hi(p1) ^ c[1] ^ k[0], lo(p1), hi(p0) ^ c[3] ^ k[1], lo(p0)};
    }
};

/// Uniform doubles addressed by (seed, stream, index, lane).
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint32_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream)
    {}

    /// Two doubles in [0, 1) per block; lane selects the block.
    std::array<double, 2> uniform_pair(std::uint64_t index, std::uint32_t lane) const
    {
        auto out = Philox4x32::block(
            {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), lane, stream_}, key_);
        return {to_unit(out[0], out[1]), to_unit(out[2], out[3])};
    }

    /// Fills `dst` with uniforms in [0, 1) for the sample `index`.
    template <class Out>
    void fill(std::uint64_t index, Out& dst) const
    {
        const std::size_t n = dst.size();
        for (std::size_t j = 0; j < n; j += 2) {
            auto pair = uniform_pair(index, static_cast<std::uint32_t>(j / 2));
            dst[j] = pair[0];
            if (j + 1 < n) dst[j + 1] = pair[1];
        }
    }

private:
    static double to_unit(std::uint32_t a, std::uint32_t b)
    {
        std::uint64_t bits = (static_cast<std::uint64_t>(a) << 21) ^ (b >> 11);
        return static_cast<double>(bits & ((std::uint64_t{1} << 53) - 1)) * 0x1.0p-53;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_;
};

/// Sequential draws from one stream, for test-data generation.
class SequentialStream {
public:
    SequentialStream(std::uint64_t seed, std::uint32_t stream) : src_(seed, stream) {}

    double uniform()
    {
        if (!have_) {
            buf_ = src_.uniform_pair(next_++, 0);
            have_ = true;
            return buf_[0];
        }
        have_ = false;
        return buf_[1];
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [lo, hi].
    long integer(long lo, long hi)
    {
        auto span = static_cast<double>(hi - lo + 1);
        long v = lo + static_cast<long>(uniform() * span);
        return v > hi ? hi : v;
    }

    /// Standard normal by Box-Muller.
    double normal()
    {
        double u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.283185307179586 * u2);
    }

private:
    CounterStream src_;
    std::uint64_t next_ = 0;
    std::array<double, 2> buf_{};
    bool have_ = false;
};

/// SplitMix64 finalizer, used to derive independent seeds.
inline std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace propact

#pragma once

#include <array>
#include <cstdint>

namespace fkac {

/// Jumpable pseudo-random stream (xoshiro256++).
///
/// Streams for parallel workers are obtained with for_worker(seed, w), which
/// jumps the base stream w times; each jump advances 2^128 states, so worker
/// streams are non-overlapping by construction. All derived draws (uniforms,
/// normals) are implemented here rather than with <random> distributions so
/// that results are bit-reproducible across platforms.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Base stream for `seed`, jumped `worker` times.
    static RngStream for_worker(std::uint64_t seed, unsigned worker);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0,1); never returns 0 or 1.
    double next_uniform();

    /// Standard normal via Box-Muller (second draw cached in the stream).
    double next_normal();

    /// Advance 2^128 states.
    void jump();

private:
    std::array<std::uint64_t, 4> s_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace fkac

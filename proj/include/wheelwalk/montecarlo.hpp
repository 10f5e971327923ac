#pragma once

// Seeded Monte Carlo estimate of h(W_N^D; 0, l).
//
// Samples are processed in fixed chunks of chunk_size walks. Chunk c draws
// from std::mt19937_64 seeded with splitmix64(seed ^ c), so the result
// depends only on (config, seed) and never on how many threads run.
// Per-chunk step sums and squared sums are exact integers and are merged in
// chunk order.

#include "number.hpp"
#include "wheel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace wheelwalk::mc {

inline constexpr std::uint64_t chunk_size = 1u << 16;
inline constexpr std::uint64_t default_max_steps = 10000;

struct WalkConfig {
    std::int64_t n = 3;
    std::int64_t ell = 1;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_steps = default_max_steps;
    unsigned workers = 0;  // 0: one per hardware thread

    void validate() const {
        require_wheel_size(n);
        if (ell < 1 || ell > n - 1)
            throw DomainError("target l must satisfy 1 <= l <= N-1, got l = " + std::to_string(ell));
        if (samples == 0) throw DomainError("samples must be positive");
        if (max_steps == 0) throw DomainError("max_steps must be positive");
    }
};

struct SimStats {
    double mean = 0.0;
    double std_err = 0.0;
    std::uint64_t samples = 0;
    double hit_target_fraction = 0.0;
    std::uint64_t target_hits = 0;
    std::uint64_t hub_hits = 0;
    // Walks cut off at max_steps; nonzero means the estimate is unreliable.
    std::uint64_t cap_hits = 0;

    friend bool operator==(const SimStats&, const SimStats&) = default;
};

/// SplitMix64 finaliser.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
    return splitmix64(seed ^ chunk);
}

namespace detail {

struct ChunkTotals {
    std::uint64_t steps = 0;
    std::uint64_t steps_sq = 0;
    std::uint64_t target_hits = 0;
    std::uint64_t hub_hits = 0;
    std::uint64_t cap_hits = 0;
};

// Uniform draw from {0, 1, 2} by rejection: 0 = step to k-1, 1 = step to
// k+1, 2 = step into the hub.
inline unsigned draw3(std::mt19937_64& rng) {
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % 3;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return static_cast<unsigned>(x % 3);
}

inline ChunkTotals run_chunk(const WalkConfig& c, std::uint64_t chunk, std::uint64_t count) {
    std::mt19937_64 rng(chunk_seed(c.seed, chunk));
    ChunkTotals t;
    for (std::uint64_t s = 0; s < count; ++s) {
        std::int64_t pos = 0;
        std::uint64_t steps = 0;
        while (true) {
            if (steps == c.max_steps) {
                ++t.cap_hits;
                break;
            }
            const unsigned move = draw3(rng);
            ++steps;
            if (move == 2) {
                ++t.hub_hits;
                break;
            }
            pos = move == 0 ? (pos == 0 ? c.n - 1 : pos - 1) : (pos + 1 == c.n ? 0 : pos + 1);
            if (pos == c.ell) {
                ++t.target_hits;
                break;
            }
        }
        t.steps += steps;
        t.steps_sq += steps * steps;
    }
    return t;
}

}  // namespace detail

/// Runs c.samples walks from Cycle(0) until Cycle(l) or the hub. Deterministic in c.seed.
inline SimStats simulate(const WalkConfig& c) {
    c.validate();
    const std::uint64_t chunks = (c.samples + chunk_size - 1) / chunk_size;
    std::vector<detail::ChunkTotals> per_chunk(chunks);

    unsigned workers = c.workers ? c.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    auto work = [&](unsigned w) {
        for (std::uint64_t k = w; k < chunks; k += workers) {
            const std::uint64_t count = std::min(chunk_size, c.samples - k * chunk_size);
            per_chunk[k] = detail::run_chunk(c, k, count);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    detail::ChunkTotals all;
    for (const auto& t : per_chunk) {
        all.steps += t.steps;
        all.steps_sq += t.steps_sq;
        all.target_hits += t.target_hits;
        all.hub_hits += t.hub_hits;
        all.cap_hits += t.cap_hits;
    }

    SimStats s;
    s.samples = c.samples;
    s.target_hits = all.target_hits;
    s.hub_hits = all.hub_hits;
    s.cap_hits = all.cap_hits;
    const auto n = static_cast<long double>(c.samples);
    s.mean = static_cast<double>(static_cast<long double>(all.steps) / n);
    s.hit_target_fraction = static_cast<double>(static_cast<long double>(all.target_hits) / n);
    if (c.samples > 1) {
        // n * sum(x^2) - (sum x)^2, exactly.
        const auto sum = static_cast<unsigned __int128>(all.steps);
        const unsigned __int128 spread = static_cast<unsigned __int128>(all.steps_sq) * c.samples - sum * sum;
        const long double var = static_cast<long double>(spread) / (n * (n - 1));
        s.std_err = static_cast<double>(std::sqrt(var / n));
    }
    return s;
}

}  // namespace wheelwalk::mc

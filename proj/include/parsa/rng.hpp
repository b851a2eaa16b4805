#pragma once

#include <cstdint>

// Counter-based uniform streams, one per (master_seed, chain, level).
//
// The generator is Philox4x32-10 (Salmon et al., SC'11). The 64-bit cipher
// key is the master seed; the 128-bit counter block packs the draw index in
// words 0-1 and the (chain, level) pair in words 2-3. Distinct chains or
// levels therefore index disjoint regions of the same codebook, which gives
// O(1) stream creation and results independent of worker scheduling.
//
// Draw i of stream (seed, chain, level) is, bit-exactly:
//   block   = { lo32(i), hi32(i), chain, level }
//   key     = { lo32(seed), hi32(seed) }
//   out     = philox4x32_10(block, key)
//   u64     = (out[1] << 32) | out[0]
//   uniform = (u64 >> 11) * 2^-53        // in [0, 1)

namespace parsa {

struct StreamKey {
    std::uint64_t master_seed = 0;
    std::uint32_t chain_index = 0;
    std::uint32_t level_index = 0;
};

namespace detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

struct Block4x32 {
    std::uint32_t v[4];
};

inline Block4x32 philox4x32_10(Block4x32 ctr, std::uint32_t k0, std::uint32_t k1) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t(kPhiloxM0) * ctr.v[0];
        const std::uint64_t p1 = std::uint64_t(kPhiloxM1) * ctr.v[2];
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        ctr = Block4x32{{hi1 ^ ctr.v[1] ^ k0, lo1, hi0 ^ ctr.v[3] ^ k1, lo0}};
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    return ctr;
}

} // namespace detail

class UniformStream {
public:
    UniformStream() = default;
    explicit UniformStream(StreamKey key)
        : key0_(static_cast<std::uint32_t>(key.master_seed)),
          key1_(static_cast<std::uint32_t>(key.master_seed >> 32)),
          chain_(key.chain_index),
          level_(key.level_index) {}

    // One uniform in [0, 1); advances the draw counter by exactly 1.
    double next_uniform() {
        const detail::Block4x32 ctr{{static_cast<std::uint32_t>(counter_),
                                     static_cast<std::uint32_t>(counter_ >> 32),
                                     chain_, level_}};
        const detail::Block4x32 out = detail::philox4x32_10(ctr, key0_, key1_);
        ++counter_;
        const std::uint64_t bits =
            (std::uint64_t(out.v[1]) << 32) | std::uint64_t(out.v[0]);
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

    // Uniform index in {0, ..., n-1}; consumes exactly one draw.
    int next_coordinate_index(int n) {
        const int d = static_cast<int>(next_uniform() * static_cast<double>(n));
        return d < n ? d : n - 1;
    }

    std::uint64_t draws() const { return counter_; }

private:
    std::uint32_t key0_ = 0;
    std::uint32_t key1_ = 0;
    std::uint32_t chain_ = 0;
    std::uint32_t level_ = 0;
    std::uint64_t counter_ = 0;
};

inline UniformStream make_stream(StreamKey key) { return UniformStream(key); }

} // namespace parsa

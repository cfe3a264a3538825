#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). Output is a pure function of (key, counter),
// so every Monte Carlo trial owns an independent stream addressed by its
// index and results do not depend on scheduling.

#include <array>
#include <cstdint>

namespace coincidence {

class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Block bijection(Block ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }
};

// Stream for one trial: key = seed, counter = (block index, trial index).
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          trial_lo_(static_cast<std::uint32_t>(trial)),
          trial_hi_(static_cast<std::uint32_t>(trial >> 32)) {}

    std::uint32_t next_u32() {
        if (used_ == 4) refill();
        return block_[used_++];
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() {
        const std::uint64_t hi = next_u32() >> 5;
        const std::uint64_t lo = next_u32() >> 6;
        return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
    }

private:
    void refill() {
        block_ = Philox4x32::bijection(
            {static_cast<std::uint32_t>(counter_), static_cast<std::uint32_t>(counter_ >> 32), trial_lo_, trial_hi_},
            key_);
        ++counter_;
        used_ = 0;
    }

    Philox4x32::Key key_;
    std::uint32_t trial_lo_;
    std::uint32_t trial_hi_;
    std::uint64_t counter_ = 0;
    Philox4x32::Block block_{};
    unsigned used_ = 4;
};

}  // namespace coincidence

#pragma once

#include <cstdint>

namespace levykit {

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11). One stream per (seed, stream_id);
// streams are independent and the sequence depends only on the counter, so
// parallel path generation is reproducible regardless of scheduling.
class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on [0,1): 53-bit mantissa draw.
    double next_double();

    // Uniform on (0,1): never returns 0, for inverse-CDF use.
    double next_open_double();

private:
    void refill();

    std::uint64_t counter_ = 0;
    std::uint32_t key_[2];
    std::uint32_t stream_[2];
    std::uint32_t block_[4];
    int have_ = 0;
};

}  // namespace levykit

#include "levykit/rng.hpp"

namespace levykit {

namespace {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

}  // namespace

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t stream_id) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
    stream_[0] = static_cast<std::uint32_t>(stream_id);
    stream_[1] = static_cast<std::uint32_t>(stream_id >> 32);
}

void PhiloxStream::refill() {
    std::uint32_t x0 = static_cast<std::uint32_t>(counter_);
    std::uint32_t x1 = static_cast<std::uint32_t>(counter_ >> 32);
    std::uint32_t x2 = stream_[0];
    std::uint32_t x3 = stream_[1];
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];

    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, x0, hi0, lo0);
        mulhilo(kPhiloxM1, x2, hi1, lo1);
        std::uint32_t y0 = hi1 ^ x1 ^ k0;
        std::uint32_t y1 = lo1;
        std::uint32_t y2 = hi0 ^ x3 ^ k1;
        std::uint32_t y3 = lo0;
        x0 = y0;
        x1 = y1;
        x2 = y2;
        x3 = y3;
        k0 += kWeyl0;
        k1 += kWeyl1;
    }

    block_[0] = x0;
    block_[1] = x1;
    block_[2] = x2;
    block_[3] = x3;
    have_ = 4;
    ++counter_;
}

std::uint32_t PhiloxStream::next_u32() {
    if (have_ == 0) refill();
    return block_[4 - have_--];
}

std::uint64_t PhiloxStream::next_u64() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    return (hi << 32) | lo;
}

double PhiloxStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double PhiloxStream::next_open_double() {
    for (;;) {
        double u = next_double();
        if (u > 0.0) return u;
    }
}

}  // namespace levykit

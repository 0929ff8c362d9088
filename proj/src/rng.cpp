#include "rodpack/rng.hpp"

namespace rodpack {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWey0 = 0x9E3779B9u;
constexpr std::uint32_t kWey1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& c,
                       const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
    const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    const std::uint32_t hi1 = std::uint64_t(p1) >> 32, lo1 = std::uint32_t(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWey0;
            key[1] += kWey1;
        }
        round_once(ctr, key);
    }
    return ctr;
}

void RngStream::refill() {
    const std::array<std::uint32_t, 4> ctr = {
        std::uint32_t(block_), std::uint32_t(block_ >> 32),
        std::uint32_t(substream_), std::uint32_t(substream_ >> 32)};
    const std::array<std::uint32_t, 2> key = {std::uint32_t(seed_),
                                              std::uint32_t(seed_ >> 32)};
    buf_ = philox4x32_10(ctr, key);
    have_ = 4;
    ++block_;
}

std::uint32_t RngStream::next_u32() {
    if (have_ == 0) refill();
    return buf_[4 - have_--];
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
}

double RngStream::uniform01() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace rodpack

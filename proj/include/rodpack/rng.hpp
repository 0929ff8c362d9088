#pragma once

// Counter-based random number generation (Philox4x32-10, Salmon et al.,
// "Parallel Random Numbers: As Easy as 1, 2, 3", SC'11). The generator is
// a pure function of (key, counter), so a (master_seed, substream_index)
// pair identifies a reproducible stream on every platform, and distinct
// substreams are independent by construction.

#include <array>
#include <cstdint>

namespace rodpack {

// One 10-round Philox4x32 block: 128-bit counter, 64-bit key, 128-bit output.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key);

class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t substream_index)
        : seed_(master_seed), substream_(substream_index) {}

    std::uint64_t master_seed() const { return seed_; }
    std::uint64_t substream_index() const { return substream_; }

    RngStream substream(std::uint64_t index) const {
        return RngStream(seed_, index);
    }

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 random bits.
    double uniform01();

    // Uniform on [a, b).
    double uniform(double a, double b) { return a + uniform01() * (b - a); }

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t substream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    unsigned have_ = 0;
};

}  // namespace rodpack

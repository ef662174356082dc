#pragma once

#include <cstdint>

namespace cis {

// splitmix64; used to derive sub-seeds and as a stateless hash for the
// scan-time audit sampling (must not depend on worker count).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// xorshift64* with the published (12,25,27) shift triple. A zero seed is
// remapped through splitmix64 so the state never sticks at zero.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed) : state_(seed) {
        if (state_ == 0) state_ = splitmix64(0xa5a5a5a5a5a5a5a5ull);
    }

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 2685821657736338717ull;
    }

    // Unbiased value in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bit() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace cis

#pragma once

#include <cstdint>

namespace ellinv {

// Splittable deterministic generator (splitmix64 core).  Every randomized
// routine takes one of these explicitly; there is no global state.  split()
// derives an independent stream, so row i of a sampling job can use
// rng.split(i) and the result does not depend on evaluation order.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % bound);
        for (;;) {
            uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    bool coin() { return next_u64() & 1; }

    Rng split(uint64_t label) {
        uint64_t mixed = state_ ^ (0x9e3779b97f4a7c15ull * (label + 0x632be59bd9b4e019ull));
        Rng child(mixed);
        child.next_u64();
        return child;
    }

  private:
    uint64_t state_;
};

} // namespace ellinv

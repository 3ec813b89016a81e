#ifndef MODPLL_RNG_HPP
#define MODPLL_RNG_HPP

#include <cstdint>

namespace modpll {

// splitmix64; fixed algorithm so that seeded runs are reproducible across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling to avoid modulo bias
    std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v > limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace modpll

#endif  // MODPLL_RNG_HPP

#ifndef RANKCODE_RNG_HPP
#define RANKCODE_RNG_HPP

#include <cstdint>
#include <random>

namespace rankcode {

// splitmix64 step; used to derive independent per-trial seeds from a master seed
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Thin deterministic wrapper around mt19937_64 with unbiased bounded draws.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform in [0, bound), bound >= 1, rejection sampling
    std::uint32_t below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return static_cast<std::uint32_t>(v % bound);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace rankcode

#endif

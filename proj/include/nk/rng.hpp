#ifndef NK_RNG_HPP
#define NK_RNG_HPP

#include <cstdint>

namespace nk {

// Splittable counter-based generator; all randomness in the library flows
// through explicit 64-bit seeds so every run is reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is below 2^-32 for desk-scale bounds.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Derive an independent stream, e.g. one per trial.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

} // namespace nk

#endif

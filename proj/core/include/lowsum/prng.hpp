#ifndef LOWSUM_PRNG_HPP
#define LOWSUM_PRNG_HPP

#include <cstdint>
#include <vector>

namespace lowsum {

// Every generated artifact records this tag so that files produced by one
// build can be reproduced by any other implementation of the same stream:
// splitmix64 for the raw 64-bit stream, Lemire multiply-shift for bounded
// draws, Fisher-Yates (descending index) for shuffles.
inline constexpr const char* kPrngName = "splitmix64-fy-v1";

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    bool next_bool() { return (next() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

// Stable seed derivation so that parallel trials and serial trials see the
// same streams: fold the tags into the seed through one splitmix step each.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 mix(seed ^ (0x6a09e667f3bcc909ull + tag));
    return mix.next();
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag1, std::uint64_t tag2) {
    return derive_seed(derive_seed(seed, tag1), tag2);
}

} // namespace lowsum

#endif

#ifndef DENSEK_RNG_HPP
#define DENSEK_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace densek {

/// SplitMix64 generator with keyed stream derivation. Output depends only on
/// the seed and the derivation keys, never on scheduling.
class SplitRng {
public:
    using result_type = std::uint64_t;

    explicit SplitRng(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Independent child stream for `key`; does not advance this generator.
    SplitRng split(std::uint64_t key) const {
        return SplitRng(mix(state_ ^ mix(key + 0x632be59bd9b4e019ULL)));
    }

    SplitRng split(std::initializer_list<std::uint64_t> keys) const {
        SplitRng r = *this;
        for (auto k : keys) r = r.split(k);
        return r;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

/// Stable 64-bit tag for a short ASCII label (FNV-1a), used as a split key.
constexpr std::uint64_t stream_key(const char* label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *label != '\0'; ++label) {
        h ^= static_cast<unsigned char>(*label);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace densek

#endif

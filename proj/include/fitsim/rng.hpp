#ifndef FITSIM_RNG_HPP
#define FITSIM_RNG_HPP

#include <array>
#include <cstdint>

namespace fitsim {

/// SplitMix64 finalizer. Used for seed expansion and stream derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent child seed from a master seed and a stream index.
/// Every piece of randomness in a multi-run job gets its own stream so that
/// results do not depend on scheduling or worker count.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix64(master ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

/// xoshiro256++ by Blackman & Vigna. Chosen over std engines because its
/// output (and everything sampled from it below) is bit-identical across
/// platforms and standard library implementations.
class Xoshiro256PlusPlus {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256PlusPlus(std::uint64_t seed) {
        // splitmix64 state expansion, per the reference implementation
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = s;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
        if (state_[0] == 0 && state_[1] == 0 && state_[2] == 0 && state_[3] == 0)
            state_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform integer in [0, bound). bound must be >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

    // UniformRandomBitGenerator interface
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }
    std::uint64_t operator()() { return next(); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace fitsim

#endif // FITSIM_RNG_HPP

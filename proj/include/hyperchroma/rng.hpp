#ifndef HYPERCHROMA_RNG_HPP
#define HYPERCHROMA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace hyperchroma {

// splitmix64 finalizer; used for seed mixing so that per-attempt and
// per-trial streams are independent of each other.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Sub-seed for the k-th attempt/trial under a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return splitmix64(master + k * 0x9E3779B97F4A7C15ULL);
}

// mt19937_64 with hand-rolled draw helpers. The engine itself is
// standardized, so results are identical across platforms; the helpers
// avoid std::uniform_*_distribution whose output is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound), rejection sampled.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace hyperchroma

#endif

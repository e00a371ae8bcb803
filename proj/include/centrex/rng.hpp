#ifndef CENTREX_RNG_HPP_
#define CENTREX_RNG_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace centrex {

// Deterministic 64-bit generator (splitmix64 step function). Everything
// random in this library flows from one user seed through this class;
// std::uniform_*_distribution is avoided because its output is
// implementation-defined and would break byte-identical reports across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via Lemire's multiply-shift with
    // rejection. bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                m = static_cast<unsigned __int128>(next()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return next_double() < p; }

    // Independent child stream for a fixed index. Work item i always derives
    // the same stream from the same parent seed, so parallel schedules and
    // worker counts cannot change any result.
    Rng split(std::uint64_t stream) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
        child.next();
        return child;
    }

    // Fisher-Yates over the whole vector.
    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace centrex

#endif // CENTREX_RNG_HPP_

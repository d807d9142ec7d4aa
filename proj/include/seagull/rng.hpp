#ifndef SEAGULL_RNG_HPP
#define SEAGULL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace seagull {

// splitmix64 step. Doubles as the documented seed-derivation hash: archives
// written with one artifact version stay comparable as long as this chain
// is never changed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// derive_seed(base, {p0, p1, ...}) = fold of h -> splitmix64(h ^ p) starting
// from splitmix64(base). Used for all per-cell / per-run / per-stream seeds.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = splitmix64(base);
    for (std::uint64_t p : path) h = splitmix64(h ^ p);
    return h;
}

// FNV-1a over raw bytes; used for provenance hashes in run records.
inline std::uint64_t fnv1a(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

// Seeded generator. The engine (mt19937_64) is pinned by the standard; the
// distributions below are hand-rolled because the std:: ones are
// implementation-defined and would break cross-toolchain reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform in [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [0, n), Lemire multiply-shift (n > 0)
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    // standard normal via the Marsaglia polar method; caches the spare
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace seagull

#endif

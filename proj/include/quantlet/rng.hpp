#pragma once

#include <cstdint>

// Self-contained pseudo-random generator (xoshiro256++ seeded via
// splitmix64). std:: distributions are implementation-defined, which would
// break the byte-identical-rerun contract across standard libraries; all
// variate transforms here are explicit.

namespace quantlet {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    // Independent substream derived from (seed, stream index); used for
    // order-independent per-sample generation.
    static Rng substream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed;
        const std::uint64_t mixed = splitmix64(sm) ^ (0x9e3779b97f4a7c15ull * (stream + 1));
        return Rng(mixed);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1); never returns an endpoint.
    double uniform_open() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    double normal();
    double normal(double mu, double sigma) { return mu + sigma * normal(); }
    double lognormal(double mu, double sigma);
    // Gamma(shape, scale=1) via Marsaglia-Tsang; shape > 0.
    double gamma(double shape);

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace quantlet

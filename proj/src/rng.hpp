#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fgeo {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and stream ids so that
// concurrent consumers (rollouts, benchmark cells) never share a sequence.
inline uint64_t stream_seed(uint64_t base, uint64_t a, uint64_t b = 0) {
    return splitmix64(splitmix64(base ^ splitmix64(a)) ^ splitmix64(b + 0x517cc1b727220a95ULL));
}

// mt19937_64 with hand-rolled samplers: the std distributions are
// implementation-defined, these are reproducible everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0,1), 53-bit resolution
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [0,n)
    size_t next_index(size_t n) {
        if (n <= 1) return 0;
        return static_cast<size_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // inverse-CDF draw from an (unnormalized is fine) weight vector
    size_t sample(const std::vector<double>& weights) {
        double total = 0;
        for (double w : weights) total += w;
        double u = next_unit() * total;
        double acc = 0;
        for (size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = next_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace fgeo

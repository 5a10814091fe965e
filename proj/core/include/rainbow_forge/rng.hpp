#pragma once

#include <cstdint>
#include <vector>

namespace rainbow {

// Counter-based deterministic generator (rf-splitmix64-v1).
// Output i is mix64(seed + (i+1) * 0x9e3779b97f4a7c15), i.e. the standard
// splitmix64 stream started at `seed`. The same (seed) always yields the
// same stream on every platform; fixtures depend on this.
class CounterRng {
public:
    static constexpr const char* version = "rf-splitmix64-v1";

    explicit CounterRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased via masked rejection
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> __builtin_clzll(n - 1 | 1);
        std::uint64_t r;
        do {
            r = next_u64() & mask;
        } while (r >= n);
        return r;
    }

    // exact Bernoulli(num/den)
    bool bernoulli(std::uint64_t num, std::uint64_t den) {
        return below(den) < num;
    }

    bool coin() { return next_u64() >> 63; }

    double unit() {  // [0,1) with 53 random bits
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace rainbow

#ifndef CVM_RNG_HPP
#define CVM_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace cvm {

// mt19937_64 plus hand-rolled draw helpers. std::uniform_int_distribution
// is implementation-defined, so going through it would break byte-identical
// outputs across standard libraries; rejection sampling does not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t max = ~std::uint64_t{0};
        const std::uint64_t limit = max - max % n;
        std::uint64_t r = engine_();
        while (r >= limit) r = engine_();
        return r % n;
    }

    // Fisher-Yates applied to the first k slots; the prefix v[0..k) is a
    // uniform sample without replacement.
    template <class T>
    void partial_shuffle(std::vector<T>& v, std::size_t k) {
        const std::size_t n = v.size();
        if (k > n) k = n;
        for (std::size_t i = 0; i + 1 < n && i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cvm

#endif

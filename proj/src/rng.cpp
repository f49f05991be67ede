#include "editlab/rng.hpp"

#include <cmath>

#include "editlab/errors.hpp"

namespace editlab {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

uint64_t Rng::below(uint64_t n) {
    if (n == 0) {
        throw RangeError("Rng::below requires n >= 1");
    }
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const uint64_t x = next_u64();
        if (x >= threshold) {
            return x % n;
        }
    }
}

int64_t Rng::range(int64_t lo, int64_t hi) {
    if (lo > hi) {
        throw RangeError("Rng::range requires lo <= hi");
    }
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(below(span));
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Rng Rng::derive(std::string_view tag, uint64_t index) const {
    return Rng(splitmix64(mix(seed_, tag) ^ splitmix64(index)));
}

uint64_t Rng::mix(uint64_t seed, std::string_view tag) {
    return splitmix64(seed ^ fnv1a64(tag));
}

}  // namespace editlab

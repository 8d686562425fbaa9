/*
   Copyright 2026 the tschirn authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TSCHIRN_RNG_HPP
#define TSCHIRN_RNG_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "poly.hpp"

namespace tschirn {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/* deterministic generator: one independent stream per (seed, name, index),
   so reordering test cases never reshuffles the draws of another case */
class StreamRng {
  public:
    StreamRng(uint64_t seed, std::string_view stream, uint64_t index = 0) : state_(seed) {
        splitmix64(state_);
        state_ ^= fnv1a(stream);
        splitmix64(state_);
        state_ ^= index;
        splitmix64(state_);
    }

    uint64_t next() { return splitmix64(state_); }

    /* uniform in [lo, hi], inclusive, by rejection */
    long long uniform(long long lo, long long hi) {
        if (lo > hi) throw std::domain_error("empty range");
        uint64_t width = static_cast<uint64_t>(hi - lo) + 1;
        if (width == 0) return static_cast<long long>(next());  // full 64-bit range
        uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % width;
        uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return lo + static_cast<long long>(r % width);
    }

  private:
    uint64_t state_;
};

/* random draws land in [-10^4, 10^4] so exact-rational intermediates stay
   reasonably small */
template <class K>
K random_scalar(StreamRng& rng) {
    return K::from_int(rng.uniform(-10000, 10000));
}

template <class K>
K random_nonzero(StreamRng& rng) {
    K v;
    do {
        v = random_scalar<K>(rng);
    } while (v.is_zero());
    return v;
}

template <class K>
Poly<K> random_poly(StreamRng& rng, int deg_bound) {
    std::vector<K> c(static_cast<size_t>(deg_bound) + 1);
    for (auto& e : c) e = random_scalar<K>(rng);
    return Poly<K>(std::move(c));
}

template <class K>
Poly<K> random_poly_exact(StreamRng& rng, int deg) {
    std::vector<K> c(static_cast<size_t>(deg) + 1);
    for (auto& e : c) e = random_scalar<K>(rng);
    c.back() = random_nonzero<K>(rng);
    return Poly<K>(std::move(c));
}

template <class K>
Poly<K> random_monic(StreamRng& rng, int deg) {
    std::vector<K> c(static_cast<size_t>(deg) + 1);
    for (auto& e : c) e = random_scalar<K>(rng);
    c.back() = K::one();
    return Poly<K>(std::move(c));
}

}  // namespace tschirn

#endif

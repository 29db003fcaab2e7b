/*
 * Copyright 2026 The tagstack authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef TAGSTACK_RNG_HPP_
#define TAGSTACK_RNG_HPP_

// Deterministic sampling built directly on std::mt19937_64 output bits.
// The std::*_distribution adaptors are implementation-defined, so every
// draw here is spelled out explicitly; identical seeds give identical
// streams on any conforming platform.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace tagstack::rng {

using Generator = std::mt19937_64;

/// splitmix64 step; used for seed derivation, not for sampling.
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derive a sub-seed from (seed, salt). Chains splitmix64 twice so that
/// nearby salts land far apart.
inline uint64_t derive_seed(uint64_t seed, uint64_t salt) {
  uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + salt * 0xff51afd7ed558ccdULL);
  splitmix64(s);
  return splitmix64(s);
}

/// FNV-1a over a role name, then mixed with the seed. Lets components pull
/// named sub-seeds ("folds", "segments", ...) from one master seed.
inline uint64_t derive_seed(uint64_t seed, std::string_view role) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : role) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return derive_seed(seed, h);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Generator& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(Generator& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

/// Unbiased integer in [0, n) by rejection.
inline uint64_t uniform_int(Generator& g, uint64_t n) {
  if (n <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t r;
  do {
    r = g();
  } while (r >= limit);
  return r % n;
}

/// Standard normal via Box-Muller (no state carried between calls).
inline double normal(Generator& g) {
  double u1 = uniform01(g);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = uniform01(g);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

/// Gamma(shape, 1) via Marsaglia-Tsang, with the shape<1 boost.
inline double gamma(Generator& g, double shape) {
  if (shape < 1.0) {
    const double u = uniform01(g);
    return gamma(g, shape + 1.0) * std::pow(u > 0.0 ? u : 0x1.0p-53,
                                            1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal(g);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01(g);
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

/// Beta(a, b) from two gamma draws.
inline double beta(Generator& g, double a, double b) {
  for (;;) {
    const double x = gamma(g, a);
    const double y = gamma(g, b);
    if (x + y > 0.0) return x / (x + y);
  }
}

/// Fisher-Yates with the unbiased integer draw above (std::shuffle's draw
/// sequence is unspecified).
template <class T>
void shuffle(std::vector<T>& v, Generator& g) {
  for (size_t i = v.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(uniform_int(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

inline std::vector<size_t> permutation(size_t n, Generator& g) {
  std::vector<size_t> p(n);
  for (size_t i = 0; i < n; ++i) p[i] = i;
  shuffle(p, g);
  return p;
}

}  // namespace tagstack::rng

#endif  // TAGSTACK_RNG_HPP_

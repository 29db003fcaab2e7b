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
#include "tagstack/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace tagstack::fft {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}  // namespace

void fft_inplace(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  if (!is_pow2(n)) {
    throw std::invalid_argument("fft size must be a power of two");
  }
  // bit reversal
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<std::complex<double>> rfft(std::span<const double> x) {
  const size_t n = x.size();
  if (!is_pow2(n) || n < 2) {
    throw std::invalid_argument("rfft size must be a power of two >= 2");
  }
  // Pack even/odd samples into one complex FFT of half size, then untangle.
  const size_t h = n / 2;
  std::vector<std::complex<double>> z(h);
  for (size_t i = 0; i < h; ++i) {
    z[i] = {x[2 * i], x[2 * i + 1]};
  }
  fft_inplace(z);

  std::vector<std::complex<double>> out(h + 1);
  const std::complex<double> z0 = z[0];
  out[0] = {z0.real() + z0.imag(), 0.0};
  out[h] = {z0.real() - z0.imag(), 0.0};
  for (size_t k = 1; k < h; ++k) {
    const std::complex<double> zk = z[k];
    const std::complex<double> zc = std::conj(z[h - k]);
    const std::complex<double> even = 0.5 * (zk + zc);
    const std::complex<double> odd = 0.5 * (zk - zc);
    const double ang = -2.0 * kPi * static_cast<double>(k) /
                       static_cast<double>(n);
    const std::complex<double> tw(std::cos(ang), std::sin(ang));
    out[k] = even + tw * std::complex<double>(odd.imag(), -odd.real());
  }
  return out;
}

}  // namespace tagstack::fft

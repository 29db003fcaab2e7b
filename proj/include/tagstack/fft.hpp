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
#ifndef TAGSTACK_FFT_HPP_
#define TAGSTACK_FFT_HPP_

#include <complex>
#include <span>
#include <vector>

namespace tagstack::fft {

/// In-place iterative radix-2 DIT FFT. Size must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a);

/// Forward DFT of a real signal of power-of-two length n, returning the
/// n/2+1 nonnegative-frequency bins. Computed via an n/2-point complex FFT.
std::vector<std::complex<double>> rfft(std::span<const double> x);

}  // namespace tagstack::fft

#endif  // TAGSTACK_FFT_HPP_

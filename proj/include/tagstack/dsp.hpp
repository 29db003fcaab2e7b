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
#ifndef TAGSTACK_DSP_HPP_
#define TAGSTACK_DSP_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tagstack/audio_io.hpp"
#include "tagstack/common.hpp"

namespace tagstack::dsp {

enum class FeatureKind : uint8_t {
  kLogMel = 0,
  kMfcc = 1,
  kDelta = 2,
  kDeltaDelta = 3,
  kStatVector = 4,
  kMetaMatrix = 5,
};

/// 2-D feature array, rows = bands (or coefficients), cols = frames.
struct FeatureMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;
  FeatureKind kind = FeatureKind::kLogMel;

  FeatureMatrix() = default;
  FeatureMatrix(int r, int c, FeatureKind k)
      : rows(r), cols(c), values(static_cast<size_t>(r) * c, 0.0), kind(k) {}

  double& at(int r, int c) {
    return values[static_cast<size_t>(r) * cols + c];
  }
  double at(int r, int c) const {
    return values[static_cast<size_t>(r) * cols + c];
  }
};

/// Channel order is fixed: static, delta, delta-delta.
struct FeatureTensor {
  std::array<FeatureMatrix, 3> channels;
};

/// Triangular mel filters with peak 1; each row's nonzero support is the
/// contiguous bin range [bin_begin, bin_end).
struct MelFilterbank {
  int n_mels = 0;
  int n_bins = 0;
  std::vector<double> weights;  // row-major [n_mels x n_bins]
  std::vector<int> bin_begin;
  std::vector<int> bin_end;
  std::vector<double> band_edges_hz;  // n_mels + 2 edges

  double weight(int m, int k) const {
    return weights[static_cast<size_t>(m) * n_bins + k];
  }
};

/// Power spectrogram [fft_size/2+1 x frames]. Frames are Hann-windowed
/// (periodic window) slices of the reflect-padded signal; the pad is
/// frame_len/2 on each side and the frame count is floor(len / hop).
DenseMatrix stft_power(std::span<const float> samples, int frame_len,
                       int hop, int fft_size);

/// HTK mel scale: 2595 * log10(1 + f/700). Negative input is an error.
double hz_to_mel(double f_hz);
double mel_to_hz(double mel);

/// Build n_mels triangular filters with mel-equally-spaced centers between
/// f_min and f_max. Errors if the edges do not fit in [f_min, f_max] or a
/// filter is too narrow to cover any FFT bin.
MelFilterbank mel_filterbank(int n_mels, int fft_size, int sample_rate,
                             double f_min, double f_max);

/// log(fb * power + eps), natural log, eps = 1e-10.
FeatureMatrix log_mel(const DenseMatrix& power, const MelFilterbank& fb);

/// Orthonormal DCT-II along the band axis per frame, keeping coefficients
/// 0..n_coeffs-1.
FeatureMatrix mfcc(const FeatureMatrix& lm, int n_coeffs);

/// Regression delta with half-window N=(window-1)/2 and replicated edges:
/// d_t = sum_n n*(c_{t+n} - c_{t-n}) / (2*sum_n n^2). window must be odd
/// and >= 3.
FeatureMatrix delta(const FeatureMatrix& fm, int window);

/// Stack (static, delta, delta-delta) into a 3-channel tensor. Shapes must
/// match exactly.
FeatureTensor stack_channels(const FeatureMatrix& static_fm,
                             const FeatureMatrix& d,
                             const FeatureMatrix& dd);

struct DspParams {
  int sample_rate = 44100;
  int n_mels = 64;
  double frame_ms = 80.0;
  double hop_ms = 10.0;
  int fft_size = 4096;
  double segment_seconds = 1.5;
  int delta_window = 9;
  int n_mfcc = 40;
  double f_min = 0.0;
  double f_max = 22050.0;

  int frame_len() const;
  int hop_len() const;
};

/// Segment -> 3-channel log-mel tensor (3 x n_mels x frames).
FeatureTensor logmel_tensor(const audio::Segment& seg, const DspParams& p,
                            const MelFilterbank& fb);

/// Segment -> 3-channel MFCC tensor (3 x n_mfcc x frames).
FeatureTensor mfcc_tensor(const audio::Segment& seg, const DspParams& p,
                          const MelFilterbank& fb);

/// MFCC static matrix only (input to the clip statistics).
FeatureMatrix mfcc_static(const audio::Segment& seg, const DspParams& p,
                          const MelFilterbank& fb);

}  // namespace tagstack::dsp

#endif  // TAGSTACK_DSP_HPP_

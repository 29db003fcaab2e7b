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
#include "tagstack/dsp.hpp"

#include <cmath>
#include <complex>

#include "tagstack/fft.hpp"

namespace tagstack::dsp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogEps = 1e-10;

/// Reflect index i into [0, n) without repeating the edge sample
/// (librosa-style 'reflect'); handles arbitrarily large overshoot.
size_t reflect_index(ptrdiff_t i, size_t n) {
  if (n == 1) return 0;
  const ptrdiff_t period = 2 * (static_cast<ptrdiff_t>(n) - 1);
  ptrdiff_t m = i % period;
  if (m < 0) m += period;
  if (m >= static_cast<ptrdiff_t>(n)) m = period - m;
  return static_cast<size_t>(m);
}

}  // namespace

int DspParams::frame_len() const {
  return static_cast<int>(std::llround(frame_ms * sample_rate / 1000.0));
}

int DspParams::hop_len() const {
  return static_cast<int>(std::llround(hop_ms * sample_rate / 1000.0));
}

DenseMatrix stft_power(std::span<const float> samples, int frame_len,
                       int hop, int fft_size) {
  if (hop <= 0 || frame_len <= 0) {
    throw ValidationError("stft_power: frame_len and hop must be positive");
  }
  if (fft_size < frame_len) {
    throw ValidationError("stft_power: fft_size must be >= frame_len");
  }
  if ((fft_size & (fft_size - 1)) != 0) {
    throw ValidationError("stft_power: fft_size must be a power of two");
  }
  const size_t n = samples.size();
  const int frames = static_cast<int>(n / static_cast<size_t>(hop));
  if (frames < 1) {
    throw ValidationError("stft_power: segment shorter than one hop");
  }

  // periodic Hann
  std::vector<double> window(frame_len);
  for (int i = 0; i < frame_len; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / frame_len));
  }

  const int pad = frame_len / 2;
  const int n_bins = fft_size / 2 + 1;
  DenseMatrix power(n_bins, frames);

  std::vector<double> frame(fft_size);
  for (int t = 0; t < frames; ++t) {
    const ptrdiff_t start = static_cast<ptrdiff_t>(t) * hop - pad;
    for (int i = 0; i < frame_len; ++i) {
      frame[i] = window[i] *
                 static_cast<double>(samples[reflect_index(start + i, n)]);
    }
    std::fill(frame.begin() + frame_len, frame.end(), 0.0);
    const auto spec = fft::rfft(frame);
    for (int k = 0; k < n_bins; ++k) {
      power.at(k, t) = std::norm(spec[static_cast<size_t>(k)]);
    }
  }
  return power;
}

double hz_to_mel(double f_hz) {
  if (f_hz < 0.0) {
    throw ValidationError("hz_to_mel: negative frequency");
  }
  return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank mel_filterbank(int n_mels, int fft_size, int sample_rate,
                             double f_min, double f_max) {
  if (n_mels < 1) {
    throw ValidationError("mel_filterbank: n_mels must be >= 1");
  }
  if (!(0.0 <= f_min && f_min < f_max &&
        f_max <= sample_rate / 2.0 + 1e-9)) {
    throw ValidationError(
        "mel_filterbank: need 0 <= f_min < f_max <= sample_rate/2");
  }

  const int n_bins = fft_size / 2 + 1;
  MelFilterbank fb;
  fb.n_mels = n_mels;
  fb.n_bins = n_bins;
  fb.weights.assign(static_cast<size_t>(n_mels) * n_bins, 0.0);
  fb.bin_begin.assign(n_mels, 0);
  fb.bin_end.assign(n_mels, 0);

  const double mel_lo = hz_to_mel(f_min);
  const double mel_hi = hz_to_mel(f_max);
  fb.band_edges_hz.resize(n_mels + 2);
  for (int i = 0; i < n_mels + 2; ++i) {
    fb.band_edges_hz[i] =
        mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (n_mels + 1));
  }

  const double bin_hz = static_cast<double>(sample_rate) / fft_size;
  for (int m = 0; m < n_mels; ++m) {
    const double left = fb.band_edges_hz[m];
    const double center = fb.band_edges_hz[m + 1];
    const double right = fb.band_edges_hz[m + 2];
    double row_max = 0.0;
    int first = -1, last = -1;
    for (int k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > left && f < center) {
        w = (f - left) / (center - left);
      } else if (f >= center && f < right) {
        w = (right - f) / (right - center);
      }
      if (w > 0.0) {
        fb.weights[static_cast<size_t>(m) * n_bins + k] = w;
        if (first < 0) first = k;
        last = k;
        row_max = std::max(row_max, w);
      }
    }
    if (row_max <= 0.0) {
      throw ValidationError(
          "mel_filterbank: filter " + std::to_string(m) +
          " covers no FFT bin; edges too dense for this fft_size");
    }
    // peak-normalize so every row's discrete maximum is exactly 1
    for (int k = first; k <= last; ++k) {
      fb.weights[static_cast<size_t>(m) * n_bins + k] /= row_max;
    }
    fb.bin_begin[m] = first;
    fb.bin_end[m] = last + 1;
  }
  return fb;
}

FeatureMatrix log_mel(const DenseMatrix& power, const MelFilterbank& fb) {
  if (power.rows != fb.n_bins) {
    throw ValidationError("log_mel: power bin count does not match "
                          "filterbank");
  }
  FeatureMatrix out(fb.n_mels, power.cols, FeatureKind::kLogMel);
  for (int m = 0; m < fb.n_mels; ++m) {
    for (int t = 0; t < power.cols; ++t) {
      double acc = 0.0;
      for (int k = fb.bin_begin[m]; k < fb.bin_end[m]; ++k) {
        acc += fb.weight(m, k) * power.at(k, t);
      }
      out.at(m, t) = std::log(acc + kLogEps);
    }
  }
  return out;
}

FeatureMatrix mfcc(const FeatureMatrix& lm, int n_coeffs) {
  if (lm.kind != FeatureKind::kLogMel) {
    throw ValidationError("mfcc: input must be a log-mel matrix");
  }
  const int n = lm.rows;
  if (n_coeffs < 1 || n_coeffs > n) {
    throw ValidationError("mfcc: need 1 <= n_coeffs <= n_mels");
  }

  // orthonormal DCT-II basis, n_coeffs x n
  std::vector<double> basis(static_cast<size_t>(n_coeffs) * n);
  const double s0 = std::sqrt(1.0 / n);
  const double sk = std::sqrt(2.0 / n);
  for (int k = 0; k < n_coeffs; ++k) {
    for (int i = 0; i < n; ++i) {
      basis[static_cast<size_t>(k) * n + i] =
          (k == 0 ? s0 : sk) * std::cos(kPi * (2 * i + 1) * k / (2.0 * n));
    }
  }

  FeatureMatrix out(n_coeffs, lm.cols, FeatureKind::kMfcc);
  for (int k = 0; k < n_coeffs; ++k) {
    for (int t = 0; t < lm.cols; ++t) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        acc += basis[static_cast<size_t>(k) * n + i] * lm.at(i, t);
      }
      out.at(k, t) = acc;
    }
  }
  return out;
}

FeatureMatrix delta(const FeatureMatrix& fm, int window) {
  if (window < 3 || window % 2 == 0) {
    throw ValidationError("delta: window must be odd and >= 3");
  }
  if (fm.cols < 1) {
    throw ValidationError("delta: need at least one frame");
  }
  const int half = (window - 1) / 2;
  double denom = 0.0;
  for (int k = 1; k <= half; ++k) denom += static_cast<double>(k) * k;
  denom *= 2.0;

  FeatureKind kind = fm.kind == FeatureKind::kDelta
                         ? FeatureKind::kDeltaDelta
                         : FeatureKind::kDelta;
  FeatureMatrix out(fm.rows, fm.cols, kind);
  const auto clamp_t = [&](int t) {
    return t < 0 ? 0 : (t >= fm.cols ? fm.cols - 1 : t);
  };
  for (int r = 0; r < fm.rows; ++r) {
    for (int t = 0; t < fm.cols; ++t) {
      double acc = 0.0;
      for (int k = 1; k <= half; ++k) {
        acc += k * (fm.at(r, clamp_t(t + k)) - fm.at(r, clamp_t(t - k)));
      }
      out.at(r, t) = acc / denom;
    }
  }
  return out;
}

FeatureTensor stack_channels(const FeatureMatrix& static_fm,
                             const FeatureMatrix& d,
                             const FeatureMatrix& dd) {
  if (static_fm.rows != d.rows || static_fm.cols != d.cols ||
      static_fm.rows != dd.rows || static_fm.cols != dd.cols) {
    throw ValidationError("stack_channels: channel shapes differ");
  }
  FeatureTensor t;
  t.channels[0] = static_fm;
  t.channels[1] = d;
  t.channels[2] = dd;
  return t;
}

FeatureTensor logmel_tensor(const audio::Segment& seg, const DspParams& p,
                            const MelFilterbank& fb) {
  const DenseMatrix power =
      stft_power(seg.samples, p.frame_len(), p.hop_len(), p.fft_size);
  const FeatureMatrix lm = log_mel(power, fb);
  FeatureMatrix d = delta(lm, p.delta_window);
  FeatureMatrix dd = delta(d, p.delta_window);
  return stack_channels(lm, d, dd);
}

FeatureTensor mfcc_tensor(const audio::Segment& seg, const DspParams& p,
                          const MelFilterbank& fb) {
  const DenseMatrix power =
      stft_power(seg.samples, p.frame_len(), p.hop_len(), p.fft_size);
  const FeatureMatrix lm = log_mel(power, fb);
  const FeatureMatrix mf = mfcc(lm, p.n_mfcc);
  FeatureMatrix d = delta(mf, p.delta_window);
  FeatureMatrix dd = delta(d, p.delta_window);
  return stack_channels(mf, d, dd);
}

FeatureMatrix mfcc_static(const audio::Segment& seg, const DspParams& p,
                          const MelFilterbank& fb) {
  const DenseMatrix power =
      stft_power(seg.samples, p.frame_len(), p.hop_len(), p.fft_size);
  return mfcc(log_mel(power, fb), p.n_mfcc);
}

}  // namespace tagstack::dsp

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
#ifndef TAGSTACK_AUDIO_IO_HPP_
#define TAGSTACK_AUDIO_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tagstack/common.hpp"
#include "tagstack/rng.hpp"

namespace tagstack::audio {

/// The corpus is homogeneous; anything else is rejected, never resampled.
inline constexpr int kSupportedSampleRate = 44100;

/// Mono PCM amplitudes in [-1, 1).
struct Waveform {
  std::vector<float> samples;
  int sample_rate = 0;

  double duration_seconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

struct ManifestEntry {
  std::string file_name;
  std::string label;
  bool manually_verified = false;
};

/// Dataset listing. class_list order is the canonical class-index mapping
/// used by every downstream probability vector.
struct Manifest {
  std::vector<ManifestEntry> entries;
  std::vector<std::string> class_list;

  /// Index of `label` in class_list, or -1.
  int class_index(const std::string& label) const;
  /// class_index for entry i (always valid after parse).
  int label_index(size_t i) const { return class_index(entries[i].label); }
};

/// Fixed-length slice of one clip's signal.
struct Segment {
  int clip_id = -1;
  std::vector<float> samples;
};

/// Decode a RIFF/WAVE file. Accepts PCM 16-bit, mono, 44.1 kHz only;
/// integer samples are scaled by 1/32768 so -32768 maps to exactly -1.0.
/// Throws ValidationError on malformed or unsupported input.
Waveform read_wav(const std::filesystem::path& path);

/// Encode as PCM 16-bit mono RIFF/WAVE. Amplitudes are scaled by 32768,
/// rounded to nearest and clamped to [-32768, 32767]; decoding the result
/// reproduces a PCM16-sourced waveform exactly.
void write_wav(const std::filesystem::path& path, const Waveform& w);

/// Parse a `fname,label,manually_verified` CSV (LF or CRLF). When
/// class_list is absent it is inferred as the sorted distinct labels.
/// Duplicate fnames and (with a supplied class_list) unknown labels are
/// validation errors.
Manifest parse_manifest(const std::filesystem::path& path,
                        std::optional<std::vector<std::string>> class_list =
                            std::nullopt);

/// Random fixed-length segment: offset uniform over valid starts for long
/// clips, centered zero-padding for short ones. Deterministic given rng.
Segment sample_segment(const Waveform& w, double duration_s,
                       rng::Generator& rng, int clip_id = -1);

/// Deterministic center segment of the same geometry; used where the
/// pipeline needs one reproducible segment per clip.
Segment center_segment(const Waveform& w, double duration_s,
                       int clip_id = -1);

}  // namespace tagstack::audio

#endif  // TAGSTACK_AUDIO_IO_HPP_

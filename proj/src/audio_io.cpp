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
#include "tagstack/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tagstack::audio {

namespace {

uint32_t read_u32le(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) |
         (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16le(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32le(std::string& out, uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16le(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open file: " + path.string());
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

}  // namespace

int Manifest::class_index(const std::string& label) const {
  const auto it = std::find(class_list.begin(), class_list.end(), label);
  return it == class_list.end()
             ? -1
             : static_cast<int>(it - class_list.begin());
}

Waveform read_wav(const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = read_file_bytes(path);
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw ValidationError("not a RIFF/WAVE file: " + path.string());
  }

  bool have_fmt = false;
  uint16_t format_code = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
  const uint8_t* data_chunk = nullptr;
  uint32_t data_len = 0;

  size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const uint8_t* hdr = bytes.data() + pos;
    const uint32_t chunk_len = read_u32le(hdr + 4);
    pos += 8;
    if (pos + chunk_len > bytes.size()) {
      throw ValidationError("truncated chunk in " + path.string());
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) {
        throw ValidationError("malformed fmt chunk in " + path.string());
      }
      const uint8_t* f = bytes.data() + pos;
      format_code = read_u16le(f);
      channels = read_u16le(f + 2);
      sample_rate = read_u32le(f + 4);
      bits_per_sample = read_u16le(f + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data_chunk = bytes.data() + pos;
      data_len = chunk_len;
    }
    pos += chunk_len + (chunk_len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data_chunk == nullptr) {
    throw ValidationError("missing fmt or data chunk in " + path.string());
  }
  if (format_code != 1 || bits_per_sample != 16) {
    throw ValidationError("unsupported format (want PCM 16-bit) in " +
                          path.string());
  }
  if (channels != 1) {
    throw ValidationError("unsupported channel count " +
                          std::to_string(channels) + " (want mono) in " +
                          path.string());
  }
  if (sample_rate != static_cast<uint32_t>(kSupportedSampleRate)) {
    throw ValidationError("unsupported sample rate " +
                          std::to_string(sample_rate) + " (want " +
                          std::to_string(kSupportedSampleRate) + ") in " +
                          path.string());
  }
  if (data_len < 2) {
    throw ValidationError("empty data chunk in " + path.string());
  }

  Waveform w;
  w.sample_rate = static_cast<int>(sample_rate);
  const size_t n = data_len / 2;
  w.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const int16_t s = static_cast<int16_t>(
        static_cast<uint16_t>(data_chunk[2 * i]) |
        (static_cast<uint16_t>(data_chunk[2 * i + 1]) << 8));
    w.samples[i] = static_cast<float>(s) / 32768.0f;
  }
  return w;
}

void write_wav(const std::filesystem::path& path, const Waveform& w) {
  if (w.samples.empty() || w.sample_rate <= 0) {
    throw ValidationError("refusing to write empty waveform: " +
                          path.string());
  }
  const uint32_t data_len = static_cast<uint32_t>(w.samples.size() * 2);
  std::string out;
  out.reserve(44 + data_len);
  out += "RIFF";
  put_u32le(out, 36 + data_len);
  out += "WAVE";
  out += "fmt ";
  put_u32le(out, 16);
  put_u16le(out, 1);  // PCM
  put_u16le(out, 1);  // mono
  put_u32le(out, static_cast<uint32_t>(w.sample_rate));
  put_u32le(out, static_cast<uint32_t>(w.sample_rate) * 2);
  put_u16le(out, 2);
  put_u16le(out, 16);
  out += "data";
  put_u32le(out, data_len);
  for (const float a : w.samples) {
    double v = std::lround(static_cast<double>(a) * 32768.0);
    v = std::clamp(v, -32768.0, 32767.0);
    put_u16le(out, static_cast<uint16_t>(static_cast<int16_t>(v)));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw PipelineError("cannot write " + path.string());
  }
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) {
    throw PipelineError("short write to " + path.string());
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Manifest parse_manifest(const std::filesystem::path& path,
                        std::optional<std::vector<std::string>> class_list) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open manifest: " + path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError("empty manifest: " + path.string());
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "fname,label,manually_verified") {
    throw ValidationError("bad manifest header (want "
                          "fname,label,manually_verified): " +
                          path.string());
  }

  Manifest m;
  std::set<std::string> seen_names;
  std::set<std::string> seen_labels;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected 3 fields");
    }
    ManifestEntry e;
    e.file_name = fields[0];
    e.label = fields[1];
    if (fields[2] == "0") {
      e.manually_verified = false;
    } else if (fields[2] == "1") {
      e.manually_verified = true;
    } else {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": manually_verified must be 0 or 1");
    }
    if (e.file_name.empty()) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": empty fname");
    }
    if (!seen_names.insert(e.file_name).second) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": duplicate fname '" + e.file_name + "'");
    }
    seen_labels.insert(e.label);
    m.entries.push_back(std::move(e));
  }

  if (class_list.has_value()) {
    m.class_list = std::move(*class_list);
    for (const auto& e : m.entries) {
      if (m.class_index(e.label) < 0) {
        throw ValidationError("label '" + e.label +
                              "' not in supplied class list (" +
                              path.string() + ")");
      }
    }
  } else {
    m.class_list.assign(seen_labels.begin(), seen_labels.end());
  }
  return m;
}

Segment sample_segment(const Waveform& w, double duration_s,
                       rng::Generator& rng, int clip_id) {
  if (w.samples.empty()) {
    throw ValidationError("sample_segment: empty waveform");
  }
  if (duration_s <= 0.0 || w.sample_rate <= 0) {
    throw ValidationError("sample_segment: nonpositive duration or rate");
  }
  const size_t seg_len =
      static_cast<size_t>(std::llround(duration_s * w.sample_rate));
  Segment seg;
  seg.clip_id = clip_id;
  seg.samples.assign(seg_len, 0.0f);
  const size_t n = w.samples.size();
  if (n >= seg_len) {
    const size_t offset =
        static_cast<size_t>(rng::uniform_int(rng, n - seg_len + 1));
    std::copy_n(w.samples.begin() + static_cast<ptrdiff_t>(offset), seg_len,
                seg.samples.begin());
  } else {
    const size_t pad = (seg_len - n) / 2;
    std::copy(w.samples.begin(), w.samples.end(),
              seg.samples.begin() + static_cast<ptrdiff_t>(pad));
  }
  return seg;
}

Segment center_segment(const Waveform& w, double duration_s, int clip_id) {
  if (w.samples.empty()) {
    throw ValidationError("center_segment: empty waveform");
  }
  const size_t seg_len =
      static_cast<size_t>(std::llround(duration_s * w.sample_rate));
  Segment seg;
  seg.clip_id = clip_id;
  seg.samples.assign(seg_len, 0.0f);
  const size_t n = w.samples.size();
  if (n >= seg_len) {
    const size_t offset = (n - seg_len) / 2;
    std::copy_n(w.samples.begin() + static_cast<ptrdiff_t>(offset), seg_len,
                seg.samples.begin());
  } else {
    const size_t pad = (seg_len - n) / 2;
    std::copy(w.samples.begin(), w.samples.end(),
              seg.samples.begin() + static_cast<ptrdiff_t>(pad));
  }
  return seg;
}

}  // namespace tagstack::audio

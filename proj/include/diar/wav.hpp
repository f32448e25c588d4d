// Copyright 2026 The diarkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace diar::audio {

// Mono audio buffer. Samples are real amplitudes, nominally in [-1, 1).
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 8000;

  double duration_sec() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Reads a RIFF/WAVE file. Only PCM 16-bit signed little-endian mono is
// accepted; 16-bit values are scaled by 1/32768 so full scale maps to
// [-1, 1). Malformed containers raise FormatError, valid-but-unsupported
// encodings raise UnsupportedError.
Waveform read_wav(const std::string& path);

// Header-only probe: returns (sample_rate, num_samples) without decoding.
std::pair<int, std::uint64_t> read_wav_info(const std::string& path);

// Writes PCM 16-bit mono. Samples are clamped to [-1, 1) and rounded.
void write_wav(const std::string& path, const Waveform& w);

}  // namespace diar::audio

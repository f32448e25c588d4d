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

#include <vector>

#include "diar/matrix.hpp"
#include "diar/wav.hpp"

namespace diar::audio {

// Triangular mel filterbank on the HTK mel scale, evaluated at FFT bin
// frequencies. Rows are filters, columns are the fft_size/2+1 bins.
class MelFilterbank {
 public:
  MelFilterbank(int num_bins, int fft_size, int sample_rate, double freq_min,
                double freq_max);

  int num_bins() const { return num_bins_; }
  int fft_size() const { return fft_size_; }
  int sample_rate() const { return sample_rate_; }
  const Matrix& weights() const { return weights_; }

  // Apex frequency of filter `bin` in Hz.
  double center_hz(int bin) const { return centers_hz_[bin]; }

  // mel = 2595 * log10(1 + hz / 700)
  static double hz_to_mel(double hz);
  static double mel_to_hz(double mel);

 private:
  int num_bins_;
  int fft_size_;
  int sample_rate_;
  Matrix weights_;
  std::vector<double> centers_hz_;
};

struct StftConfig {
  int frame_length = 200;   // 25 ms at 8 kHz
  int frame_shift = 80;     // 10 ms at 8 kHz
  int fft_size = 256;       // next power of two >= frame_length, zero-padded
  double log_floor = 1e-10; // clamp below this before the log
};

// Number of frames produced for a signal of `num_samples` samples:
// 1 + floor((L - frame_length) / frame_shift). Throws if L < frame_length.
std::size_t stft_frame_count(std::size_t num_samples, const StftConfig& cfg);

// Hamming-windowed STFT power spectrum -> mel energies -> log with floor.
// Returns T x num_bins.
Matrix stft_logmel(const Waveform& w, const StftConfig& cfg,
                   const MelFilterbank& fb);

// Full linear convolution; output length |u| + |rir| - 1. Both inputs must
// share a sample rate; an empty rir is a configuration error.
Waveform convolve_full(const Waveform& u, const Waveform& rir);

// Scale p for the noise so that 10*log10(signal_power / (p^2 * noise_power))
// equals snr_db. Powers are mean squares and must be positive.
double mix_scale(double signal_power, double noise_power, double snr_db);

// Mean square of a signal; 0 for an empty one.
double mean_square(const std::vector<double>& samples);

// In-place iterative radix-2 complex FFT; size must be a power of two.
void fft_radix2(std::vector<double>& re, std::vector<double>& im);

}  // namespace diar::audio

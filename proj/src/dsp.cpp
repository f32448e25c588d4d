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

#include "diar/dsp.hpp"

#include <cmath>
#include <numbers>

#include "diar/errors.hpp"
#include "diar/kernels.hpp"

namespace diar::audio {

double MelFilterbank::hz_to_mel(double hz) {
  return 2595.0 * std::log10(1.0 + hz / 700.0);
}

double MelFilterbank::mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank::MelFilterbank(int num_bins, int fft_size, int sample_rate,
                             double freq_min, double freq_max)
    : num_bins_(num_bins),
      fft_size_(fft_size),
      sample_rate_(sample_rate),
      weights_(static_cast<std::size_t>(num_bins), static_cast<std::size_t>(fft_size / 2 + 1)) {
  if (num_bins < 1 || fft_size < 2 || sample_rate <= 0) {
    throw ConfigError("invalid mel filterbank configuration");
  }
  if (freq_max > sample_rate / 2.0) freq_max = sample_rate / 2.0;
  if (freq_min < 0.0 || freq_min >= freq_max) {
    throw ConfigError("invalid mel frequency range");
  }

  const double mel_min = hz_to_mel(freq_min);
  const double mel_max = hz_to_mel(freq_max);
  std::vector<double> edges_hz(static_cast<std::size_t>(num_bins) + 2);
  for (int i = 0; i < num_bins + 2; ++i) {
    const double mel = mel_min + (mel_max - mel_min) * i / (num_bins + 1);
    edges_hz[static_cast<std::size_t>(i)] = mel_to_hz(mel);
  }

  centers_hz_.assign(edges_hz.begin() + 1, edges_hz.end() - 1);

  const int num_freqs = fft_size / 2 + 1;
  for (int m = 0; m < num_bins; ++m) {
    const double lo = edges_hz[static_cast<std::size_t>(m)];
    const double mid = edges_hz[static_cast<std::size_t>(m) + 1];
    const double hi = edges_hz[static_cast<std::size_t>(m) + 2];
    for (int k = 0; k < num_freqs; ++k) {
      const double f = static_cast<double>(k) * sample_rate / fft_size;
      double wgt = 0.0;
      if (f > lo && f < mid) {
        wgt = (f - lo) / (mid - lo);
      } else if (f >= mid && f < hi) {
        wgt = (hi - f) / (hi - mid);
      }
      weights_(static_cast<std::size_t>(m), static_cast<std::size_t>(k)) = wgt;
    }
  }
}

std::size_t stft_frame_count(std::size_t num_samples, const StftConfig& cfg) {
  if (num_samples < static_cast<std::size_t>(cfg.frame_length)) {
    throw DomainError("signal shorter than one analysis frame");
  }
  return 1 + (num_samples - static_cast<std::size_t>(cfg.frame_length)) /
                 static_cast<std::size_t>(cfg.frame_shift);
}

void fft_radix2(std::vector<double>& re, std::vector<double>& im) {
  const std::size_t n = re.size();
  if (n == 0 || (n & (n - 1)) != 0 || im.size() != n) {
    throw ConfigError("fft size must be a power of two");
  }
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    const double wr = std::cos(ang);
    const double wi = std::sin(ang);
    for (std::size_t i = 0; i < n; i += len) {
      double cr = 1.0, ci = 0.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::size_t a = i + k;
        const std::size_t b = i + k + len / 2;
        const double tr = re[b] * cr - im[b] * ci;
        const double ti = re[b] * ci + im[b] * cr;
        re[b] = re[a] - tr;
        im[b] = im[a] - ti;
        re[a] += tr;
        im[a] += ti;
        const double ncr = cr * wr - ci * wi;
        ci = cr * wi + ci * wr;
        cr = ncr;
      }
    }
  }
}

Matrix stft_logmel(const Waveform& w, const StftConfig& cfg,
                   const MelFilterbank& fb) {
  if (fb.fft_size() != cfg.fft_size || fb.sample_rate() != w.sample_rate) {
    throw ConfigError("filterbank does not match STFT configuration");
  }
  const std::size_t num_frames = stft_frame_count(w.samples.size(), cfg);
  const int num_freqs = cfg.fft_size / 2 + 1;

  std::vector<double> window(static_cast<std::size_t>(cfg.frame_length));
  for (int i = 0; i < cfg.frame_length; ++i) {
    window[static_cast<std::size_t>(i)] =
        0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / (cfg.frame_length - 1));
  }

  Matrix out(num_frames, static_cast<std::size_t>(fb.num_bins()));
  std::vector<double> re(static_cast<std::size_t>(cfg.fft_size));
  std::vector<double> im(static_cast<std::size_t>(cfg.fft_size));
  std::vector<double> power(static_cast<std::size_t>(num_freqs));

  for (std::size_t t = 0; t < num_frames; ++t) {
    const double* frame = w.samples.data() + t * static_cast<std::size_t>(cfg.frame_shift);
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    for (int i = 0; i < cfg.frame_length; ++i) {
      re[static_cast<std::size_t>(i)] = frame[i] * window[static_cast<std::size_t>(i)];
    }
    fft_radix2(re, im);
    for (int k = 0; k < num_freqs; ++k) {
      power[static_cast<std::size_t>(k)] = re[static_cast<std::size_t>(k)] * re[static_cast<std::size_t>(k)] +
                                           im[static_cast<std::size_t>(k)] * im[static_cast<std::size_t>(k)];
    }
    for (int m = 0; m < fb.num_bins(); ++m) {
      const double e = kernels::dot(fb.weights().row(static_cast<std::size_t>(m)),
                                    power.data(), power.size());
      out(t, static_cast<std::size_t>(m)) = std::log(std::max(e, cfg.log_floor));
    }
  }
  return out;
}

Waveform convolve_full(const Waveform& u, const Waveform& rir) {
  if (u.sample_rate != rir.sample_rate) {
    throw ConfigError("convolution operands have different sample rates");
  }
  if (rir.samples.empty()) {
    throw ConfigError("empty impulse response");
  }
  Waveform out;
  out.sample_rate = u.sample_rate;
  if (u.samples.empty()) {
    out.samples.assign(rir.samples.size() - 1, 0.0);
    return out;
  }
  out.samples.assign(u.samples.size() + rir.samples.size() - 1, 0.0);
  for (std::size_t j = 0; j < rir.samples.size(); ++j) {
    if (rir.samples[j] != 0.0) {
      kernels::axpy(rir.samples[j], u.samples.data(), out.samples.data() + j,
                    u.samples.size());
    }
  }
  return out;
}

double mix_scale(double signal_power, double noise_power, double snr_db) {
  if (!(signal_power > 0.0) || !(noise_power > 0.0)) {
    throw DomainError("mix_scale requires positive signal and noise power");
  }
  return std::sqrt(signal_power / (noise_power * std::pow(10.0, snr_db / 10.0)));
}

double mean_square(const std::vector<double>& samples) {
  if (samples.empty()) return 0.0;
  return kernels::sumsq(samples.data(), samples.size()) /
         static_cast<double>(samples.size());
}

}  // namespace diar::audio

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

#include "diar/wav.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "diar/errors.hpp"

namespace diar::audio {

namespace {

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

std::uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  out.write(b, 2);
}

// Walks the RIFF chunk list up to (and including) the data chunk header.
// Leaves the stream positioned at the first data byte.
void parse_header(std::ifstream& in, const std::string& path, FmtChunk* fmt,
                  std::uint32_t* data_bytes) {
  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) {
    throw FormatError(path + ": not a RIFF file");
  }
  read_u32(in);  // riff size, unchecked
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) {
    throw FormatError(path + ": not a WAVE file");
  }

  bool have_fmt = false;
  while (in.read(tag, 4)) {
    std::uint32_t chunk_size = read_u32(in);
    if (!in) break;
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError(path + ": fmt chunk too small");
      fmt->format = read_u16(in);
      fmt->channels = read_u16(in);
      fmt->sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      fmt->bits_per_sample = read_u16(in);
      in.seekg(chunk_size - 16 + (chunk_size & 1), std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw FormatError(path + ": data chunk before fmt chunk");
      *data_bytes = chunk_size;
      return;
    } else {
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw FormatError(path + ": no data chunk");
}

void check_supported(const FmtChunk& fmt, const std::string& path) {
  if (fmt.format != 1) {
    throw UnsupportedError(path + ": only PCM encoding is supported");
  }
  if (fmt.channels != 1) {
    throw UnsupportedError(path + ": only mono audio is supported");
  }
  if (fmt.bits_per_sample != 16) {
    throw UnsupportedError(path + ": only 16-bit samples are supported");
  }
  if (fmt.sample_rate == 0) {
    throw FormatError(path + ": zero sample rate");
  }
}

}  // namespace

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  FmtChunk fmt;
  std::uint32_t data_bytes = 0;
  parse_header(in, path, &fmt, &data_bytes);
  check_supported(fmt, path);

  const std::size_t n = data_bytes / 2;
  std::vector<char> raw(data_bytes);
  in.read(raw.data(), static_cast<std::streamsize>(data_bytes));
  if (static_cast<std::uint32_t>(in.gcount()) != data_bytes) {
    throw FormatError(path + ": truncated data chunk");
  }

  Waveform w;
  w.sample_rate = static_cast<int>(fmt.sample_rate);
  w.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int16_t s = static_cast<std::int16_t>(
        static_cast<unsigned char>(raw[2 * i]) |
        (static_cast<unsigned char>(raw[2 * i + 1]) << 8));
    w.samples[i] = static_cast<double>(s) / 32768.0;
  }
  return w;
}

std::pair<int, std::uint64_t> read_wav_info(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  FmtChunk fmt;
  std::uint32_t data_bytes = 0;
  parse_header(in, path, &fmt, &data_bytes);
  check_supported(fmt, path);
  return {static_cast<int>(fmt.sample_rate), data_bytes / 2};
}

void write_wav(const std::string& path, const Waveform& w) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");

  const std::uint32_t data_bytes = static_cast<std::uint32_t>(w.samples.size() * 2);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<std::uint32_t>(w.sample_rate));
  write_u32(out, static_cast<std::uint32_t>(w.sample_rate) * 2);
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);

  for (double v : w.samples) {
    double scaled = std::lround(v * 32768.0);
    if (scaled > 32767.0) scaled = 32767.0;
    if (scaled < -32768.0) scaled = -32768.0;
    write_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(scaled)));
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace diar::audio

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

#include <stdexcept>
#include <string>

namespace diar {

// Base class for all diarkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed file contents (bad WAV header, truncated archive, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed but unsupported input (stereo WAV, non-PCM encoding, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration or inconsistent options.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Dimension/shape mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// File system failures, annotated with the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (RTTM, manifests), annotated with line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined request (zero-power signal, empty timeline ratio,
// zero scored speech).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Object used outside its valid lifetime (autodiff tape reuse).
class LifecycleError : public Error {
 public:
  using Error::Error;
};

// Training aborted (non-finite loss).
class TrainError : public Error {
 public:
  using Error::Error;
};

}  // namespace diar

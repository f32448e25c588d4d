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

#include <string>
#include <vector>

#include "diar/matrix.hpp"

namespace diar {

// Half-open activity interval [onset, offset) in seconds.
struct Interval {
  double onset = 0.0;
  double offset = 0.0;

  double length() const { return offset - onset; }
};

// Speaker-attributed activity intervals. Speakers are kept in lexically
// sorted order; intervals per speaker are sorted and merged by normalize().
class Timeline {
 public:
  void add(const std::string& speaker, double onset, double offset);

  // Sorts intervals per speaker and merges overlapping or touching ones.
  void normalize();

  std::size_t num_speakers() const { return speakers_.size(); }
  const std::vector<std::string>& speakers() const { return speakers_; }
  const std::vector<Interval>& intervals(std::size_t speaker_index) const {
    return intervals_[speaker_index];
  }
  const std::vector<Interval>* find(const std::string& speaker) const;

  bool empty() const;

  // Latest offset across all speakers; 0 for an empty timeline.
  double max_offset() const;

  // Total activity per speaker in seconds (after normalize).
  double speaker_speech(std::size_t speaker_index) const;

 private:
  std::vector<std::string> speakers_;
  std::vector<std::vector<Interval>> intervals_;
};

// Fraction of speech time with two or more simultaneously active speakers:
// dur(>=2 active) / dur(>=1 active). Throws DomainError when there is no
// speech at all.
double overlap_ratio(const Timeline& timeline);

// Total duration where at least `min_active` speakers are active.
double active_duration(const Timeline& timeline, int min_active);

// Rasterizes a timeline into a T x C binary matrix: entry (t, c) is 1 iff
// speaker c is active at the center time (t + 0.5) * frame_shift. Columns
// follow the timeline's sorted speaker order.
Matrix timeline_to_labels(const Timeline& timeline, double frame_shift,
                          std::size_t num_frames);

}  // namespace diar

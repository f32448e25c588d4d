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

#include "diar/timeline.hpp"

#include <algorithm>

#include "diar/errors.hpp"

namespace diar {

void Timeline::add(const std::string& speaker, double onset, double offset) {
  if (onset < 0.0 || offset < onset) {
    throw DomainError("invalid interval for speaker " + speaker);
  }
  auto it = std::lower_bound(speakers_.begin(), speakers_.end(), speaker);
  std::size_t idx = static_cast<std::size_t>(it - speakers_.begin());
  if (it == speakers_.end() || *it != speaker) {
    speakers_.insert(it, speaker);
    intervals_.insert(intervals_.begin() + static_cast<std::ptrdiff_t>(idx), {});
  }
  if (offset > onset) {
    intervals_[idx].push_back({onset, offset});
  }
}

void Timeline::normalize() {
  for (auto& list : intervals_) {
    std::sort(list.begin(), list.end(),
              [](const Interval& a, const Interval& b) { return a.onset < b.onset; });
    std::vector<Interval> merged;
    for (const Interval& iv : list) {
      if (!merged.empty() && iv.onset <= merged.back().offset) {
        merged.back().offset = std::max(merged.back().offset, iv.offset);
      } else {
        merged.push_back(iv);
      }
    }
    list = std::move(merged);
  }
}

const std::vector<Interval>* Timeline::find(const std::string& speaker) const {
  auto it = std::lower_bound(speakers_.begin(), speakers_.end(), speaker);
  if (it == speakers_.end() || *it != speaker) return nullptr;
  return &intervals_[static_cast<std::size_t>(it - speakers_.begin())];
}

bool Timeline::empty() const {
  for (const auto& list : intervals_) {
    if (!list.empty()) return false;
  }
  return true;
}

double Timeline::max_offset() const {
  double m = 0.0;
  for (const auto& list : intervals_) {
    for (const Interval& iv : list) m = std::max(m, iv.offset);
  }
  return m;
}

double Timeline::speaker_speech(std::size_t speaker_index) const {
  double total = 0.0;
  for (const Interval& iv : intervals_[speaker_index]) total += iv.length();
  return total;
}

double active_duration(const Timeline& timeline, int min_active) {
  // Boundary sweep over all interval edges.
  std::vector<std::pair<double, int>> events;
  for (std::size_t s = 0; s < timeline.num_speakers(); ++s) {
    for (const Interval& iv : timeline.intervals(s)) {
      events.emplace_back(iv.onset, +1);
      events.emplace_back(iv.offset, -1);
    }
  }
  std::sort(events.begin(), events.end());
  double total = 0.0;
  int active = 0;
  double prev = 0.0;
  for (const auto& [time, delta] : events) {
    if (active >= min_active) total += time - prev;
    active += delta;
    prev = time;
  }
  return total;
}

double overlap_ratio(const Timeline& timeline) {
  const double speech = active_duration(timeline, 1);
  if (speech <= 0.0) {
    throw DomainError("overlap ratio undefined: timeline has no speech");
  }
  return active_duration(timeline, 2) / speech;
}

Matrix timeline_to_labels(const Timeline& timeline, double frame_shift,
                          std::size_t num_frames) {
  Matrix labels(num_frames, timeline.num_speakers());
  for (std::size_t s = 0; s < timeline.num_speakers(); ++s) {
    for (const Interval& iv : timeline.intervals(s)) {
      // First frame whose center (t + 0.5) * shift falls inside [onset, offset).
      std::ptrdiff_t first =
          static_cast<std::ptrdiff_t>(std::ceil(iv.onset / frame_shift - 0.5));
      if (first < 0) first = 0;
      for (std::size_t t = static_cast<std::size_t>(first); t < num_frames; ++t) {
        const double center = (static_cast<double>(t) + 0.5) * frame_shift;
        if (center >= iv.offset) break;
        if (center >= iv.onset) labels(t, s) = 1.0;
      }
    }
  }
  return labels;
}

}  // namespace diar

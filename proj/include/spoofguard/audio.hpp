#pragma once

#include <string>
#include <vector>

#include "spoofguard/common.hpp"

namespace spoofguard {

// Mono audio, samples normalized to [-1, 1].
struct AudioClip {
  std::vector<float> samples;
  int sample_rate = kDefaultSampleRate;
  std::string source_id;

  double seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// Reads a RIFF/WAVE file. PCM 16-bit mono little-endian only; anything else is
// rejected (kFormat for malformed containers, kData for unsupported layouts).
// Samples are scaled by 1/32768.
AudioClip read_wav(const std::string& path);

// Writes PCM 16-bit mono. Values are clamped to [-1, 1] and rounded to the
// nearest integer sample, so write_wav(read_wav(f)) reproduces f's data chunk
// byte for byte.
void write_wav(const std::string& path, const AudioClip& clip);

}  // namespace spoofguard

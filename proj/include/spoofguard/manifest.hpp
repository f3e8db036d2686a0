#pragma once

#include <string>
#include <vector>

#include "spoofguard/common.hpp"

namespace spoofguard {

// Closed label alphabet:
//   human         authentic speech
//   S1 .. S5      spoofing attack categories seen during training
//   U<n>          unknown-type synthetic attacks (evaluation only)
bool is_valid_label(const std::string& label);
bool is_spoof_label(const std::string& label);

struct ManifestEntry {
  std::string path;   // relative WAV path
  std::string label;
};

struct Manifest {
  std::vector<ManifestEntry> entries;

  bool operator==(const Manifest&) const = default;
};

// One `<path> <label>` entry per line; `#` starts a comment; blank lines are
// skipped. Unknown labels and duplicate paths are rejected.
Manifest parse_manifest(const std::string& path);
Manifest parse_manifest_text(const std::string& text, const std::string& name);
void write_manifest(const Manifest& manifest, const std::string& path);

}  // namespace spoofguard

#pragma once

#include <optional>
#include <string>

namespace acap {

struct SemVer {
  int major = 0;
  int minor = 0;
  int patch = 0;
  std::string prerelease;  // empty when none

  static std::optional<SemVer> parse(const std::string& s);

  friend bool operator==(const SemVer&, const SemVer&) = default;
};

bool operator<(const SemVer& a, const SemVer& b);

// Comparisons over raw version strings; unparseable inputs compare false
// (validate_document is the place that surfaces them).
bool semver_lt(const std::string& a, const std::string& b);
bool semver_le(const std::string& a, const std::string& b);
bool semver_eq(const std::string& a, const std::string& b);

}  // namespace acap

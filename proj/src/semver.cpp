#include "acap/semver.hpp"

#include <cctype>
#include <tuple>

namespace acap {

static bool parse_number(const std::string& s, std::size_t& pos, int& out) {
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  long v = 0;
  const std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000000L) return false;
    ++pos;
  }
  // no leading zeros per semver, except "0" itself
  if (pos - start > 1 && s[start] == '0') return false;
  out = static_cast<int>(v);
  return true;
}

std::optional<SemVer> SemVer::parse(const std::string& s) {
  SemVer v;
  std::size_t pos = 0;
  if (!parse_number(s, pos, v.major)) return std::nullopt;
  if (pos >= s.size() || s[pos] != '.') return std::nullopt;
  ++pos;
  if (!parse_number(s, pos, v.minor)) return std::nullopt;
  if (pos >= s.size() || s[pos] != '.') return std::nullopt;
  ++pos;
  if (!parse_number(s, pos, v.patch)) return std::nullopt;
  if (pos < s.size()) {
    if (s[pos] != '-' && s[pos] != '+') return std::nullopt;
    if (s[pos] == '-') v.prerelease = s.substr(pos + 1);
    // build metadata after '+' is ignored for ordering
    const auto plus = v.prerelease.find('+');
    if (plus != std::string::npos) v.prerelease.resize(plus);
  }
  return v;
}

bool operator<(const SemVer& a, const SemVer& b) {
  const auto l = std::tie(a.major, a.minor, a.patch);
  const auto r = std::tie(b.major, b.minor, b.patch);
  if (l < r) return true;
  if (r < l) return false;
  // a prerelease sorts below its release
  if (!a.prerelease.empty() && b.prerelease.empty()) return true;
  if (a.prerelease.empty() && !b.prerelease.empty()) return false;
  return a.prerelease < b.prerelease;
}

bool semver_lt(const std::string& a, const std::string& b) {
  const auto va = SemVer::parse(a);
  const auto vb = SemVer::parse(b);
  if (!va || !vb) return false;
  return *va < *vb;
}

bool semver_le(const std::string& a, const std::string& b) {
  const auto va = SemVer::parse(a);
  const auto vb = SemVer::parse(b);
  if (!va || !vb) return false;
  return !(*vb < *va);
}

bool semver_eq(const std::string& a, const std::string& b) {
  const auto va = SemVer::parse(a);
  const auto vb = SemVer::parse(b);
  if (!va || !vb) return false;
  return *va == *vb;
}

}  // namespace acap

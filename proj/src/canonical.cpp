#include "acap/canonical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

namespace acap {

namespace {

// Decodes one UTF-8 sequence starting at s[i]; advances i. Returns the code
// point or -1 on malformed input.
long utf8_next(const std::string& s, std::size_t& i) {
  const auto byte = [&](std::size_t k) -> unsigned { return static_cast<unsigned char>(s[k]); };
  const unsigned b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t k) { return k < s.size() && (byte(k) & 0xc0) == 0x80; };
  if ((b0 & 0xe0) == 0xc0) {
    if (!cont(i + 1)) return -1;
    const long cp = ((b0 & 0x1f) << 6) | (byte(i + 1) & 0x3f);
    if (cp < 0x80) return -1;  // overlong
    i += 2;
    return cp;
  }
  if ((b0 & 0xf0) == 0xe0) {
    if (!cont(i + 1) || !cont(i + 2)) return -1;
    const long cp = ((b0 & 0x0f) << 12) | ((byte(i + 1) & 0x3f) << 6) | (byte(i + 2) & 0x3f);
    if (cp < 0x800 || (cp >= 0xd800 && cp <= 0xdfff)) return -1;
    i += 3;
    return cp;
  }
  if ((b0 & 0xf8) == 0xf0) {
    if (!cont(i + 1) || !cont(i + 2) || !cont(i + 3)) return -1;
    const long cp = ((b0 & 0x07) << 18) | ((byte(i + 1) & 0x3f) << 12) |
                    ((byte(i + 2) & 0x3f) << 6) | (byte(i + 3) & 0x3f);
    if (cp < 0x10000 || cp > 0x10ffff) return -1;
    i += 4;
    return cp;
  }
  return -1;
}

// UTF-16 code unit sequence of a UTF-8 string, used as the JCS sort key.
std::vector<std::uint16_t> utf16_units(const std::string& s) {
  std::vector<std::uint16_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const long cp = utf8_next(s, i);
    if (cp < 0) throw CanonicalizationError("invalid UTF-8 in object key");
    if (cp < 0x10000) {
      out.push_back(static_cast<std::uint16_t>(cp));
    } else {
      const long v = cp - 0x10000;
      out.push_back(static_cast<std::uint16_t>(0xd800 + (v >> 10)));
      out.push_back(static_cast<std::uint16_t>(0xdc00 + (v & 0x3ff)));
    }
  }
  return out;
}

void append_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (c == '"') {
      out += "\\\"";
      ++i;
    } else if (c == '\\') {
      out += "\\\\";
      ++i;
    } else if (c == 0x08) {
      out += "\\b";
      ++i;
    } else if (c == 0x09) {
      out += "\\t";
      ++i;
    } else if (c == 0x0a) {
      out += "\\n";
      ++i;
    } else if (c == 0x0c) {
      out += "\\f";
      ++i;
    } else if (c == 0x0d) {
      out += "\\r";
      ++i;
    } else if (c < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "\\u%04x", c);
      out += buf;
      ++i;
    } else if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
    } else {
      const std::size_t start = i;
      if (utf8_next(s, i) < 0) throw CanonicalizationError("invalid UTF-8 in string");
      out.append(s, start, i - start);
    }
  }
  out.push_back('"');
}

void append_value(const json& v, std::string& out);

void append_object(const json& v, std::string& out) {
  struct Entry {
    std::vector<std::uint16_t> key_units;
    const std::string* key;
    const json* value;
  };
  std::vector<Entry> entries;
  entries.reserve(v.size());
  for (auto it = v.begin(); it != v.end(); ++it) {
    entries.push_back({utf16_units(it.key()), &it.key(), &it.value()});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::lexicographical_compare(a.key_units.begin(), a.key_units.end(),
                                        b.key_units.begin(), b.key_units.end());
  });
  out.push_back('{');
  bool first = true;
  for (const auto& e : entries) {
    if (!first) out.push_back(',');
    first = false;
    append_escaped(*e.key, out);
    out.push_back(':');
    append_value(*e.value, out);
  }
  out.push_back('}');
}

void append_value(const json& v, std::string& out) {
  switch (v.type()) {
    case json::value_t::null:
      out += "null";
      return;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      return;
    case json::value_t::number_integer: {
      char buf[24];
      const auto r = std::to_chars(buf, buf + sizeof(buf), v.get<std::int64_t>());
      out.append(buf, r.ptr);
      return;
    }
    case json::value_t::number_unsigned: {
      char buf[24];
      const auto r = std::to_chars(buf, buf + sizeof(buf), v.get<std::uint64_t>());
      out.append(buf, r.ptr);
      return;
    }
    case json::value_t::number_float:
      out += ecmascript_number(v.get<double>());
      return;
    case json::value_t::string:
      append_escaped(v.get_ref<const std::string&>(), out);
      return;
    case json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& e : v) {
        if (!first) out.push_back(',');
        first = false;
        append_value(e, out);
      }
      out.push_back(']');
      return;
    }
    case json::value_t::object:
      append_object(v, out);
      return;
    default:
      throw CanonicalizationError("value has no canonical JSON form");
  }
}

}  // namespace

std::string ecmascript_number(double v) {
  if (std::isnan(v) || std::isinf(v)) {
    throw CanonicalizationError("non-representable number (NaN or Infinity)");
  }
  if (v == 0.0) return "0";  // covers -0 as well

  const bool negative = std::signbit(v);
  const double mag = negative ? -v : v;

  // Shortest round-trip digits via to_chars in scientific style: "d.ddddde±x".
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), mag, std::chars_format::scientific);
  std::string sci(buf, res.ptr);

  const auto epos = sci.find('e');
  std::string digits = sci.substr(0, epos);
  const int exp10 = std::stoi(sci.substr(epos + 1));
  const auto dot = digits.find('.');
  if (dot != std::string::npos) digits.erase(dot, 1);
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  // value = 0.digits * 10^n
  const int n = exp10 + 1;
  const int k = static_cast<int>(digits.size());

  std::string out;
  if (negative) out.push_back('-');
  if (k <= n && n <= 21) {
    out += digits;
    out.append(static_cast<std::size_t>(n - k), '0');
  } else if (0 < n && n <= 21) {
    out += digits.substr(0, static_cast<std::size_t>(n));
    out.push_back('.');
    out += digits.substr(static_cast<std::size_t>(n));
  } else if (-6 < n && n <= 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-n), '0');
    out += digits;
  } else {
    out.push_back(digits[0]);
    if (k > 1) {
      out.push_back('.');
      out += digits.substr(1);
    }
    const int e = n - 1;
    out.push_back('e');
    out.push_back(e >= 0 ? '+' : '-');
    out += std::to_string(e >= 0 ? e : -e);
  }
  return out;
}

std::string canonicalize(const json& value) {
  std::string out;
  out.reserve(256);
  append_value(value, out);
  return out;
}

}  // namespace acap

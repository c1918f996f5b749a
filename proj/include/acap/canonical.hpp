#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace acap {

using json = nlohmann::json;

// Raised for values with no canonical form: NaN/Infinity, invalid UTF-8,
// binary/discarded values.
class CanonicalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// RFC 8785 (JCS) canonical serialization. Object keys are sorted by UTF-16
// code units, numbers use ECMAScript shortest-round-trip formatting, strings
// carry minimal escaping, output is UTF-8 with no whitespace. Deterministic:
// equal JSON values (up to object key order) produce identical bytes.
std::string canonicalize(const json& value);

// ECMAScript Number::toString for a finite double; exposed for reuse and tests.
std::string ecmascript_number(double v);

}  // namespace acap

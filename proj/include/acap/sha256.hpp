#pragma once

#include <string>
#include <string_view>

namespace acap {

// 64 lowercase hex characters.
std::string sha256_hex(std::string_view bytes);

// "sha256:" + 64 lowercase hex characters, the content-address form used on the wire.
std::string sha256_prefixed(std::string_view bytes);

}  // namespace acap

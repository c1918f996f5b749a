#include "acap/sha256.hpp"

#include <openssl/evp.h>

#include "acap/util.hpp"

namespace acap {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  return to_hex(digest, len);
}

std::string sha256_prefixed(std::string_view bytes) { return "sha256:" + sha256_hex(bytes); }

}  // namespace acap

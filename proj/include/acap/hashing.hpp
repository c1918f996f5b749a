#pragma once

#include "acap/types.hpp"

namespace acap {

// "sha256:" + hex over the canonical JSON with the hash field blanked; the
// stored hash never influences the digest.
std::string compute_policy_hash(const PolicyDocument& doc);
std::string compute_policy_hash(json doc);

// Same bootstrapping convention over caller_capability_hash.
std::string compute_capability_hash(const CapabilityManifest& m);
std::string compute_capability_hash(json manifest);

}  // namespace acap

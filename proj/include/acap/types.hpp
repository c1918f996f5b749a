#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Protocol record types for the Agent Consent and Adherence Protocol (ACAP):
// a callee publishes a versioned, content-addressed PolicyDocument; a caller
// answers with a ConsentRecord holding one ParsedClaim per policy claim; each
// action attempt is evidenced by an AdherenceEvent citing the claim evaluated.
// Records are immutable value objects; all operations over them are pure.

namespace acap {

using json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ── enums ────────────────────────────────────────────────────────────────────

enum class RuleType { permission, prohibition, obligation, unknown };
enum class ConstraintOp { eq, neq, in, not_in, lt, lteq, gt, gteq, unknown };
enum class ConsentDecision { accepted, rejected, conditional, unknown };
enum class AdherenceDecision { permit, deny, escalate, unknown };
enum class ReconsentTrigger { policy_bump, capability_change, principal_change };

std::string to_string(RuleType v);
std::string to_string(ConstraintOp v);
std::string to_string(ConsentDecision v);
std::string to_string(AdherenceDecision v);
std::string to_string(ReconsentTrigger v);  // "POLICY_BUMP" etc.

RuleType rule_type_from(const std::string& s);
ConstraintOp constraint_op_from(const std::string& s);
ConsentDecision consent_decision_from(const std::string& s);
AdherenceDecision adherence_decision_from(const std::string& s);
std::optional<ReconsentTrigger> reconsent_trigger_from(const std::string& s);

// valid_until sentinels, exact wire literals.
inline constexpr const char* kOnVersionBump = "on_version_bump";
inline constexpr const char* kOnCapabilityChange = "on_capability_change";
inline constexpr const char* kOnAnyChange = "on_any_change";
bool is_valid_until_sentinel(const std::string& s);

// ── records ──────────────────────────────────────────────────────────────────

// One comparison over an action context: left_operand names a context key,
// right_operand is a scalar (eq/neq, ordering ops) or a list (in/not_in).
struct Constraint {
  std::string left_operand;
  ConstraintOp op = ConstraintOp::eq;
  std::string op_raw;   // original token; meaningful when op == unknown
  json right_operand;

  std::string op_token() const { return op == ConstraintOp::unknown ? op_raw : to_string(op); }
};

// A single policy clause with an id that stays stable across document
// versions. A claim whose meaning changes must be re-issued under a new id.
struct PolicyClaim {
  std::string id;
  std::string clause_ref;    // section of the human-readable document, e.g. "§3.4"
  std::string action;        // ODRL 2.2 vocabulary where applicable
  std::string asset;
  RuleType rule_type = RuleType::prohibition;
  std::string rule_type_raw;
  std::optional<Constraint> constraint;
  std::string since_version;  // document version that introduced the claim
  std::optional<std::string> category;
  std::optional<std::string> dimension;
};

// The callee's machine-readable usage policy. `hash` is the SHA-256 of the
// canonical JSON with the hash field set to "" (the digest input never
// includes itself). Claim order is significant and preserved.
struct PolicyDocument {
  std::string version;  // semver
  std::string hash;     // "sha256:" + 64 lowercase hex
  std::string effective_date;
  std::optional<std::string> supersedes;
  std::vector<PolicyClaim> claims;
  std::string publisher;  // DID or HTTPS URL
  std::string natural_language_uri;

  const PolicyClaim* find_claim(const std::string& claim_id) const;
};

// The caller's verdict for one claim: understood it or not, disputes it or
// not. A dispute must carry a reason.
struct ParsedClaim {
  std::string claim_id;
  bool understood = false;
  bool disputed = false;
  std::optional<std::string> dispute_reason;
};

// The caller's parsed understanding of and decision about one policy version.
// Records form a singly-linked chain per caller/callee pair via prev_id, and
// must contain exactly one ParsedClaim per claim of the referenced document.
struct ConsentRecord {
  std::string id;  // UUID
  std::optional<std::string> prev_id;  // null for the first record
  std::string caller;
  std::string callee;
  std::string policy_version;
  std::string policy_hash;
  std::vector<ParsedClaim> parsed_claims;
  ConsentDecision decision = ConsentDecision::unknown;
  std::string decision_raw;
  std::string timestamp;
  std::string valid_until;  // ISO 8601 UTC timestamp or a sentinel literal
  std::string signature;    // detached JWS; empty when unsigned
  std::string caller_capability_hash;
  std::optional<ReconsentTrigger> reconsent_trigger;  // set iff prev_id is set
  std::string reconsent_trigger_raw;                  // preserved unknown literal

  const ParsedClaim* find_parsed(const std::string& claim_id) const;
};

// Runtime evaluation of one claim for one action attempt, chained per consent
// record via prev_id. The reasoning string is the auditable artifact.
struct AdherenceEvent {
  std::string id;  // UUID
  std::optional<std::string> prev_id;
  std::string consent_record_id;
  std::string action;  // skill or tool name
  std::string claim_id;
  std::string clause_ref;
  AdherenceDecision decision = AdherenceDecision::unknown;
  std::string decision_raw;
  std::string reasoning;  // non-empty
  std::string timestamp;
  json context = json::object();  // flat map string -> scalar
  std::string signature;
};

// Fingerprint input for capability-bound consent: model, tools, and the
// reasoning configuration that shapes how the agent interprets claims.
struct CapabilityManifest {
  std::string model_identifier;
  std::vector<std::string> tool_manifest;
  json reasoning_configuration = json::object();  // flat map string -> scalar
  std::string caller_capability_hash;             // "" before hashing
};

// Reserved for external-ledger anchoring. Never populated by this
// implementation; the chain_anchor field is simply omitted on the wire.
struct ChainAnchor {
  std::string anchor_uri;
  std::string anchor_hash;
};

// ── JSON conversion ──────────────────────────────────────────────────────────
// to_json emits the exact wire form (field names as in the record tuples,
// snake_case). from_json is strict: missing or unknown fields raise
// ParseError; unknown enum *values* are preserved and left to the validators.

json to_json(const Constraint& v);
json to_json(const PolicyClaim& v);
json to_json(const PolicyDocument& v);
json to_json(const ParsedClaim& v);
json to_json(const ConsentRecord& v);
json to_json(const AdherenceEvent& v);
json to_json(const CapabilityManifest& v);

Constraint constraint_from_json(const json& j);
PolicyClaim claim_from_json(const json& j);
PolicyDocument document_from_json(const json& j);
ParsedClaim parsed_claim_from_json(const json& j);
ConsentRecord consent_record_from_json(const json& j);
AdherenceEvent adherence_event_from_json(const json& j);
CapabilityManifest manifest_from_json(const json& j);

}  // namespace acap

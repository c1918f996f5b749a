#include "acap/types.hpp"

#include <set>

namespace acap {

// ── enum names ───────────────────────────────────────────────────────────────

std::string to_string(RuleType v) {
  switch (v) {
    case RuleType::permission: return "permission";
    case RuleType::prohibition: return "prohibition";
    case RuleType::obligation: return "obligation";
    default: return "unknown";
  }
}

std::string to_string(ConstraintOp v) {
  switch (v) {
    case ConstraintOp::eq: return "eq";
    case ConstraintOp::neq: return "neq";
    case ConstraintOp::in: return "in";
    case ConstraintOp::not_in: return "not_in";
    case ConstraintOp::lt: return "lt";
    case ConstraintOp::lteq: return "lteq";
    case ConstraintOp::gt: return "gt";
    case ConstraintOp::gteq: return "gteq";
    default: return "unknown";
  }
}

std::string to_string(ConsentDecision v) {
  switch (v) {
    case ConsentDecision::accepted: return "accepted";
    case ConsentDecision::rejected: return "rejected";
    case ConsentDecision::conditional: return "conditional";
    default: return "unknown";
  }
}

std::string to_string(AdherenceDecision v) {
  switch (v) {
    case AdherenceDecision::permit: return "permit";
    case AdherenceDecision::deny: return "deny";
    case AdherenceDecision::escalate: return "escalate";
    default: return "unknown";
  }
}

std::string to_string(ReconsentTrigger v) {
  switch (v) {
    case ReconsentTrigger::policy_bump: return "POLICY_BUMP";
    case ReconsentTrigger::capability_change: return "CAPABILITY_CHANGE";
    default: return "PRINCIPAL_CHANGE";
  }
}

RuleType rule_type_from(const std::string& s) {
  if (s == "permission") return RuleType::permission;
  if (s == "prohibition") return RuleType::prohibition;
  if (s == "obligation") return RuleType::obligation;
  return RuleType::unknown;
}

ConstraintOp constraint_op_from(const std::string& s) {
  if (s == "eq") return ConstraintOp::eq;
  if (s == "neq") return ConstraintOp::neq;
  if (s == "in") return ConstraintOp::in;
  if (s == "not_in") return ConstraintOp::not_in;
  if (s == "lt") return ConstraintOp::lt;
  if (s == "lteq") return ConstraintOp::lteq;
  if (s == "gt") return ConstraintOp::gt;
  if (s == "gteq") return ConstraintOp::gteq;
  return ConstraintOp::unknown;
}

ConsentDecision consent_decision_from(const std::string& s) {
  if (s == "accepted") return ConsentDecision::accepted;
  if (s == "rejected") return ConsentDecision::rejected;
  if (s == "conditional") return ConsentDecision::conditional;
  return ConsentDecision::unknown;
}

AdherenceDecision adherence_decision_from(const std::string& s) {
  if (s == "permit") return AdherenceDecision::permit;
  if (s == "deny") return AdherenceDecision::deny;
  if (s == "escalate") return AdherenceDecision::escalate;
  return AdherenceDecision::unknown;
}

std::optional<ReconsentTrigger> reconsent_trigger_from(const std::string& s) {
  if (s == "POLICY_BUMP") return ReconsentTrigger::policy_bump;
  if (s == "CAPABILITY_CHANGE") return ReconsentTrigger::capability_change;
  if (s == "PRINCIPAL_CHANGE") return ReconsentTrigger::principal_change;
  return std::nullopt;
}

bool is_valid_until_sentinel(const std::string& s) {
  return s == kOnVersionBump || s == kOnCapabilityChange || s == kOnAnyChange;
}

const PolicyClaim* PolicyDocument::find_claim(const std::string& claim_id) const {
  for (const auto& c : claims)
    if (c.id == claim_id) return &c;
  return nullptr;
}

const ParsedClaim* ConsentRecord::find_parsed(const std::string& claim_id) const {
  for (const auto& p : parsed_claims)
    if (p.claim_id == claim_id) return &p;
  return nullptr;
}

// ── strict parse helpers ─────────────────────────────────────────────────────

namespace {

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw ParseError(std::string(what) + ": unknown field '" + it.key() + "'");
    }
  }
}

const json& require(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

std::string require_string(const json& j, const char* key, const char* what) {
  const json& v = require(j, key, what);
  if (!v.is_string()) throw ParseError(std::string(what) + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

bool require_bool(const json& j, const char* key, const char* what) {
  const json& v = require(j, key, what);
  if (!v.is_boolean())
    throw ParseError(std::string(what) + ": field '" + key + "' must be a boolean");
  return v.get<bool>();
}

std::optional<std::string> optional_string(const json& j, const char* key, const char* what) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ParseError(std::string(what) + ": field '" + key + "' must be a string");
  return it->get<std::string>();
}

bool is_scalar(const json& v) {
  return v.is_string() || v.is_boolean() || v.is_number() || v.is_null();
}

json require_flat_map(const json& j, const char* key, const char* what) {
  const json& v = require(j, key, what);
  if (!v.is_object()) throw ParseError(std::string(what) + ": field '" + key + "' must be an object");
  for (auto it = v.begin(); it != v.end(); ++it) {
    if (it.key().empty()) throw ParseError(std::string(what) + ": empty key in '" + key + "'");
    if (!is_scalar(it.value()))
      throw ParseError(std::string(what) + ": '" + key + "." + it.key() + "' must be a scalar");
  }
  return v;
}

}  // namespace

// ── to_json ──────────────────────────────────────────────────────────────────

json to_json(const Constraint& v) {
  return json{{"left_operand", v.left_operand},
              {"operator", v.op_token()},
              {"right_operand", v.right_operand}};
}

json to_json(const PolicyClaim& v) {
  json j{{"id", v.id},
         {"clause_ref", v.clause_ref},
         {"action", v.action},
         {"asset", v.asset},
         {"rule_type", v.rule_type == RuleType::unknown ? v.rule_type_raw : to_string(v.rule_type)},
         {"since_version", v.since_version}};
  if (v.constraint) j["constraint"] = to_json(*v.constraint);
  if (v.category) j["category"] = *v.category;
  if (v.dimension) j["dimension"] = *v.dimension;
  return j;
}

json to_json(const PolicyDocument& v) {
  json claims = json::array();
  for (const auto& c : v.claims) claims.push_back(to_json(c));
  json j{{"version", v.version},
         {"hash", v.hash},
         {"effective_date", v.effective_date},
         {"claims", std::move(claims)},
         {"publisher", v.publisher},
         {"natural_language_uri", v.natural_language_uri}};
  if (v.supersedes) j["supersedes"] = *v.supersedes;
  return j;
}

json to_json(const ParsedClaim& v) {
  json j{{"claim_id", v.claim_id}, {"understood", v.understood}, {"disputed", v.disputed}};
  if (v.dispute_reason) j["dispute_reason"] = *v.dispute_reason;
  return j;
}

json to_json(const ConsentRecord& v) {
  json parsed = json::array();
  for (const auto& p : v.parsed_claims) parsed.push_back(to_json(p));
  json j{{"id", v.id},
         {"prev_id", v.prev_id ? json(*v.prev_id) : json(nullptr)},
         {"caller", v.caller},
         {"callee", v.callee},
         {"policy_version", v.policy_version},
         {"policy_hash", v.policy_hash},
         {"parsed_claims", std::move(parsed)},
         {"decision",
          v.decision == ConsentDecision::unknown ? v.decision_raw : to_string(v.decision)},
         {"timestamp", v.timestamp},
         {"valid_until", v.valid_until},
         {"signature", v.signature},
         {"caller_capability_hash", v.caller_capability_hash}};
  if (v.reconsent_trigger) {
    j["reconsent_trigger"] = to_string(*v.reconsent_trigger);
  } else if (!v.reconsent_trigger_raw.empty()) {
    j["reconsent_trigger"] = v.reconsent_trigger_raw;
  }
  return j;
}

json to_json(const AdherenceEvent& v) {
  return json{{"id", v.id},
              {"prev_id", v.prev_id ? json(*v.prev_id) : json(nullptr)},
              {"consent_record_id", v.consent_record_id},
              {"action", v.action},
              {"claim_id", v.claim_id},
              {"clause_ref", v.clause_ref},
              {"decision",
               v.decision == AdherenceDecision::unknown ? v.decision_raw : to_string(v.decision)},
              {"reasoning", v.reasoning},
              {"timestamp", v.timestamp},
              {"context", v.context},
              {"signature", v.signature}};
}

json to_json(const CapabilityManifest& v) {
  return json{{"model_identifier", v.model_identifier},
              {"tool_manifest", v.tool_manifest},
              {"reasoning_configuration", v.reasoning_configuration},
              {"caller_capability_hash", v.caller_capability_hash}};
}

// ── from_json ────────────────────────────────────────────────────────────────

Constraint constraint_from_json(const json& j) {
  require_object(j, "Constraint");
  reject_unknown_keys(j, {"left_operand", "operator", "right_operand"}, "Constraint");
  Constraint c;
  c.left_operand = require_string(j, "left_operand", "Constraint");
  c.op_raw = require_string(j, "operator", "Constraint");
  c.op = constraint_op_from(c.op_raw);
  c.right_operand = require(j, "right_operand", "Constraint");
  if (!is_scalar(c.right_operand) && !c.right_operand.is_array()) {
    throw ParseError("Constraint: right_operand must be a scalar or a list of scalars");
  }
  return c;
}

PolicyClaim claim_from_json(const json& j) {
  require_object(j, "PolicyClaim");
  reject_unknown_keys(j,
                      {"id", "clause_ref", "action", "asset", "rule_type", "constraint",
                       "since_version", "category", "dimension"},
                      "PolicyClaim");
  PolicyClaim c;
  c.id = require_string(j, "id", "PolicyClaim");
  c.clause_ref = require_string(j, "clause_ref", "PolicyClaim");
  c.action = require_string(j, "action", "PolicyClaim");
  c.asset = require_string(j, "asset", "PolicyClaim");
  c.rule_type_raw = require_string(j, "rule_type", "PolicyClaim");
  c.rule_type = rule_type_from(c.rule_type_raw);
  c.since_version = require_string(j, "since_version", "PolicyClaim");
  if (auto it = j.find("constraint"); it != j.end() && !it->is_null()) {
    c.constraint = constraint_from_json(*it);
  }
  c.category = optional_string(j, "category", "PolicyClaim");
  c.dimension = optional_string(j, "dimension", "PolicyClaim");
  return c;
}

PolicyDocument document_from_json(const json& j) {
  require_object(j, "PolicyDocument");
  reject_unknown_keys(j,
                      {"version", "hash", "effective_date", "supersedes", "claims", "publisher",
                       "natural_language_uri"},
                      "PolicyDocument");
  PolicyDocument d;
  d.version = require_string(j, "version", "PolicyDocument");
  d.hash = require_string(j, "hash", "PolicyDocument");
  d.effective_date = require_string(j, "effective_date", "PolicyDocument");
  d.supersedes = optional_string(j, "supersedes", "PolicyDocument");
  const json& claims = require(j, "claims", "PolicyDocument");
  if (!claims.is_array()) throw ParseError("PolicyDocument: claims must be an array");
  for (const auto& c : claims) d.claims.push_back(claim_from_json(c));
  d.publisher = require_string(j, "publisher", "PolicyDocument");
  d.natural_language_uri = require_string(j, "natural_language_uri", "PolicyDocument");
  return d;
}

ParsedClaim parsed_claim_from_json(const json& j) {
  require_object(j, "ParsedClaim");
  reject_unknown_keys(j, {"claim_id", "understood", "disputed", "dispute_reason"}, "ParsedClaim");
  ParsedClaim p;
  p.claim_id = require_string(j, "claim_id", "ParsedClaim");
  p.understood = require_bool(j, "understood", "ParsedClaim");
  p.disputed = require_bool(j, "disputed", "ParsedClaim");
  p.dispute_reason = optional_string(j, "dispute_reason", "ParsedClaim");
  return p;
}

ConsentRecord consent_record_from_json(const json& j) {
  require_object(j, "ConsentRecord");
  reject_unknown_keys(j,
                      {"id", "prev_id", "caller", "callee", "policy_version", "policy_hash",
                       "parsed_claims", "decision", "timestamp", "valid_until", "signature",
                       "caller_capability_hash", "reconsent_trigger"},
                      "ConsentRecord");
  ConsentRecord r;
  r.id = require_string(j, "id", "ConsentRecord");
  r.prev_id = optional_string(j, "prev_id", "ConsentRecord");
  r.caller = require_string(j, "caller", "ConsentRecord");
  r.callee = require_string(j, "callee", "ConsentRecord");
  r.policy_version = require_string(j, "policy_version", "ConsentRecord");
  r.policy_hash = require_string(j, "policy_hash", "ConsentRecord");
  const json& parsed = require(j, "parsed_claims", "ConsentRecord");
  if (!parsed.is_array()) throw ParseError("ConsentRecord: parsed_claims must be an array");
  for (const auto& p : parsed) r.parsed_claims.push_back(parsed_claim_from_json(p));
  r.decision_raw = require_string(j, "decision", "ConsentRecord");
  r.decision = consent_decision_from(r.decision_raw);
  r.timestamp = require_string(j, "timestamp", "ConsentRecord");
  r.valid_until = require_string(j, "valid_until", "ConsentRecord");
  r.signature = require_string(j, "signature", "ConsentRecord");
  r.caller_capability_hash = require_string(j, "caller_capability_hash", "ConsentRecord");
  if (auto t = optional_string(j, "reconsent_trigger", "ConsentRecord")) {
    r.reconsent_trigger = reconsent_trigger_from(*t);
    if (!r.reconsent_trigger) r.reconsent_trigger_raw = *t;
  }
  return r;
}

AdherenceEvent adherence_event_from_json(const json& j) {
  require_object(j, "AdherenceEvent");
  reject_unknown_keys(j,
                      {"id", "prev_id", "consent_record_id", "action", "claim_id", "clause_ref",
                       "decision", "reasoning", "timestamp", "context", "signature"},
                      "AdherenceEvent");
  AdherenceEvent e;
  e.id = require_string(j, "id", "AdherenceEvent");
  e.prev_id = optional_string(j, "prev_id", "AdherenceEvent");
  e.consent_record_id = require_string(j, "consent_record_id", "AdherenceEvent");
  e.action = require_string(j, "action", "AdherenceEvent");
  e.claim_id = require_string(j, "claim_id", "AdherenceEvent");
  e.clause_ref = require_string(j, "clause_ref", "AdherenceEvent");
  e.decision_raw = require_string(j, "decision", "AdherenceEvent");
  e.decision = adherence_decision_from(e.decision_raw);
  e.reasoning = require_string(j, "reasoning", "AdherenceEvent");
  e.timestamp = require_string(j, "timestamp", "AdherenceEvent");
  e.context = require_flat_map(j, "context", "AdherenceEvent");
  e.signature = require_string(j, "signature", "AdherenceEvent");
  return e;
}

CapabilityManifest manifest_from_json(const json& j) {
  require_object(j, "CapabilityManifest");
  reject_unknown_keys(
      j, {"model_identifier", "tool_manifest", "reasoning_configuration", "caller_capability_hash"},
      "CapabilityManifest");
  CapabilityManifest m;
  m.model_identifier = require_string(j, "model_identifier", "CapabilityManifest");
  const json& tools = require(j, "tool_manifest", "CapabilityManifest");
  if (!tools.is_array()) throw ParseError("CapabilityManifest: tool_manifest must be an array");
  for (const auto& t : tools) {
    if (!t.is_string()) throw ParseError("CapabilityManifest: tool_manifest entries must be strings");
    m.tool_manifest.push_back(t.get<std::string>());
  }
  m.reasoning_configuration = require_flat_map(j, "reasoning_configuration", "CapabilityManifest");
  m.caller_capability_hash = require_string(j, "caller_capability_hash", "CapabilityManifest");
  return m;
}

}  // namespace acap

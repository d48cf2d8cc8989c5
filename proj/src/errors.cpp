// SPDX-License-Identifier: Apache-2.0
#include "mcal/errors.hpp"

namespace mcal {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_space: return "EmptySpace";
    case errc::nonpositive_volume: return "NonpositiveVolume";
    case errc::duplicate_label: return "DuplicateLabel";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::nonincreasing_edges: return "NonincreasingEdges";
    case errc::nonpositive_edge: return "NonpositiveEdge";
    case errc::foreign_cell_set: return "ForeignCellSet";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::not_probability: return "NotProbability";
    case errc::zero_overlap: return "ZeroOverlap";
    case errc::empty_set_renormalize: return "EmptySetRenormalize";
    case errc::zero_probability_conditioning: return "ZeroProbabilityConditioning";
    case errc::zero_pullback_mass: return "ZeroPullbackMass";
    case errc::zero_mass_sampling: return "ZeroMassSampling";
    case errc::attempt_budget_exhausted: return "AttemptBudgetExhausted";
    case errc::unbounded_likelihood: return "UnboundedLikelihood";
    case errc::zero_acceptance: return "ZeroAcceptance";
    case errc::invalid_acceptance_scale: return "InvalidAcceptanceScale";
    case errc::mapping_domain: return "MappingDomainError";
    case errc::empty_cloud: return "EmptyCloud";
    case errc::zero_evidence: return "ZeroEvidence";
    case errc::inconsistent_oracles: return "InconsistentOracles";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::invalid_config: return "InvalidConfig";
  }
  return "UnknownError";
}

const char* to_string(parse_errc kind) noexcept {
  switch (kind) {
    case parse_errc::syntax: return "SyntaxError";
    case parse_errc::unknown_key: return "UnknownKey";
    case parse_errc::unresolved_reference: return "UnresolvedReference";
    case parse_errc::schema_violation: return "SchemaViolation";
  }
  return "ParseError";
}

}  // namespace mcal

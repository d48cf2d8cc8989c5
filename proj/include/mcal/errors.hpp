// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace mcal {

/// Domain-level failure codes. The CLI maps any Error to exit status 1.
enum class errc {
  empty_space,
  nonpositive_volume,
  duplicate_label,
  length_mismatch,
  nonincreasing_edges,
  nonpositive_edge,
  foreign_cell_set,
  space_mismatch,
  not_probability,
  zero_overlap,
  empty_set_renormalize,
  zero_probability_conditioning,
  zero_pullback_mass,
  zero_mass_sampling,
  attempt_budget_exhausted,
  unbounded_likelihood,
  zero_acceptance,
  invalid_acceptance_scale,
  mapping_domain,
  empty_cloud,
  zero_evidence,
  inconsistent_oracles,
  unbound_variable,
  invalid_config,
};

const char* to_string(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

/// Input-level failure codes: malformed text, closed-schema violations,
/// dangling names. The CLI maps any ParseError to exit status 2.
enum class parse_errc {
  syntax,
  unknown_key,
  unresolved_reference,
  schema_violation,
};

const char* to_string(parse_errc kind) noexcept;

class ParseError : public std::runtime_error {
 public:
  ParseError(parse_errc kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  parse_errc kind() const noexcept { return kind_; }

 private:
  parse_errc kind_;
};

[[noreturn]] inline void fail(parse_errc kind, const std::string& what) {
  throw ParseError(kind, what);
}

}  // namespace mcal

#pragma once

#include <stdexcept>
#include <string>

namespace rforest {

// Stable error identities surfaced through the library and the CLI.
enum class Errc {
  parse_error,
  non_rational_value,
  metric_axiom_violation,
  single_point_space,
  lipschitz_violation,
  missing_zero_breakpoint,
  label_on_supremum,
  mixed_components,
  root_mismatch,
  separation_impossible,
  empty_choice,
  different_components,
  bad_truncation,
  disconnected_interval,
  duplicate_component_root,
  invalid_type,
  point_outside_neighborhood,
  uniqueness_failure,
  unknown_suite,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rforest

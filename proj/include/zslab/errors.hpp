#pragma once

#include <stdexcept>
#include <string>

namespace zslab {

// Every failure the library reports deliberately carries one of these codes,
// so callers (CLI, tests) can map them to exit codes without string matching.
enum class errc {
  invalid_parameter,
  invalid_table,
  element_out_of_range,
  not_a_subsequence,
  empty_sequence,
  too_long,
  not_cyclic,
  not_a_generator,
  family_mismatch,
  cap_exceeded,
  state_space_cap_exceeded,
  budget_exceeded,
  unknown_check,
  n_too_small,
  parse_error,
};

inline const char* to_string(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_table: return "invalid-table";
    case errc::element_out_of_range: return "element-out-of-range";
    case errc::not_a_subsequence: return "not-a-subsequence";
    case errc::empty_sequence: return "empty-sequence";
    case errc::too_long: return "too-long";
    case errc::not_cyclic: return "not-cyclic";
    case errc::not_a_generator: return "not-a-generator";
    case errc::family_mismatch: return "family-mismatch";
    case errc::cap_exceeded: return "cap-exceeded";
    case errc::state_space_cap_exceeded: return "state-space-cap-exceeded";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::unknown_check: return "unknown-check";
    case errc::n_too_small: return "n-too-small";
    case errc::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace zslab

#pragma once

#include <stdexcept>
#include <string>

namespace pathmine {

enum class errc {
  // event log loading
  missing_column,
  empty_input,
  malformed_csv,
  degenerate_input,
  // staging
  missing_measurement,
  negative_value,
  baseline_missing,
  // discovery
  empty_log,
  // analytics
  empty_reference,
  // llm
  unresolved_placeholder,
  auth_error,
  rate_limited,
  context_overflow,
  transport,
  malformed_response,
  all_models_failed,
  // orchestration
  missing_section,
  insufficient_reports,
  evaluator_format_error,
  spec_mismatch,
  empty_group,
  // config / cli
  invalid_config,
  invalid_argument,
  io_error,
  internal,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace pathmine

#include "pathmine/errors.hpp"

namespace pathmine {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::missing_column: return "MissingColumn";
    case errc::empty_input: return "EmptyInput";
    case errc::malformed_csv: return "MalformedCsv";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::missing_measurement: return "MissingMeasurement";
    case errc::negative_value: return "NegativeValue";
    case errc::baseline_missing: return "BaselineMissing";
    case errc::empty_log: return "EmptyLog";
    case errc::empty_reference: return "EmptyReference";
    case errc::unresolved_placeholder: return "UnresolvedPlaceholder";
    case errc::auth_error: return "AuthError";
    case errc::rate_limited: return "RateLimited";
    case errc::context_overflow: return "ContextOverflow";
    case errc::transport: return "Transport";
    case errc::malformed_response: return "MalformedResponse";
    case errc::all_models_failed: return "AllModelsFailed";
    case errc::missing_section: return "MissingSection";
    case errc::insufficient_reports: return "InsufficientReports";
    case errc::evaluator_format_error: return "EvaluatorFormatError";
    case errc::spec_mismatch: return "SpecMismatch";
    case errc::empty_group: return "EmptyGroup";
    case errc::invalid_config: return "InvalidConfig";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::io_error: return "IoError";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace pathmine

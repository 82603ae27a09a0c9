#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathmine/timestamp.hpp"

namespace pathmine::eventlog {

struct Event {
  std::string case_id;
  std::string activity;  // non-empty, whitespace-trimmed
  Timestamp timestamp;
  std::map<std::string, std::string> attributes;  // only non-empty values kept

  friend bool operator==(const Event&, const Event&) = default;
};

struct Trace {
  std::string case_id;
  std::vector<Event> events;  // sorted by timestamp, input order breaks ties

  friend bool operator==(const Trace&, const Trace&) = default;
};

struct ColumnMapping {
  std::string case_id = "case_id";
  std::string activity = "activity";
  std::string timestamp = "timestamp";

  friend bool operator==(const ColumnMapping&, const ColumnMapping&) = default;
};

class EventLog {
 public:
  EventLog() = default;

  // Groups events by case and time-sorts each trace (stable: equal timestamps
  // keep their order in `events`).
  static EventLog from_events(std::vector<Event> events,
                              ColumnMapping mapping = {},
                              std::string source_digest = "");

  const std::map<std::string, Trace>& traces() const { return traces_; }
  const ColumnMapping& column_mapping() const { return column_mapping_; }
  const std::string& source_digest() const { return source_digest_; }

  std::size_t n_cases() const { return traces_.size(); }
  std::size_t n_events() const;
  std::vector<std::string> activity_vocabulary() const;  // sorted distinct

  // Digest of the canonical CSV serialization.
  std::string content_digest() const;

  bool same_content(const EventLog& other) const { return traces_ == other.traces_; }

 private:
  std::map<std::string, Trace> traces_;
  ColumnMapping column_mapping_;
  std::string source_digest_;
};

struct QualityIssue {
  std::size_t row_number = 0;  // 1-based CSV record number, header = 1
  std::string code;
  std::string message;
  bool rejecting = true;
};

struct QualityReport {
  std::size_t n_cases = 0;
  std::size_t n_events = 0;
  std::size_t n_rejected_rows = 0;
  std::vector<QualityIssue> issues;
  std::vector<std::string> activity_vocabulary;
};

// Issue codes emitted by load_event_log.
namespace issue {
inline constexpr const char* timestamp_parse = "TIMESTAMP_PARSE";
inline constexpr const char* empty_activity = "EMPTY_ACTIVITY";
inline constexpr const char* empty_case = "EMPTY_CASE";
inline constexpr const char* field_count = "FIELD_COUNT";
inline constexpr const char* activity_trimmed = "ACTIVITY_TRIMMED";  // non-rejecting
}  // namespace issue

// Throws MissingColumn, EmptyInput, MalformedCsv, DegenerateInput (when more
// than half of the data rows reject).
std::pair<EventLog, QualityReport> load_event_log(std::string_view csv_bytes,
                                                  const ColumnMapping& mapping = {});

using TracePredicate = std::function<bool(const Trace&)>;

EventLog filter_log(const EventLog& log, const TracePredicate& keep);

struct LogStatistics {
  std::size_t n_cases = 0;
  std::size_t n_events = 0;
  std::map<std::string, std::uint64_t> activity_frequencies;
  std::map<std::size_t, std::uint64_t> trace_length_distribution;
  std::optional<std::pair<Timestamp, Timestamp>> time_span;
};

LogStatistics log_statistics(const EventLog& log);

// Canonical CSV: mapped columns first, then the sorted union of attribute
// keys. Reloading yields an equal log.
std::string serialize_csv(const EventLog& log);

}  // namespace pathmine::eventlog

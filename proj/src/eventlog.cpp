#include "pathmine/eventlog.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "pathmine/csv.hpp"
#include "pathmine/digest.hpp"
#include "pathmine/errors.hpp"

namespace pathmine::eventlog {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

EventLog EventLog::from_events(std::vector<Event> events, ColumnMapping mapping,
                               std::string source_digest) {
  EventLog log;
  log.column_mapping_ = std::move(mapping);
  for (auto& ev : events) {
    auto& trace = log.traces_[ev.case_id];
    trace.case_id = ev.case_id;
    trace.events.push_back(std::move(ev));
  }
  for (auto& [id, trace] : log.traces_) {
    std::stable_sort(trace.events.begin(), trace.events.end(),
                     [](const Event& a, const Event& b) {
                       return a.timestamp < b.timestamp;
                     });
  }
  log.source_digest_ =
      source_digest.empty() ? log.content_digest() : std::move(source_digest);
  return log;
}

std::size_t EventLog::n_events() const {
  std::size_t n = 0;
  for (const auto& [id, trace] : traces_) n += trace.events.size();
  return n;
}

std::vector<std::string> EventLog::activity_vocabulary() const {
  std::set<std::string> vocab;
  for (const auto& [id, trace] : traces_)
    for (const auto& ev : trace.events) vocab.insert(ev.activity);
  return {vocab.begin(), vocab.end()};
}

std::string EventLog::content_digest() const {
  return digest_hex(serialize_csv(*this));
}

std::pair<EventLog, QualityReport> load_event_log(std::string_view csv_bytes,
                                                  const ColumnMapping& mapping) {
  csv::Table table = csv::parse(csv_bytes);
  if (table.header.empty()) {
    throw Error(errc::empty_input, "input has no header row");
  }

  auto column_index = [&](const std::string& name) -> std::size_t {
    auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
      throw Error(errc::missing_column, "mapped column '" + name +
                                            "' not found in header");
    }
    return static_cast<std::size_t>(it - table.header.begin());
  };
  const std::size_t case_col = column_index(mapping.case_id);
  const std::size_t act_col = column_index(mapping.activity);
  const std::size_t ts_col = column_index(mapping.timestamp);

  if (table.rows.empty()) {
    throw Error(errc::empty_input, "zero data rows");
  }

  QualityReport report;
  std::vector<Event> events;
  events.reserve(table.rows.size());

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t row_number = r + 2;  // header is record 1
    if (row.size() != table.header.size()) {
      report.issues.push_back({row_number, issue::field_count,
                               "expected " + std::to_string(table.header.size()) +
                                   " fields, got " + std::to_string(row.size()),
                               true});
      continue;
    }
    std::string case_id = row[case_col];
    if (trim(case_id).empty()) {
      report.issues.push_back(
          {row_number, issue::empty_case, "empty case id", true});
      continue;
    }
    std::string activity = trim(row[act_col]);
    if (activity.empty()) {
      report.issues.push_back(
          {row_number, issue::empty_activity, "empty activity label", true});
      continue;
    }
    if (activity != row[act_col]) {
      report.issues.push_back({row_number, issue::activity_trimmed,
                               "surrounding whitespace removed from activity",
                               false});
    }
    auto ts = parse_iso8601(row[ts_col]);
    if (!ts) {
      report.issues.push_back({row_number, issue::timestamp_parse,
                               "unparseable timestamp '" + row[ts_col] + "'",
                               true});
      continue;
    }
    Event ev;
    ev.case_id = std::move(case_id);
    ev.activity = std::move(activity);
    ev.timestamp = *ts;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == case_col || c == act_col || c == ts_col) continue;
      if (!row[c].empty()) ev.attributes[table.header[c]] = row[c];
    }
    events.push_back(std::move(ev));
  }

  for (const auto& iss : report.issues)
    if (iss.rejecting) ++report.n_rejected_rows;
  if (report.n_rejected_rows * 2 > table.rows.size()) {
    throw Error(errc::degenerate_input,
                std::to_string(report.n_rejected_rows) + " of " +
                    std::to_string(table.rows.size()) + " rows rejected");
  }

  EventLog log = EventLog::from_events(std::move(events), mapping,
                                       digest_hex(csv_bytes));
  report.n_cases = log.n_cases();
  report.n_events = log.n_events();
  report.activity_vocabulary = log.activity_vocabulary();
  return {std::move(log), std::move(report)};
}

EventLog filter_log(const EventLog& log, const TracePredicate& keep) {
  std::vector<Event> events;
  for (const auto& [id, trace] : log.traces()) {
    if (keep(trace)) {
      events.insert(events.end(), trace.events.begin(), trace.events.end());
    }
  }
  return EventLog::from_events(std::move(events), log.column_mapping());
}

LogStatistics log_statistics(const EventLog& log) {
  LogStatistics stats;
  stats.n_cases = log.n_cases();
  for (const auto& [id, trace] : log.traces()) {
    stats.n_events += trace.events.size();
    ++stats.trace_length_distribution[trace.events.size()];
    for (const auto& ev : trace.events) {
      ++stats.activity_frequencies[ev.activity];
      if (!stats.time_span) {
        stats.time_span = {ev.timestamp, ev.timestamp};
      } else {
        stats.time_span->first = std::min(stats.time_span->first, ev.timestamp);
        stats.time_span->second = std::max(stats.time_span->second, ev.timestamp);
      }
    }
  }
  return stats;
}

std::string serialize_csv(const EventLog& log) {
  const auto& mapping = log.column_mapping();
  std::set<std::string> attr_keys;
  for (const auto& [id, trace] : log.traces())
    for (const auto& ev : trace.events)
      for (const auto& [k, v] : ev.attributes) attr_keys.insert(k);

  std::vector<std::string> header = {mapping.case_id, mapping.activity,
                                     mapping.timestamp};
  header.insert(header.end(), attr_keys.begin(), attr_keys.end());

  std::string out = csv::join_row(header);
  for (const auto& [id, trace] : log.traces()) {
    for (const auto& ev : trace.events) {
      std::vector<std::string> row = {ev.case_id, ev.activity,
                                      format_iso8601(ev.timestamp)};
      for (const auto& key : attr_keys) {
        auto it = ev.attributes.find(key);
        row.push_back(it == ev.attributes.end() ? "" : it->second);
      }
      out += csv::join_row(row);
    }
  }
  return out;
}

}  // namespace pathmine::eventlog

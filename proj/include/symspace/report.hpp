#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace symspace {

inline constexpr const char* kVersion = "0.1.0";

using Field = std::variant<double, std::int64_t, std::string, bool>;

// CSV text of a field: doubles with 17 significant digits, +inf for
// divergent values.
std::string field_text(const Field& f);

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Field>> rows;
};

struct VerdictReport {
  std::string command;
  std::vector<std::pair<std::string, Field>> parameters;
  std::vector<ReportTable> tables;
  std::string classification;  // bounded | divergent | inconclusive | pass | fail
  std::vector<std::pair<std::string, Field>> metrics;
  bool passed = false;
  std::string verdict;
  std::optional<double> wall_time;
  std::string version = kVersion;
};

// "# symspace-report v1" header, commented echo lines, then each table
// (introduced by "# table: name") and commented summary lines.
std::string to_csv(const VerdictReport& report);
std::string to_json(const VerdictReport& report);

// Minimal ordered JSON writer; numbers use 17 significant digits.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(const Field& f);
  JsonWriter& value(double v) { return value(Field{v}); }
  JsonWriter& value(const std::string& s) { return value(Field{s}); }
  JsonWriter& value(const char* s) { return value(Field{std::string(s)}); }
  std::string str() const { return out_ + "\n"; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

std::string json_escape(const std::string& s);

}  // namespace symspace

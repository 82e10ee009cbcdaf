#include "symspace/report.hpp"

#include <cmath>
#include <cstdio>

#include "symspace/numeric.hpp"

namespace symspace {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string field_text(const Field& f) {
  return std::visit(Overloaded{
                        [](double v) {
                          if (std::isinf(v)) return std::string(v > 0 ? "+inf" : "-inf");
                          return format_double(v);
                        },
                        [](std::int64_t v) { return std::to_string(v); },
                        [](const std::string& v) { return v; },
                        [](bool v) { return std::string(v ? "true" : "false"); },
                    },
                    f);
}

std::string to_csv(const VerdictReport& r) {
  std::string out = "# symspace-report v1\n";
  out += "# command: " + r.command + "\n";
  out += "# version: " + r.version + "\n";
  for (const auto& [k, v] : r.parameters) out += "# param " + k + ": " + field_text(v) + "\n";
  for (const auto& t : r.tables) {
    out += "# table: " + t.name + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      out += (i ? "," : "") + csv_quote(t.columns[i]);
    }
    out += "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? "," : "") + csv_quote(field_text(row[i]));
      }
      out += "\n";
    }
  }
  for (const auto& [k, v] : r.metrics) out += "# " + k + ": " + field_text(v) + "\n";
  out += "# classification: " + r.classification + "\n";
  if (r.wall_time) out += "# wall_time_s: " + format_double(*r.wall_time) + "\n";
  out += "# verdict: " + r.verdict + "\n";
  return out;
}

std::string to_json(const VerdictReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value("symspace-report v1");
  w.key("command").value(r.command);
  w.key("version").value(r.version);
  w.key("parameters").begin_object();
  for (const auto& [k, v] : r.parameters) w.key(k).value(v);
  w.end_object();
  w.key("tables").begin_object();
  for (const auto& t : r.tables) {
    w.key(t.name).begin_array();
    for (const auto& row : t.rows) {
      w.begin_object();
      for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
        w.key(t.columns[i]).value(row[i]);
      }
      w.end_object();
    }
    w.end_array();
  }
  w.end_object();
  w.key("metrics").begin_object();
  for (const auto& [k, v] : r.metrics) w.key(k).value(v);
  w.end_object();
  w.key("classification").value(r.classification);
  w.key("passed").value(Field{r.passed});
  if (r.wall_time) w.key("wall_time_s").value(*r.wall_time);
  w.key("verdict").value(r.verdict);
  w.end_object();
  return w.str();
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

void JsonWriter::separator() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ",";
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separator();
  out_ += "{";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  first_.pop_back();
  out_ += "}";
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separator();
  out_ += "[";
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  first_.pop_back();
  out_ += "]";
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  separator();
  out_ += json_escape(k) + ":";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(const Field& f) {
  separator();
  out_ += std::visit(Overloaded{
                         [](double v) {
                           if (!std::isfinite(v)) return json_escape(field_text(v));
                           return format_double(v);
                         },
                         [](std::int64_t v) { return std::to_string(v); },
                         [](const std::string& v) { return json_escape(v); },
                         [](bool v) { return std::string(v ? "true" : "false"); },
                     },
                     f);
  return *this;
}

}  // namespace symspace

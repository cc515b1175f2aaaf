// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "output_record.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace conicmod::cli {

OutputRecord& OutputRecord::input(std::string key, FieldValue value) {
  inputs.push_back({std::move(key), std::move(value)});
  return *this;
}

OutputRecord& OutputRecord::output(std::string key, FieldValue value) {
  outputs.push_back({std::move(key), std::move(value)});
  return *this;
}

OutputRecord& OutputRecord::output_complex(const std::string& key,
                                           std::complex<double> value) {
  output(key + "_re", value.real());
  return output(key + "_im", value.imag());
}

const FieldValue* OutputRecord::find_output(std::string_view key) const {
  auto it = std::find_if(outputs.begin(), outputs.end(),
                         [&](const Field& f) { return f.key == key; });
  return it == outputs.end() ? nullptr : &it->value;
}

std::string format_double(double value) {
  // Normalize -0 so that golden files do not depend on rounding direction.
  if (value == 0.0) value = 0.0;
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return {buf, end};
}

std::string format_value(const FieldValue& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return v;
        }
      },
      value);
}

namespace {

nlohmann::ordered_json fields_to_json(const std::vector<Field>& fields) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const Field& f : fields) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            j[f.key] = v == 0.0 ? 0.0 : v;
          } else {
            j[f.key] = v;
          }
        },
        f.value);
  }
  return j;
}

std::vector<Field> fields_from_json(const nlohmann::ordered_json& j) {
  std::vector<Field> fields;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_number_integer()) {
      fields.push_back({it.key(), v.get<std::int64_t>()});
    } else if (v.is_number()) {
      fields.push_back({it.key(), v.get<double>()});
    } else if (v.is_string()) {
      fields.push_back({it.key(), v.get<std::string>()});
    } else {
      throw std::invalid_argument("unsupported field type for key " + it.key());
    }
  }
  return fields;
}

std::vector<std::string> header_of(const OutputRecord& r) {
  std::vector<std::string> keys;
  for (const Field& f : r.inputs) keys.push_back(f.key);
  for (const Field& f : r.outputs) keys.push_back(f.key);
  return keys;
}

std::vector<std::string> row_of(const OutputRecord& r) {
  std::vector<std::string> cells;
  for (const Field& f : r.inputs) cells.push_back(format_value(f.value));
  for (const Field& f : r.outputs) cells.push_back(format_value(f.value));
  return cells;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  if (records.empty()) return;
  auto join = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  join(header_of(records.front()));
  for (const OutputRecord& r : records) join(row_of(r));
}

void write_table(std::ostream& out, const std::vector<OutputRecord>& records) {
  if (records.empty()) return;
  std::vector<std::vector<std::string>> rows;
  rows.push_back(header_of(records.front()));
  for (const OutputRecord& r : records) rows.push_back(row_of(r));

  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      const std::size_t w = i < widths.size() ? widths[i] : 0;
      out << std::string(w > row[i].size() ? w - row[i].size() : 0, ' ') << row[i];
    }
    out << '\n';
  };
  emit(rows.front());
  std::size_t total = 0;
  for (std::size_t w : widths) total += w;
  out << std::string(total + 2 * (widths.empty() ? 0 : widths.size() - 1), '-') << '\n';
  for (std::size_t i = 1; i < rows.size(); ++i) emit(rows[i]);
}

}  // namespace

nlohmann::ordered_json to_json(const OutputRecord& record) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["inputs"] = fields_to_json(record.inputs);
  j["outputs"] = fields_to_json(record.outputs);
  return j;
}

OutputRecord record_from_json(const nlohmann::ordered_json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = fields_from_json(j.at("inputs"));
  r.outputs = fields_from_json(j.at("outputs"));
  return r;
}

void write_records(std::ostream& out, const std::vector<OutputRecord>& records,
                   Format format) {
  switch (format) {
    case Format::json:
      for (const OutputRecord& r : records) out << to_json(r).dump() << '\n';
      break;
    case Format::csv:
      write_csv(out, records);
      break;
    case Format::table:
      write_table(out, records);
      break;
  }
}

}  // namespace conicmod::cli

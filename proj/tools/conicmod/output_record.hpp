// Copyright 2026 The conicmod Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace conicmod::cli {

using FieldValue = std::variant<std::int64_t, double, std::string>;

struct Field {
  std::string key;
  FieldValue value;

  friend bool operator==(const Field&, const Field&) = default;
};

/// One row of command output. Keys keep insertion order so every format
/// lists them identically.
struct OutputRecord {
  std::string command;
  std::vector<Field> inputs;
  std::vector<Field> outputs;

  OutputRecord& input(std::string key, FieldValue value);
  OutputRecord& output(std::string key, FieldValue value);
  /// Adds key_re and key_im.
  OutputRecord& output_complex(const std::string& key, std::complex<double> value);

  const FieldValue* find_output(std::string_view key) const;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class Format { table, csv, json };

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);
std::string format_value(const FieldValue& value);

nlohmann::ordered_json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::ordered_json& j);

/// Writes a stream of records sharing one key layout.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records,
                   Format format);

}  // namespace conicmod::cli

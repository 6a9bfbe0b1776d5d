// Copyright 2026 The gkpkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gkpkerr::io {

enum class Format { Csv, Json };

Format parse_format(std::string_view name);

/// A flat table plus the metadata needed to reproduce it. Absent values are
/// stored as NaN and written as "nan" (CSV) or null (JSON).
struct Dataset {
    std::string schema;
    std::vector<std::pair<std::string, std::string>> provenance;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Throws std::invalid_argument on an empty schema, missing provenance,
    /// or a row whose length differs from the column count.
    void validate() const;
    void add_provenance(std::string key, std::string value);
};

/// Significant digits used for CSV values.
inline constexpr int kCsvDigits = 12;

/// Formats a value the way the CSV writer does ("%.12g", "nan", "inf").
std::string format_csv_value(double value);

void write_csv(std::ostream &out, const Dataset &data);
void write_json(std::ostream &out, const Dataset &data);
void write(std::ostream &out, const Dataset &data, Format format);

/// Parsers for the two formats. Throw std::runtime_error on malformed input.
Dataset parse_csv(std::istream &in);
Dataset parse_json(std::istream &in);
Dataset parse(std::istream &in, Format format);

}  // namespace gkpkerr::io

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

#include "gkpkerr/io/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include "json.hpp"
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gkpkerr::io {

namespace {

constexpr std::string_view kSchemaKey = "schema";

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

double parse_value(const std::string &text) {
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw std::runtime_error("dataset: bad numeric field '" + text + "'");
    return value;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void Dataset::validate() const {
    if (schema.empty()) throw std::invalid_argument("dataset: empty schema id");
    if (provenance.empty()) throw std::invalid_argument("dataset: missing provenance");
    if (columns.empty()) throw std::invalid_argument("dataset: no columns");
    for (const auto &row : rows) {
        if (row.size() != columns.size()) throw std::invalid_argument("dataset: row length != column count");
    }
}

void Dataset::add_provenance(std::string key, std::string value) {
    provenance.emplace_back(std::move(key), std::move(value));
}

std::string format_csv_value(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", kCsvDigits, value);
    return buf;
}

void write_csv(std::ostream &out, const Dataset &data) {
    data.validate();
    out << "# " << kSchemaKey << ": " << data.schema << '\n';
    for (const auto &[key, value] : data.provenance) {
        if (key.find(':') != std::string::npos || value.find('\n') != std::string::npos) {
            throw std::invalid_argument("dataset: provenance entry '" + key + "' cannot be written as CSV");
        }
        out << "# " << key << ": " << value << '\n';
    }
    for (std::size_t i = 0; i < data.columns.size(); ++i) out << (i ? "," : "") << data.columns[i];
    out << '\n';
    for (const auto &row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_csv_value(row[i]);
        out << '\n';
    }
}

void write_json(std::ostream &out, const Dataset &data) {
    data.validate();
    // One row per line keeps the files diffable; doubles are written in
    // shortest round-trip form.
    nlohmann::ordered_json provenance = nlohmann::ordered_json::object();
    for (const auto &[key, value] : data.provenance) provenance[key] = value;
    out << "{\n\"schema\": " << nlohmann::json(data.schema).dump() << ",\n\"provenance\": " << provenance.dump()
        << ",\n\"columns\": " << nlohmann::json(data.columns).dump() << ",\n\"rows\": [";
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
        auto row = nlohmann::json::array();
        for (double v : data.rows[r]) {
            if (std::isfinite(v)) {
                row.push_back(v);
            } else {
                row.push_back(nullptr);
            }
        }
        out << (r ? ",\n" : "\n") << row.dump();
    }
    out << "\n]\n}\n";
}

void write(std::ostream &out, const Dataset &data, Format format) {
    format == Format::Csv ? write_csv(out, data) : write_json(out, data);
}

Dataset parse_csv(std::istream &in) {
    Dataset data;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.starts_with("# ")) {
            if (have_header) throw std::runtime_error("dataset: comment after header row");
            const auto colon = line.find(": ", 2);
            if (colon == std::string::npos) throw std::runtime_error("dataset: malformed provenance line");
            std::string key = line.substr(2, colon - 2);
            std::string value = line.substr(colon + 2);
            if (key == kSchemaKey && data.schema.empty()) {
                data.schema = std::move(value);
            } else {
                data.add_provenance(std::move(key), std::move(value));
            }
        } else if (!have_header) {
            data.columns = split(line, ',');
            have_header = true;
        } else {
            std::vector<double> row;
            for (const auto &field : split(line, ',')) row.push_back(parse_value(field));
            data.rows.push_back(std::move(row));
        }
    }
    if (!have_header) throw std::runtime_error("dataset: missing header row");
    try {
        data.validate();
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(e.what());
    }
    return data;
}

Dataset parse_json(std::istream &in) {
    Dataset data;
    try {
        const auto doc = nlohmann::ordered_json::parse(in);
        data.schema = doc.at("schema").get<std::string>();
        for (const auto &[key, value] : doc.at("provenance").items()) {
            data.add_provenance(key, value.get<std::string>());
        }
        data.columns = doc.at("columns").get<std::vector<std::string>>();
        for (const auto &r : doc.at("rows")) {
            std::vector<double> row;
            for (const auto &v : r) {
                row.push_back(v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>());
            }
            data.rows.push_back(std::move(row));
        }
        data.validate();
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error(std::string("dataset: malformed JSON: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw std::runtime_error(e.what());
    }
    return data;
}

Dataset parse(std::istream &in, Format format) { return format == Format::Csv ? parse_csv(in) : parse_json(in); }

}  // namespace gkpkerr::io

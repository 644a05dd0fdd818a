// Copyright 2026 <Authors>
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.h"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qsv::cli {
namespace {

double RoundDouble(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string Scalar(const Json& v, int digits) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  if (v.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v.get<double>());
    return buf;
  }
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ';';
      out += Scalar(v[i], digits);
    }
    return out;
  }
  return v.dump();
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Format ParseFormat(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Json RoundNumbers(const Json& value, int digits) {
  if (value.is_number_float()) {
    const double x = value.get<double>();
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    return RoundDouble(x, digits);
  }
  if (value.is_array() || value.is_object()) {
    Json out = value;
    for (auto& [key, v] : out.items()) v = RoundNumbers(v, digits);
    return out;
  }
  return value;
}

void Report::Add(const std::string& name, Json value, const std::string& provenance) {
  items_.push_back({name, std::move(value), provenance});
}

void Report::SetColumns(std::vector<std::pair<std::string, std::string>> columns) {
  columns_ = std::move(columns);
}

void Report::AddRow(std::vector<Json> row) {
  if (row.size() != columns_.size()) throw std::logic_error("row width mismatch");
  rows_.push_back(std::move(row));
}

Json Report::ToJson(int digits) const {
  Json out;
  out["request"] = RoundNumbers(request_, digits);
  Json results = Json::object();
  Json provenance = Json::object();
  for (const Item& it : items_) {
    results[it.name] = RoundNumbers(it.value, digits);
    provenance[it.name] = it.provenance;
  }
  if (tabular()) {
    Json rows = Json::array();
    for (const auto& row : rows_) {
      Json r = Json::object();
      for (size_t i = 0; i < columns_.size(); ++i) {
        r[columns_[i].first] = RoundNumbers(row[i], digits);
      }
      rows.push_back(std::move(r));
    }
    results["rows"] = std::move(rows);
    for (const auto& [name, prov] : columns_) provenance[name] = prov;
  }
  out["results"] = std::move(results);
  out["provenance"] = std::move(provenance);
  out["warnings"] = warnings_;
  return out;
}

std::string Report::RenderText() const {
  constexpr int kDigits = 6;
  std::ostringstream os;
  os << command_ << '\n';
  size_t width = 0;
  for (const Item& it : items_) width = std::max(width, it.name.size());
  for (const Item& it : items_) {
    const std::string v = Scalar(it.value, kDigits);
    os << "  " << it.name << std::string(width - it.name.size(), ' ') << "  " << v;
    if (!it.provenance.empty()) os << "  [" << it.provenance << ']';
    os << '\n';
  }
  if (tabular()) {
    std::vector<size_t> w(columns_.size());
    std::vector<std::vector<std::string>> cells;
    for (size_t i = 0; i < columns_.size(); ++i) w[i] = columns_[i].first.size();
    for (const auto& row : rows_) {
      cells.emplace_back();
      for (size_t i = 0; i < row.size(); ++i) {
        cells.back().push_back(Scalar(row[i], kDigits));
        w[i] = std::max(w[i], cells.back().back().size());
      }
    }
    auto line = [&](const std::vector<std::string>& v) {
      for (size_t i = 0; i < v.size(); ++i) {
        os << (i ? "  " : "  ") << v[i] << std::string(w[i] - v[i].size(), ' ');
      }
      os << '\n';
    };
    std::vector<std::string> header;
    for (const auto& c : columns_) header.push_back(c.first);
    line(header);
    for (const auto& c : cells) line(c);
    for (const auto& [name, prov] : columns_) {
      if (!prov.empty()) os << "  # " << name << ": " << prov << '\n';
    }
  }
  for (const std::string& w : warnings_) os << "warning: " << w << '\n';
  return os.str();
}

std::string Report::RenderCsv() const {
  constexpr int kDigits = 12;
  std::ostringstream os;
  if (tabular()) {
    for (size_t i = 0; i < columns_.size(); ++i) {
      const auto& [name, prov] = columns_[i];
      os << (i ? "," : "") << CsvField(prov.empty() ? name : name + "[" + prov + "]");
    }
    os << '\n';
    for (const auto& row : rows_) {
      for (size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << CsvField(Scalar(row[i], kDigits));
      }
      os << '\n';
    }
  } else {
    os << "quantity,value,provenance\n";
    for (const Item& it : items_) {
      os << CsvField(it.name) << ',' << CsvField(Scalar(it.value, kDigits)) << ','
         << CsvField(it.provenance) << '\n';
    }
  }
  for (const std::string& w : warnings_) os << "# warning: " << w << '\n';
  return os.str();
}

std::string Report::Render(Format format) const {
  switch (format) {
    case Format::kText:
      return RenderText();
    case Format::kJson:
      return ToJson().dump(2) + "\n";
    case Format::kCsv:
      return RenderCsv();
  }
  return {};
}

}  // namespace qsv::cli

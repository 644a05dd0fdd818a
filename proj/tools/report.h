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

#ifndef QSV_TOOLS_REPORT_H_
#define QSV_TOOLS_REPORT_H_

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qsv::cli {

using Json = nlohmann::ordered_json;

enum class Format { kText, kJson, kCsv };

Format ParseFormat(const std::string& name);

// Rounds every floating-point number in `value` to `digits` significant digits.
Json RoundNumbers(const Json& value, int digits);

// Output of one command. Scalar results are (name, value, provenance) triples;
// tabular commands set columns and rows instead.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& request() { return request_; }
  const std::string& command() const { return command_; }

  void Add(const std::string& name, Json value, const std::string& provenance);
  void Warn(const std::string& message) { warnings_.push_back(message); }

  void SetColumns(std::vector<std::pair<std::string, std::string>> columns);
  void AddRow(std::vector<Json> row);

  bool tabular() const { return !columns_.empty(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  Json ToJson(int digits = 12) const;
  std::string Render(Format format) const;

 private:
  struct Item {
    std::string name;
    Json value;
    std::string provenance;
  };

  std::string RenderText() const;
  std::string RenderCsv() const;

  std::string command_;
  Json request_ = Json::object();
  std::vector<Item> items_;
  std::vector<std::pair<std::string, std::string>> columns_;
  std::vector<std::vector<Json>> rows_;
  std::vector<std::string> warnings_;
};

}  // namespace qsv::cli

#endif  // QSV_TOOLS_REPORT_H_

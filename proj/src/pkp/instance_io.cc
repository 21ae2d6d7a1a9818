// Copyright 2026 The pkp Authors
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

#include "pkp/instance_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "pkp/status.h"

namespace pkp {

namespace {

Error ParseFailure(const std::string& what) {
  return Error(ErrorCode::kParseError, what);
}

std::int64_t JsonInt(const nlohmann::json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw ParseFailure("field '" + field + "' must be an integer");
  }
  if (value.is_number_unsigned() &&
      value.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ParseFailure("field '" + field + "' is out of 64-bit range");
  }
  return value.get<std::int64_t>();
}

void RequireKeys(const nlohmann::json& obj,
                 std::initializer_list<const char*> keys,
                 const std::string& where) {
  if (!obj.is_object()) throw ParseFailure(where + " must be an object");
  for (const char* key : keys) {
    if (!obj.contains(key)) {
      throw ParseFailure(where + " is missing '" + key + "'");
    }
  }
  if (obj.size() != keys.size()) {
    throw ParseFailure(where + " has unexpected fields");
  }
}

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits a line into whitespace-separated integer tokens.
std::vector<std::int64_t> ParseIntegerLine(std::string_view line,
                                           std::size_t line_no) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && IsBlank(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !IsBlank(line[end])) ++end;
    const std::string_view token = line.substr(pos, end - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseFailure("line " + std::to_string(line_no) +
                         ": not an integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  for (char c : text) {
    if (c == '{') return ParseInstanceJson(text);
    if (!IsBlank(c) && c != '\n') break;
  }
  return ParseInstanceText(text);
}

Instance ParseInstanceJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseFailure(std::string("invalid JSON: ") + e.what());
  }
  RequireKeys(doc, {"capacity", "items"}, "instance");
  const std::int64_t capacity = JsonInt(doc["capacity"], "capacity");
  const nlohmann::json& items_json = doc["items"];
  if (!items_json.is_array()) throw ParseFailure("'items' must be an array");
  std::vector<Item> items;
  items.reserve(items_json.size());
  for (std::size_t j = 0; j < items_json.size(); ++j) {
    const std::string where = "items[" + std::to_string(j) + "]";
    RequireKeys(items_json[j], {"profit", "weight"}, where);
    items.push_back({JsonInt(items_json[j]["profit"], where + ".profit"),
                     JsonInt(items_json[j]["weight"], where + ".weight")});
  }
  return Instance(std::move(items), capacity);
}

Instance ParseInstanceText(std::string_view text) {
  std::vector<std::vector<std::int64_t>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = ParseIntegerLine(text.substr(pos, end - pos), line_no);
    if (!tokens.empty()) {
      if (tokens.size() != 2) {
        throw ParseFailure("line " + std::to_string(line_no) +
                           ": expected exactly two integers");
      }
      lines.push_back(std::move(tokens));
    }
    pos = end + 1;
  }
  if (lines.empty()) throw ParseFailure("missing header line 'n C'");
  const std::int64_t n = lines[0][0];
  if (n < 0 || static_cast<std::size_t>(n) != lines.size() - 1) {
    throw ParseFailure("header announces " + std::to_string(n) +
                       " items but " + std::to_string(lines.size() - 1) +
                       " item lines follow");
  }
  std::vector<Item> items;
  items.reserve(lines.size() - 1);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    items.push_back({lines[k][0], lines[k][1]});
  }
  return Instance(std::move(items), lines[0][1]);
}

std::string InstanceToJson(const Instance& instance) {
  std::ostringstream out;
  out << "{\"capacity\": " << instance.capacity() << ", \"items\": [";
  for (std::size_t j = 0; j < instance.size(); ++j) {
    if (j > 0) out << ", ";
    out << "{\"profit\": " << instance.item(j).profit
        << ", \"weight\": " << instance.item(j).weight << "}";
  }
  out << "]}\n";
  return out.str();
}

std::string InstanceToText(const Instance& instance) {
  std::ostringstream out;
  out << instance.size() << ' ' << instance.capacity() << '\n';
  for (const Item& it : instance.items()) {
    out << it.profit << ' ' << it.weight << '\n';
  }
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pkp

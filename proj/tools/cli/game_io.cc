// Copyright 2026 The Stackdeceive Authors
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

#include "game_io.h"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "stackdeceive/error.h"

namespace stackdeceive::cli {
namespace {

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::kParse, path + ": " + message);
}

int ParseDimension(const Json& doc, const char* key) {
  if (!doc.contains(key)) Fail(key, "missing field");
  const Json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    Fail(key, "must be a positive integer");
  }
  return static_cast<int>(v.get<long long>());
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational ParseLiteral(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return Rational::Parse(value.dump());
  }
  if (value.is_number_float()) {
    Fail(path, "JSON number " + value.dump() +
                   " is not exact; write it as a string such as \"1/3\"");
  }
  if (!value.is_string()) Fail(path, "expected a payoff literal");
  const std::string& text = value.get_ref<const std::string&>();
  const auto parsed = Rational::TryParse(text);
  if (!parsed) Fail(path, "invalid rational literal \"" + text + "\"");
  return *parsed;
}

Matrix ParseMatrix(const Json& value, const std::string& field, int rows,
                   int cols) {
  if (!value.is_array()) Fail(field, "expected an array of rows");
  if (static_cast<int>(value.size()) != rows) {
    throw Error(ErrorCode::kDimensionMismatch,
                field + ": expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(value.size()));
  }
  Matrix out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = value[i];
    const std::string row_path = field + "[" + std::to_string(i + 1) + "]";
    if (!row.is_array()) Fail(row_path, "expected an array of payoffs");
    if (static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  row_path + ": expected " + std::to_string(cols) +
                      " entries, got " + std::to_string(row.size()));
    }
    for (int l = 0; l < cols; ++l) {
      out.at(i, l) = ParseLiteral(
          row[l], row_path + "[" + std::to_string(l + 1) + "]");
    }
  }
  return out;
}

Game ParseGame(const Json& doc) {
  if (!doc.is_object()) Fail("<root>", "expected a JSON object");
  const int m = ParseDimension(doc, "m");
  const int n = ParseDimension(doc, "n");
  if (!doc.contains("leader")) Fail("leader", "missing field");
  Matrix leader = ParseMatrix(doc.at("leader"), "leader", m, n);
  std::optional<Matrix> follower;
  if (doc.contains("follower") && !doc.at("follower").is_null()) {
    follower = ParseMatrix(doc.at("follower"), "follower", m, n);
  }
  return Game(std::move(leader), std::move(follower));
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t offset = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t p = 0; p < offset; ++p) {
      if (text[p] == '\n') {
        ++line;
        line_start = p + 1;
      }
    }
    throw Error(ErrorCode::kParse,
                path + ":" + std::to_string(line) + ":" +
                    std::to_string(offset - line_start + 1) +
                    ": malformed JSON");
  }
}

Game LoadGame(const std::string& path) {
  const Json doc = ReadJsonFile(path);
  try {
    return ParseGame(doc);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

Json ToJson(const Rational& value) { return value.ToString(); }

Json ToJson(const ExtendedRational& value) { return value.ToString(); }

Json ToJson(const Matrix& matrix) {
  Json rows = Json::array();
  for (const auto& row : matrix.ToStrings()) rows.push_back(row);
  return rows;
}

Json ToJson(const MixedStrategy& strategy) {
  Json out = Json::array();
  for (const Rational& p : strategy.probabilities()) out.push_back(p.ToString());
  return out;
}

Json ToJson(const StrategyProfile& profile) {
  Json out = Json::object();
  out["strategy"] = ToJson(profile.strategy);
  out["response"] = profile.response + 1;
  return out;
}

std::string CanonicalGameText(const Game& game) {
  Json doc = Json::object();
  doc["m"] = game.m();
  doc["n"] = game.n();
  doc["leader"] = ToJson(game.leader);
  if (game.follower) doc["follower"] = ToJson(*game.follower);
  return doc.dump();
}

std::string GameDigest(const Game& game) {
  const std::string text = CanonicalGameText(game);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorCode::kInternal, "SHA-256 digest failed");
  }
  std::string hex = "sha256:";
  char byte[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", digest[i]);
    hex += byte;
  }
  return hex;
}

StrategyProfile ParseProfile(std::string_view text, int m, int n) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != text.npos) {
    Fail("--profile", "expected \"x1,...,xm;j\"");
  }
  std::vector<Rational> x;
  std::string_view rest = text.substr(0, semi);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = Trim(rest.substr(0, comma));
    const auto value = Rational::TryParse(item);
    if (!value) {
      Fail("--profile", "invalid probability \"" + std::string(item) + "\"");
    }
    x.push_back(*value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  const std::string_view column = Trim(text.substr(semi + 1));
  const auto j = Rational::TryParse(column);
  if (!j || !j->is_integer()) {
    Fail("--profile", "invalid column \"" + std::string(column) + "\"");
  }
  if (static_cast<int>(x.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "--profile: expected " + std::to_string(m) +
                    " probabilities, got " + std::to_string(x.size()));
  }
  if (*j < Rational(1) || *j > Rational(n)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "--profile: column " + std::string(column) + " outside 1.." +
                    std::to_string(n));
  }
  StrategyProfile out{MixedStrategy(std::move(x)),
                      std::stoi(j->ToString()) - 1};
  CheckProfile(out, m, n);
  return out;
}

StrategyProfile ParseProfileJson(const Json& value, const std::string& path,
                                 int m, int n) {
  if (!value.is_object() || !value.contains("strategy") ||
      !value.contains("response")) {
    Fail(path, "expected {\"strategy\": [...], \"response\": j}");
  }
  const Json& strategy = value.at("strategy");
  if (!strategy.is_array()) Fail(path + ".strategy", "expected an array");
  std::vector<Rational> x;
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    x.push_back(ParseLiteral(strategy[i], path + ".strategy[" +
                                              std::to_string(i + 1) + "]"));
  }
  const Json& response = value.at("response");
  if (!response.is_number_integer()) {
    Fail(path + ".response", "expected an integer column");
  }
  if (static_cast<int>(x.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                path + ".strategy: expected " + std::to_string(m) +
                    " probabilities, got " + std::to_string(x.size()));
  }
  const long long j = response.get<long long>();
  if (j < 1 || j > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                path + ".response: column " + std::to_string(j) +
                    " outside 1.." + std::to_string(n));
  }
  return StrategyProfile{MixedStrategy(std::move(x)), static_cast<int>(j) - 1};
}

}  // namespace stackdeceive::cli

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

#ifndef STACKDECEIVE_TOOLS_CLI_GAME_IO_H_
#define STACKDECEIVE_TOOLS_CLI_GAME_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "stackdeceive/game.h"
#include "stackdeceive/rational.h"

namespace stackdeceive::cli {

using Json = nlohmann::ordered_json;

// Payoff literal: JSON integer, or a string holding an integer, an exact
// decimal or "p/q". Errors name the field path, e.g. leader[2][1].
Rational ParseLiteral(const Json& value, const std::string& path);

Matrix ParseMatrix(const Json& value, const std::string& field, int rows,
                   int cols);

// Document {"m", "n", "leader", "follower"?}.
Game ParseGame(const Json& doc);

// Reads and parses a JSON file. Syntax errors report line and column.
Json ReadJsonFile(const std::string& path);

Game LoadGame(const std::string& path);

Json ToJson(const Rational& value);
Json ToJson(const ExtendedRational& value);
Json ToJson(const Matrix& matrix);
Json ToJson(const MixedStrategy& strategy);
// Response is written 1-based.
Json ToJson(const StrategyProfile& profile);

// Canonical JSON text of the game, as hashed by GameDigest.
std::string CanonicalGameText(const Game& game);
// "sha256:" followed by the hex digest of CanonicalGameText.
std::string GameDigest(const Game& game);

// "x1,...,xm;j" with j 1-based.
StrategyProfile ParseProfile(std::string_view text, int m, int n);
// Profile object as written by ToJson.
StrategyProfile ParseProfileJson(const Json& value, const std::string& path,
                                 int m, int n);

}  // namespace stackdeceive::cli

#endif  // STACKDECEIVE_TOOLS_CLI_GAME_IO_H_

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

#include "commands.h"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "game_io.h"
#include "stackdeceive/deception.h"
#include "stackdeceive/inducibility.h"
#include "stackdeceive/sse.h"
#include "stackdeceive/strong_deception.h"
#include "stackdeceive/verify.h"

namespace stackdeceive::cli {
namespace {

struct Options {
  std::string game_path;
  std::string fake_path;
  std::string out_path;
  std::string epsilon = "1/1000";
  std::string profile;
  bool unique = false;
};

Json OneBased(const std::vector<int>& indices) {
  Json out = Json::array();
  for (int i : indices) out.push_back(i + 1);
  return out;
}

Json ColumnValues(const std::vector<ColumnValue>& columns) {
  Json out = Json::array();
  for (const ColumnValue& c : columns) out.push_back(ToJson(c.value));
  return out;
}

Json Envelope(const std::string& name, const Options& opts, const Game& game,
              Json args) {
  Json doc = Json::object();
  Json command = Json::object();
  command["name"] = name;
  command["game"] = opts.game_path;
  for (auto& [key, value] : args.items()) command[key] = value;
  doc["command"] = std::move(command);
  Json input = Json::object();
  input["path"] = opts.game_path;
  input["digest"] = GameDigest(game);
  doc["input"] = std::move(input);
  return doc;
}

void Emit(const Json& doc, const Options& opts, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file || !(file << text)) {
    throw Error(ErrorCode::kParse, opts.out_path + ": cannot write file");
  }
}

std::optional<StrategyProfile> ProfileOption(const Options& opts,
                                             const Game& game) {
  if (opts.profile.empty()) return std::nullopt;
  return ParseProfile(opts.profile, game.m(), game.n());
}

int Maximin(const Options& opts, std::ostream& out, std::ostream& err) {
  const Game game = LoadGame(opts.game_path);
  const MaximinResult r = stackdeceive::Maximin(game.leader);
  Json restricted = Json::array();
  for (int j = 0; j < game.n(); ++j) {
    restricted.push_back(ToJson(RestrictedMaximin(game.leader, j)));
  }
  Rational worst = Utility(game.leader, r.witness, 0);
  for (int l = 1; l < game.n(); ++l) {
    worst = std::min(worst, Utility(game.leader, r.witness, l));
  }
  Json doc = Envelope("maximin", opts, game, Json::object());
  doc["result"] = {{"maximin", ToJson(r.value)},
                   {"witness", ToJson(r.witness)},
                   {"restricted_maximin", restricted}};
  doc["verification"] = {{"witness_attains_value", worst == r.value}};
  Emit(doc, opts, out);
  err << "maximin " << r.value << " at " << r.witness.ToString() << "\n";
  if (worst != r.value) {
    err << "internal error: witness guarantees only " << worst << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

int Sse(const Options& opts, std::ostream& out, std::ostream& err) {
  const Game game = LoadGame(opts.game_path);
  const Matrix& follower = game.follower_payoffs();
  const SseResult r = ComputeSse(game.leader, follower);
  const VerificationReport check =
      VerifyInduces(game.leader, follower, r.profile, false);
  Json doc = Envelope("sse", opts, game, Json::object());
  doc["result"] = {{"profile", ToJson(r.profile)},
                   {"leader_value", ToJson(r.leader_value)},
                   {"follower_value", ToJson(r.follower_value)},
                   {"per_column", ColumnValues(r.per_column)}};
  Json verification = {{"is_sse", check.is_sse}};
  bool agrees = true;
  if (game.m() == 2) {
    agrees = BruteForceSseTwoRows(game.leader, follower).leader_value ==
             r.leader_value;
    verification["brute_force_agrees"] = agrees;
  }
  doc["verification"] = std::move(verification);
  Emit(doc, opts, out);
  err << "SSE " << r.profile.strategy.ToString() << " column "
      << r.profile.response + 1 << ": leader " << r.leader_value
      << ", follower " << r.follower_value << "\n";
  return check.is_sse && agrees ? kExitOk : kExitInternal;
}

Json CertificateJson(const InducibilityCertificate& c) {
  Json threat = {{"value", ToJson(c.threat.value)},
                 {"region_empty", c.threat.region_empty}};
  if (c.threat.witness) {
    threat["witness"] = ToJson(*c.threat.witness);
    threat["tight_columns"] = OneBased(c.threat.tight_columns);
  }
  return {{"target", ToJson(c.target)},
          {"target_value", ToJson(c.target_value)},
          {"maximin", ToJson(c.maximin)},
          {"maximin_witness", ToJson(c.maximin_witness)},
          {"restricted_maximin", ToJson(c.restricted_maximin)},
          {"threat", threat},
          {"inducible", c.inducible}};
}

int Inducible(const Options& opts, std::ostream& out, std::ostream& err) {
  const Game game = LoadGame(opts.game_path);
  const std::optional<StrategyProfile> target = ProfileOption(opts, game);
  Json args = Json::object();
  if (target) {
    args["profile"] = opts.profile;
    const InducibilityCertificate c = CertifyInducibility(game.leader, *target);
    const bool agrees = CheckMaximinThreatAgreement(game.leader, *target);
    Json doc = Envelope("inducible", opts, game, args);
    doc["result"] = CertificateJson(c);
    doc["verification"] = {{"maximin_threat_agreement", agrees}};
    Emit(doc, opts, out);
    err << "profile " << target->strategy.ToString() << " column "
        << target->response + 1 << (c.inducible ? " is" : " is not")
        << " inducible (leader " << c.target_value << ", maximin "
        << c.maximin << ")\n";
    return agrees ? kExitOk : kExitInternal;
  }
  const OptimalInducibleProfile o = ComputeOptimalInducibleProfile(game);
  Json doc = Envelope("inducible", opts, game, args);
  doc["result"] = {{"profile", ToJson(o.profile)},
                   {"follower_value", ToJson(o.follower_value)},
                   {"maximin", ToJson(o.maximin)},
                   {"per_column", ColumnValues(o.per_column)}};
  const bool inducible = IsPayoffInducible(game.leader, o.profile);
  doc["verification"] = {{"inducible", inducible}};
  Emit(doc, opts, out);
  err << "optimal inducible profile " << o.profile.strategy.ToString()
      << " column " << o.profile.response + 1 << ": follower "
      << o.follower_value << "\n";
  return inducible ? kExitOk : kExitInternal;
}

int Deceive(const Options& opts, std::ostream& out, std::ostream& err) {
  const Game game = LoadGame(opts.game_path);
  const std::optional<StrategyProfile> target = ProfileOption(opts, game);
  Json args = Json::object();
  DeceptionConstruction c = [&] {
    if (target) {
      args["profile"] = opts.profile;
      return ConstructInducingPayoffs(game.leader, *target);
    }
    return DeceiveOptimal(game).construction;
  }();
  const VerificationReport check =
      VerifyInduces(game.leader, c.fake_payoffs, c.target, false);

  Json result = {{"profile", ToJson(c.target)}};
  if (game.follower) {
    result["follower_value"] = ToJson(
        Utility(*game.follower, c.target.strategy, c.target.response));
  }
  result["leader_value"] = ToJson(c.certificate.target_value);
  result["branch"] = ConstructionBranchName(c.branch);
  result["maximin"] = ToJson(c.certificate.maximin);
  result["restricted_maximin"] = ToJson(c.certificate.restricted_maximin);
  result["threat_value"] = ToJson(c.certificate.threat.value);
  if (c.branch != ConstructionBranch::kDominantColumn) {
    result["active_columns"] = OneBased(c.active_columns);
  }
  if (c.anchor_column) result["anchor_column"] = *c.anchor_column + 1;
  if (c.alpha) result["alpha"] = ToJson(*c.alpha);
  if (c.branch == ConstructionBranch::kHardCase) {
    Json lambda = Json::object();
    for (const auto& [l, v] : c.farkas.lambda) {
      lambda[std::to_string(l + 1)] = ToJson(v);
    }
    Json mu = Json::object();
    for (const auto& [i, v] : c.farkas.mu) {
      mu[std::to_string(i + 1)] = ToJson(v);
    }
    result["threat_witness"] = ToJson(*c.certificate.threat.witness);
    result["farkas"] = {{"lambda", lambda}, {"mu", mu}};
  }
  result["fake_payoffs"] = ToJson(c.fake_payoffs);
  result["fake_payoff_bits"] = c.FakePayoffBits();

  Json doc = Envelope("deceive", opts, game, args);
  doc["result"] = std::move(result);
  doc["verification"] = {{"is_sse", check.is_sse}};
  Emit(doc, opts, out);
  err << "branch " << ConstructionBranchName(c.branch) << ", profile "
      << c.target.strategy.ToString() << " column " << c.target.response + 1;
  if (game.follower) {
    err << ", follower "
        << Utility(*game.follower, c.target.strategy, c.target.response);
  }
  err << "\n";
  if (!check.is_sse) {
    for (const std::string& v : check.violated_checks) {
      err << "internal error: " << v << "\n";
    }
    return kExitInternal;
  }
  return kExitOk;
}

int DeceiveStrong(const Options& opts, std::ostream& out, std::ostream& err) {
  const Game game = LoadGame(opts.game_path);
  const auto epsilon = Rational::TryParse(opts.epsilon);
  if (!epsilon) {
    throw Error(ErrorCode::kParse,
                "--epsilon: invalid rational literal \"" + opts.epsilon + "\"");
  }
  const StrongConstruction c = StrongDeceive(game, *epsilon);
  const VerificationReport check =
      VerifyInduces(game.leader, c.fake_payoffs, c.profile, true);

  Json result = {{"base_profile", ToJson(c.base_profile)},
                 {"base_follower_value", ToJson(c.base_follower_value)},
                 {"epsilon", ToJson(c.epsilon)},
                 {"delta", ToJson(c.delta)},
                 {"profile", ToJson(c.profile)},
                 {"follower_value", ToJson(c.follower_value)},
                 {"leader_value", ToJson(Utility(game.leader, c.profile.strategy,
                                                 c.profile.response))}};
  if (!c.delta.is_zero()) {
    result["tight_facets"] = OneBased(c.tight_facets);
    result["anchor_column"] = *c.anchor_column + 1;
    result["alpha"] = ToJson(*c.alpha);
  }
  result["fake_payoffs"] = ToJson(c.fake_payoffs);

  Json doc = Envelope("deceive-strong", opts, game,
                      {{"epsilon", c.epsilon.ToString()}});
  doc["result"] = std::move(result);
  doc["verification"] = {{"is_sse", check.is_sse},
                         {"is_unique", check.is_unique.value_or(false)}};
  Emit(doc, opts, out);
  err << "delta " << c.delta << ", profile " << c.profile.strategy.ToString()
      << " column " << c.profile.response + 1 << ", follower "
      << c.follower_value << " (optimum " << c.base_follower_value << ")\n";
  if (!check.passed()) {
    for (const std::string& v : check.violated_checks) {
      err << "internal error: " << v << "\n";
    }
    return kExitInternal;
  }
  return kExitOk;
}

// The fake matrix may come from a certificate (result.fake_payoffs), a
// bare {"fake_payoffs": ...} file or a game file (its follower matrix).
struct FakeInput {
  Matrix payoffs;
  std::optional<StrategyProfile> profile;
};

FakeInput LoadFake(const std::string& path, int m, int n) {
  const Json doc = ReadJsonFile(path);
  try {
    if (!doc.is_object()) {
      throw Error(ErrorCode::kParse, "<root>: expected a JSON object");
    }
    if (doc.contains("result") && doc.at("result").is_object() &&
        doc.at("result").contains("fake_payoffs")) {
      const Json& result = doc.at("result");
      FakeInput in{ParseMatrix(result.at("fake_payoffs"),
                               "result.fake_payoffs", m, n),
                   std::nullopt};
      if (result.contains("profile")) {
        in.profile =
            ParseProfileJson(result.at("profile"), "result.profile", m, n);
      }
      return in;
    }
    if (doc.contains("fake_payoffs")) {
      return {ParseMatrix(doc.at("fake_payoffs"), "fake_payoffs", m, n),
              std::nullopt};
    }
    if (doc.contains("follower")) {
      return {ParseMatrix(doc.at("follower"), "follower", m, n), std::nullopt};
    }
    throw Error(ErrorCode::kParse,
                "<root>: no fake_payoffs, result.fake_payoffs or follower");
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

int VerifyCommand(const Options& opts, std::ostream& out, std::ostream& err) {
  const Game game = LoadGame(opts.game_path);
  const FakeInput fake = LoadFake(opts.fake_path, game.m(), game.n());
  std::optional<StrategyProfile> target = ProfileOption(opts, game);
  if (!target) target = fake.profile;
  if (!target) {
    throw Error(ErrorCode::kParse,
                "--profile is required unless the fake file is a certificate");
  }
  const VerificationReport r =
      VerifyInduces(game.leader, fake.payoffs, *target, opts.unique);

  Json args = {{"fake", opts.fake_path}};
  if (!opts.profile.empty()) args["profile"] = opts.profile;
  args["unique"] = opts.unique;
  Json doc = Envelope("verify", opts, game, args);
  doc["result"] = {{"target", ToJson(*target)},
                   {"sse_value", ToJson(r.sse_value)},
                   {"target_value", ToJson(Utility(game.leader, target->strategy,
                                                   target->response))},
                   {"per_column", ColumnValues(r.per_column)}};
  Json verification = {{"is_sse", r.is_sse}};
  if (r.is_unique) verification["is_unique"] = *r.is_unique;
  verification["violated_checks"] = r.violated_checks;
  verification["passed"] = r.passed();
  doc["verification"] = std::move(verification);
  Emit(doc, opts, out);
  err << (r.passed() ? "PASS" : "FAIL") << ": profile "
      << target->strategy.ToString() << " column " << target->response + 1
      << (r.is_sse ? " is" : " is not") << " an SSE";
  if (r.is_unique) err << (*r.is_unique ? ", unique" : ", not unique");
  err << "\n";
  for (const std::string& v : r.violated_checks) err << "  " << v << "\n";
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMaxDegenerate: return kExitMaxDegenerate;
    case ErrorCode::kInternal:
    case ErrorCode::kInfeasibleDecomposition: return kExitInternal;
    default: return kExitInvalidInput;
  }
}

int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Follower deception in Stackelberg games", "stackdeceive"};
  app.require_subcommand(1);
  Options opts;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("game", opts.game_path, "Game file (JSON)")->required();
    sub->add_option("--out", opts.out_path, "Write the certificate here");
  };
  CLI::App* maximin = app.add_subcommand("maximin", "Leader maximin value");
  add_common(maximin);
  CLI::App* sse = app.add_subcommand("sse", "Strong Stackelberg equilibrium");
  add_common(sse);
  CLI::App* inducible = app.add_subcommand(
      "inducible", "Inducibility of a profile, or the optimal inducible one");
  add_common(inducible);
  inducible->add_option("--profile", opts.profile, "\"x1,...,xm;j\"");
  CLI::App* deceive = app.add_subcommand(
      "deceive", "Payoff matrix inducing the optimal (or a given) profile");
  add_common(deceive);
  deceive->add_option("--profile", opts.profile, "\"x1,...,xm;j\"");
  CLI::App* strong = app.add_subcommand(
      "deceive-strong", "Payoff matrix with a unique SSE, within epsilon");
  add_common(strong);
  strong->add_option("--epsilon", opts.epsilon, "Rational loss bound")
      ->capture_default_str();
  CLI::App* verify = app.add_subcommand(
      "verify", "Check that a reported matrix induces a profile");
  add_common(verify);
  verify->add_option("fake", opts.fake_path, "Fake payoffs or certificate")
      ->required();
  verify->add_option("--profile", opts.profile, "\"x1,...,xm;j\"");
  verify->add_flag("--unique", opts.unique, "Also require uniqueness");

  std::vector<const char*> argv = {"stackdeceive"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (maximin->parsed()) return Maximin(opts, out, err);
    if (sse->parsed()) return Sse(opts, out, err);
    if (inducible->parsed()) return Inducible(opts, out, err);
    if (deceive->parsed()) return Deceive(opts, out, err);
    if (strong->parsed()) return DeceiveStrong(opts, out, err);
    return VerifyCommand(opts, out, err);
  } catch (const MaxDegenerateError& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return kExitMaxDegenerate;
  } catch (const Error& e) {
    err << "error [" << ErrorCodeName(e.code()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace stackdeceive::cli

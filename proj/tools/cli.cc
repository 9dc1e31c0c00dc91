// Copyright 2026 The tyannot Authors
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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_io.h"
#include "tyannot/annotate.h"
#include "tyannot/indsys.h"
#include "tyannot/oracle.h"
#include "tyannot/surface.h"
#include "tyannot/typing.h"

namespace tyannot {
namespace {

using nlohmann::json;

struct CliConfig {
  std::string subcommand;
  std::string signature_path;
  std::string term_path;
  std::string original_path;
  std::string printed_path;
  std::string strategy = "lexFirst";
  bool via_is = false;
  bool json = false;
  std::string free_vars = "strict";
  int universe_depth = 3;
};

struct InputError {
  std::string message;
};

struct UsageError {
  std::string message;
};

struct PropertyFailure {
  std::string message;
};

class Session {
 public:
  Session(const CliConfig& cfg, std::istream& in, std::ostream& out)
      : cfg_(cfg), in_(in), out_(out) {
    if (cfg.free_vars == "lift") options_.free_vars = FreeVarMode::kLift;
  }

  int Run() {
    if (cfg_.subcommand == "infer") return Infer();
    if (cfg_.subcommand == "annotate") return Annotate();
    if (cfg_.subcommand == "check") return Check();
    if (cfg_.subcommand == "oracle") return Oracle();
    return Roundtrip();
  }

 private:
  std::string Read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw UsageError{"standard input used twice"};
      stdin_used_ = true;
      return std::string(std::istreambuf_iterator<char>(in_), {});
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError{path + ": cannot open file"};
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
  }

  void LoadSignature() {
    auto sig = ParseSignature(Read(cfg_.signature_path));
    if (!sig) {
      throw InputError{cfg_.signature_path + ": " + sig.error().ToString()};
    }
    sig_ = *sig;
  }

  Term LoadTerm(const std::string& path) {
    auto term = ParseTerm(Read(path), sig_);
    if (!term) throw InputError{path + ": " + term.error().ToString()};
    return *term;
  }

  const PickStrategy& Strategy() const {
    const PickStrategy* pick = FindStrategy(cfg_.strategy);
    if (pick == nullptr) {
      std::string names;
      for (const PickStrategy& s : BuiltinStrategies()) {
        names += (names.empty() ? "" : ", ") + s.name;
      }
      throw UsageError{"unknown strategy '" + cfg_.strategy +
                       "'; available: " + names};
    }
    return *pick;
  }

  template <typename T>
  static T OrTypeError(Result<T, TypeError> result) {
    if (!result) throw InputError{"type error: " + result.error().ToString()};
    return *result;
  }

  Term Reference(const Term& t) {
    TypingOptions opts = options_.free_vars == FreeVarMode::kLift
                             ? WithFreeVarsOf(t, options_)
                             : options_;
    return OrTypeError(UniqueCompletionOfCTerm(t, sig_, opts));
  }

  int Infer() {
    LoadSignature();
    Term t = LoadTerm(cfg_.term_path);
    InferenceResult result = OrTypeError(Mgen(t, sig_, options_));
    if (cfg_.json) {
      out_ << TermToJson(result.completion).dump() << "\n";
    } else {
      out_ << PrintTerm(result.completion) << "\n";
    }
    return kExitOk;
  }

  int Annotate() {
    const PickStrategy& pick = Strategy();
    LoadSignature();
    Term t = LoadTerm(cfg_.term_path);
    AnnotationReport report = OrTypeError(Smobla(pick, t, sig_, options_));
    if (cfg_.via_is &&
        !GreedyMatchesDecrease(pick, report.v, Reference(t))) {
      throw PropertyFailure{
          "independence-system greedy disagrees with decrease"};
    }
    std::string printed = PrintTerm(report.output);
    if (cfg_.json) {
      json j = {{"kind", "annotation"},
                {"strategy", pick.name},
                {"printed", printed},
                {"output", TermToJson(report.output)},
                {"removedPositions", PositionsToJson(report.removed)},
                {"keptAnnotatedPositions", PositionsToJson(report.kept)}};
      out_ << j.dump() << "\n";
    } else {
      out_ << printed << "\n";
    }
    return kExitOk;
  }

  int Check() {
    LoadSignature();
    Term original = LoadTerm(cfg_.original_path);
    Term printed = LoadTerm(cfg_.printed_path);
    PrintingDiagnosis diagnosis =
        OrTypeError(DiagnosePrinting(original, printed, sig_, options_));
    bool ok = diagnosis.verdict == PrintingVerdict::kCorrect;
    if (cfg_.json) {
      json j = {{"kind", "check"},
                {"correct", ok},
                {"diagnosis", diagnosis.message}};
      out_ << j.dump() << "\n";
    } else {
      out_ << (ok ? "" : "incorrect printing: ") << diagnosis.message << "\n";
    }
    return ok ? kExitOk : kExitPropertyFailure;
  }

  int Oracle() {
    LoadSignature();
    Term t = LoadTerm(cfg_.term_path);
    Term reference = Reference(t);
    std::size_t annotated = AnnotatedPositions(reference).size();
    if (annotated > kMaxOraclePositions) {
      throw UsageError{"instance has " + std::to_string(annotated) +
                       " annotated positions; the oracle handles at most " +
                       std::to_string(kMaxOraclePositions)};
    }
    TypeUniverse univ = SufficientUniverse(reference, sig_);
    univ.depth_bound = std::max<std::size_t>(univ.depth_bound,
                                             cfg_.universe_depth);
    auto minimal = MinimalCorrectPrintings(t, univ, sig_, options_);
    if (!minimal) {
      if (minimal.error().kind == OracleErrorKind::kInstanceTooLarge) {
        throw UsageError{minimal.error().detail};
      }
      throw PropertyFailure{minimal.error().detail};
    }
    bool all_pass = true;
    json strategies = json::array();
    std::string lines;
    for (const PickStrategy& pick : BuiltinStrategies()) {
      Term output = OrTypeError(Smobla(pick, t, sig_, options_)).output;
      bool member = std::find(minimal->begin(), minimal->end(), output) !=
                    minimal->end();
      all_pass = all_pass && member;
      strategies.push_back({{"kind", "strategy"},
                            {"name", pick.name},
                            {"printed", PrintTerm(output)},
                            {"minimal", member}});
      lines += "strategy " + pick.name + ": " +
               (member ? "minimal" : "NOT minimal") + ": " + PrintTerm(output) +
               "\n";
    }
    if (cfg_.json) {
      json printings = json::array();
      for (const Term& s : *minimal) printings.push_back(PrintTerm(s));
      json j = {{"kind", "oracle"},
                {"universeDepth", univ.depth_bound},
                {"minimalCorrectPrintings", printings},
                {"strategies", strategies}};
      out_ << j.dump() << "\n";
    } else {
      for (const Term& s : *minimal) out_ << PrintTerm(s) << "\n";
      out_ << lines;
    }
    return all_pass ? kExitOk : kExitPropertyFailure;
  }

  int Roundtrip() {
    const PickStrategy& pick = Strategy();
    LoadSignature();
    Term t = LoadTerm(cfg_.term_path);
    Term reference = Reference(t);
    AnnotationReport report = OrTypeError(Smobla(pick, t, sig_, options_));
    std::string printed = PrintTerm(report.output);
    auto reparsed = ParseTerm(printed, sig_);
    std::string verdict;
    if (!reparsed) {
      verdict = "printed term does not parse: " + reparsed.error().ToString();
    } else if (!(*reparsed == report.output)) {
      verdict = "reparsed term differs from the printed one";
    } else {
      TypingOptions opts = options_.free_vars == FreeVarMode::kLift
                               ? WithFreeVarsOf(t, options_)
                               : options_;
      auto inferred = Mgen(*reparsed, sig_, opts);
      if (!inferred) {
        verdict = "reparsed term does not typecheck: " +
                  inferred.error().ToString();
      } else if (!EqualUpToRenaming(inferred->completion, reference)) {
        verdict = "inference yields " + PrintTerm(inferred->completion);
      }
    }
    bool ok = verdict.empty();
    if (cfg_.json) {
      json j = {{"kind", "roundtrip"},
                {"strategy", pick.name},
                {"printed", printed},
                {"ok", ok}};
      if (!ok) j["reason"] = verdict;
      out_ << j.dump() << "\n";
    } else {
      out_ << printed << "\n"
           << "round trip: " << (ok ? "ok" : "FAILED: " + verdict) << "\n";
    }
    return ok ? kExitOk : kExitPropertyFailure;
  }

  const CliConfig& cfg_;
  std::istream& in_;
  std::ostream& out_;
  TypingOptions options_;
  Signature sig_;
  bool stdin_used_ = false;
};

void AddCommon(CLI::App* sub, CliConfig& cfg, bool needs_term) {
  sub->add_option("--signature", cfg.signature_path, "Signature file")
      ->required();
  if (needs_term) {
    sub->add_option("--term", cfg.term_path, "Term file, or - for stdin")
        ->required();
  }
  sub->add_flag("--json", cfg.json, "Emit JSON");
  sub->add_option("--free-vars", cfg.free_vars,
                  "Treatment of free variables")
      ->check(CLI::IsMember({"strict", "lift"}));
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Type annotation inference and minimal printing"};
  app.name("tyannot");
  app.require_subcommand(1, 1);

  CLI::App* infer = app.add_subcommand("infer", "Most general completion");
  AddCommon(infer, cfg, true);

  CLI::App* annotate =
      app.add_subcommand("annotate", "Minimal correct printing");
  AddCommon(annotate, cfg, true);
  annotate->add_option("--strategy", cfg.strategy, "Position picker");
  annotate->add_flag("--via-is", cfg.via_is,
                     "Cross-check with the independence system");

  CLI::App* check = app.add_subcommand("check", "Decide a printing");
  AddCommon(check, cfg, false);
  check->add_option("--original", cfg.original_path, "Original C-term")
      ->required();
  check->add_option("--printed", cfg.printed_path, "Printed term")
      ->required();

  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force minimal printings");
  AddCommon(oracle, cfg, true);
  oracle->add_option("--universe-depth", cfg.universe_depth,
                     "Type depth bound for enumeration")
      ->check(CLI::PositiveNumber);

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "Annotate, print, reparse, infer");
  AddCommon(roundtrip, cfg, true);
  roundtrip->add_option("--strategy", cfg.strategy, "Position picker");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  }
  for (CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    return Session(cfg, in, out).Run();
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n";
    return kExitInputError;
  } catch (const PropertyFailure& e) {
    err << "error: " << e.message << "\n";
    return kExitPropertyFailure;
  }
}

}  // namespace tyannot

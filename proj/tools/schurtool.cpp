// Copyright 2026 The schurkit Authors
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

// schurtool: verify, construct, classify, resynthesize, enumerate and
// check-lemmas on the command line.
//
// Exit codes: 0 success, 1 negative result (invalid ring, failed lemma),
// 2 malformed input or usage, 3 window too small, 4 other library error.
//
// Settings come from flags, then SCHUR_* environment variables, then the
// config file (--config or SCHUR_CONFIG), then built-in defaults.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "schur/all.hpp"

namespace {

using schur::Json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kMalformed = 2;
constexpr int kWindowTooSmall = 3;
constexpr int kLibraryError = 4;

struct Settings {
  std::int64_t window = 12;
  std::int64_t min_window = 12;
  std::int64_t orbit_bound = 64;
  std::int64_t enum_bound = 16;
  std::int64_t threads = 1;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("setting '" + key + "' needs an integer, got '" + text + "'");
  }
}

std::int64_t* setting_slot(Settings& s, const std::string& key) {
  static const std::map<std::string, std::int64_t Settings::*> slots{
      {"window", &Settings::window},       {"min_window", &Settings::min_window},
      {"orbit_bound", &Settings::orbit_bound}, {"enum_bound", &Settings::enum_bound},
      {"threads", &Settings::threads}};
  auto it = slots.find(key);
  return it == slots.end() ? nullptr : &(s.*(it->second));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key = value lines; '#' starts a comment, [sections] are ignored.
void load_config(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    auto* slot = setting_slot(s, key);
    if (!slot) throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    *slot = parse_int(key, value);
  }
}

void load_env(Settings& s) {
  const std::pair<const char*, const char*> vars[] = {{"SCHUR_WINDOW", "window"},
                                                      {"SCHUR_MIN_WINDOW", "min_window"},
                                                      {"SCHUR_ORBIT_BOUND", "orbit_bound"},
                                                      {"SCHUR_ENUM_BOUND", "enum_bound"},
                                                      {"SCHUR_THREADS", "threads"}};
  for (const auto& [var, key] : vars)
    if (const char* v = std::getenv(var)) *setting_slot(s, key) = parse_int(var, v);
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text, nullptr, true, true);
  } catch (const Json::exception& e) {
    throw schur::Error(schur::ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

int exit_code_for(const schur::Error& e) {
  switch (e.code()) {
    case schur::ErrorCode::ParseError:
    case schur::ErrorCode::InvalidPresentation:
    case schur::ErrorCode::MalformedPartition:
    case schur::ErrorCode::InvalidGroup:
    case schur::ErrorCode::InvalidElement:
    case schur::ErrorCode::InvalidAutomorphism:
      return kMalformed;
    case schur::ErrorCode::WindowTooSmall:
      return kWindowTooSmall;
    default:
      return kLibraryError;
  }
}

// Keeps the classes of P that meet |z| <= N.
schur::SchurPresentation truncate(const schur::SchurPresentation& P, std::int64_t N) {
  if (P.group.is_finite()) return P;
  if (N < 1 || N > P.window) throw UsageError("--window must lie in 1.." + std::to_string(P.window));
  schur::SchurPresentation out = P;
  out.window = N;
  out.classes.clear();
  for (const auto& c : P.classes) {
    const bool meets = std::any_of(c.begin(), c.end(), [&](const auto& g) { return std::abs(g.z) <= N; });
    if (meets) out.classes.push_back(c);
  }
  return out;
}

void print_report(const schur::VerificationReport& r) {
  std::cout << "verdict:       " << schur::to_string(r.verdict) << "\n";
  std::cout << "window:        " << r.window << "\n";
  std::cout << "checked pairs: " << r.checked_pairs << "\n";
  if (r.witness) {
    std::cout << "witness:       " << r.witness->kind << "\n";
    std::cout << "  C = " << schur::format_set(r.witness->first) << "\n";
    if (!r.witness->second.empty()) std::cout << "  D = " << schur::format_set(r.witness->second) << "\n";
    std::cout << "  " << r.witness->detail << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over Z x Z_3 and small finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  bool json_out = false;
  std::optional<std::int64_t> flag_threads, flag_min_window;
  app.add_option("--config", config_path, "key = value settings file (also SCHUR_CONFIG)");
  app.add_flag("--json", json_out, "machine-readable JSON on stdout");
  app.add_option("--threads", flag_threads, "worker threads (also SCHUR_THREADS)");
  app.add_option("--min-window", flag_min_window, "smallest window classify accepts (also SCHUR_MIN_WINDOW)");

  // verify
  auto* verify = app.add_subcommand("verify", "check the Schur ring axioms of a presentation");
  std::string verify_input;
  std::optional<std::int64_t> verify_window;
  std::string verify_method = "axioms";
  verify->add_option("input", verify_input, "presentation JSON file, or - for stdin")->required();
  verify->add_option("--window", verify_window, "verify only the classes meeting |z| <= N");
  verify->add_option("--method", verify_method, "axioms, wielandt or both")
      ->check(CLI::IsMember({"axioms", "wielandt", "both"}));

  // construct
  auto* construct = app.add_subcommand("construct", "build a presentation from a construction spec");
  std::string construct_kind, construct_params = "{}";
  std::optional<std::int64_t> construct_window;
  construct->add_option("--kind", construct_kind, "orbit, tensor, wedge, discrete or trivial")
      ->required()
      ->check(CLI::IsMember({"orbit", "tensor", "wedge", "discrete", "trivial"}));
  construct->add_option("--params", construct_params, "construction parameters as JSON");
  construct->add_option("--window", construct_window, "window N (also SCHUR_WINDOW; default 12)");

  // classify
  auto* classify = app.add_subcommand("classify", "identify the family of a presentation over Z x Z_3");
  std::string classify_input;
  bool classify_describe = false;
  classify->add_option("input", classify_input, "presentation JSON file, or - for stdin")->required();
  classify->add_flag("--describe", classify_describe, "print a one-line description instead of JSON");

  // resynthesize
  auto* resynth = app.add_subcommand("resynthesize", "rebuild a presentation from a family descriptor");
  std::string resynth_input;
  std::optional<std::int64_t> resynth_window;
  resynth->add_option("input", resynth_input, "descriptor JSON file, or - for stdin")->required();
  resynth->add_option("--window", resynth_window, "window N (default: the descriptor's)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list every Schur ring over a small group or window");
  std::string enum_group, enum_projection;
  std::optional<std::int64_t> enum_windowed, enum_bound_flag;
  bool enum_no_prune = false;
  auto* group_opt = enumerate->add_option("--group", enum_group, "finite group, e.g. Z6 or Z4xZ3");
  auto* windowed_opt = enumerate->add_option("--windowed", enum_windowed, "window N of Z x Z_3 (1..6)");
  group_opt->excludes(windowed_opt);
  enumerate->add_option("--projection", enum_projection, "only rings with this image over Z")
      ->check(CLI::IsMember({"discrete", "symmetric"}))
      ->needs(windowed_opt);
  enumerate->add_option("--bound", enum_bound_flag, "largest group order accepted (also SCHUR_ENUM_BOUND)");
  enumerate->add_flag("--no-prune", enum_no_prune, "check every rule only on complete partitions");

  // check-lemmas
  auto* lemmas = app.add_subcommand("check-lemmas", "run the structural checks on a presentation");
  std::string lemmas_input;
  lemmas->add_option("input", lemmas_input, "presentation JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    Settings settings;
    if (config_path.empty())
      if (const char* p = std::getenv("SCHUR_CONFIG")) config_path = p;
    if (!config_path.empty()) load_config(settings, config_path);
    load_env(settings);
    if (flag_threads) settings.threads = *flag_threads;
    if (flag_min_window) settings.min_window = *flag_min_window;
    if (enum_bound_flag) settings.enum_bound = *enum_bound_flag;
    if (construct_window) settings.window = *construct_window;
    const unsigned threads = static_cast<unsigned>(std::max<std::int64_t>(1, settings.threads));

    if (*verify) {
      auto P = schur::presentation_from_json(read_json(verify_input));
      if (verify_window) P = truncate(P, *verify_window);
      schur::check_well_formed(P);
      const schur::VerifyOptions vo{threads};
      schur::VerificationReport report;
      if (verify_method == "wielandt") {
        report = schur::verify_wielandt(P, vo);
      } else {
        report = schur::verify_axioms(P, vo);
        if (verify_method == "both" && schur::verify_wielandt(P, vo).ok() != report.ok()) {
          std::cerr << "error: the two verifiers disagree\n";
          return kLibraryError;
        }
      }
      if (json_out) std::cout << schur::report_to_json(report).dump() << "\n";
      else print_report(report);
      return report.ok() ? kOk : kNegative;
    }

    if (*construct) {
      Json params;
      try {
        params = Json::parse(construct_params);
      } catch (const Json::exception& e) {
        throw schur::Error(schur::ErrorCode::ParseError, std::string("invalid --params JSON: ") + e.what());
      }
      if (!params.is_object()) throw schur::Error(schur::ErrorCode::ParseError, "--params must be a JSON object");
      params["kind"] = construct_kind;
      schur::ConstructOptions co;
      co.orbit_bound = static_cast<std::size_t>(settings.orbit_bound);
      const auto P = schur::construct_from_json(params, settings.window, std::nullopt, co);
      std::cout << schur::presentation_to_json(P).dump() << "\n";
      return kOk;
    }

    if (*classify) {
      const auto P = schur::presentation_from_json(read_json(classify_input));
      const schur::ClassifyOptions opts{settings.min_window, threads};
      const auto d = schur::classify(P, opts);
      if (classify_describe && !json_out) std::cout << schur::describe_family(d) << "\n";
      else std::cout << schur::descriptor_to_json(d).dump() << "\n";
      return kOk;
    }

    if (*resynth) {
      const auto d = schur::descriptor_from_json(read_json(resynth_input));
      const auto P = schur::resynthesize(d, resynth_window.value_or(d.window));
      std::cout << schur::presentation_to_json(P).dump() << "\n";
      return kOk;
    }

    if (*enumerate) {
      schur::EnumerateOptions eo;
      eo.bound = static_cast<std::size_t>(settings.enum_bound);
      eo.prune = !enum_no_prune;
      eo.threads = threads;
      std::map<std::string, std::size_t> histogram;
      std::vector<schur::SchurPresentation> corpus;
      Json summary;
      if (!enum_group.empty()) {
        const auto G = schur::parse_group(enum_group);
        corpus = schur::enumerate_finite(G, eo);
        for (const auto& P : corpus) ++histogram[std::string(schur::to_string(schur::is_traditional(P).kind))];
        summary["group"] = schur::to_string(G);
      } else if (enum_windowed) {
        schur::WindowConstraints wc;
        if (enum_projection == "discrete") wc.projection = schur::Projection::Discrete;
        if (enum_projection == "symmetric") wc.projection = schur::Projection::Symmetric;
        corpus = schur::enumerate_windowed(*enum_windowed, wc, eo);
        const schur::ClassifyOptions co{*enum_windowed, threads};
        for (const auto& P : corpus) {
          std::string key;
          try {
            key = std::string(schur::to_string(schur::classify(P, co).variant));
          } catch (const schur::Error& e) {
            key = std::string(schur::to_string(e.code()));
          }
          ++histogram[key];
        }
        summary["group"] = "ZxZ_3";
        summary["window"] = *enum_windowed;
      } else {
        throw UsageError("enumerate needs --group or --windowed");
      }
      for (const auto& P : corpus) std::cout << schur::presentation_to_json(P).dump() << "\n";
      summary["count"] = corpus.size();
      Json hist = Json::object();
      for (const auto& [k, v] : histogram) hist[k] = v;
      summary["histogram"] = hist;
      if (json_out) {
        std::cout << Json{{"summary", summary}}.dump() << "\n";
      } else {
        std::cout << "\n" << "group   " << summary["group"].get<std::string>() << "\n";
        if (enum_windowed) std::cout << "window  " << *enum_windowed << "\n";
        std::cout << "count   " << corpus.size() << "\n";
        for (const auto& [k, v] : histogram) std::cout << "  " << k << std::string(12 - std::min<std::size_t>(11, k.size()), ' ') << v << "\n";
      }
      return kOk;
    }

    if (*lemmas) {
      const auto P = schur::presentation_from_json(read_json(lemmas_input));
      const auto report = schur::verify_axioms(P);
      if (!report.ok()) {
        std::cerr << "error: the presentation is not a Schur ring (" << report.witness->detail << ")\n";
        return kNegative;
      }
      const auto results = schur::check_lemmas(P);
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (json_out) {
        Json arr = Json::array();
        for (const auto& r : results) arr.push_back(schur::lemma_to_json(r));
        std::cout << Json{{"passed", all}, {"lemmas", arr}}.dump() << "\n";
      } else {
        for (const auto& r : results) {
          const std::string status = !r.applicable ? "n/a" : r.passed ? "pass" : "FAIL";
          std::string name = r.name;
          name.resize(std::max<std::size_t>(name.size(), 24), ' ');
          std::cout << name << " " << status << std::string(6 - status.size(), ' ') << r.checks << " checks";
          if (!r.detail.empty()) std::cout << "  " << r.detail;
          std::cout << "\n";
        }
      }
      return all ? kOk : kNegative;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const schur::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLibraryError;
  }
  return kOk;
}

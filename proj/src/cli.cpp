// chanest: learned OFDM channel estimation and sample-complexity analysis
// Copyright (C) 2026 The chanest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "chanest/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "chanest/errors.hpp"
#include "chanest/plot.hpp"
#include "chanest/runners.hpp"
#include "chanest/stats.hpp"
#include "chanest/table.hpp"
#include "chanest/validate.hpp"

namespace chanest {

using nlohmann::json;

namespace {

enum class Kind { Number, Integer, IntList, NumberList, Boolean };

struct KeySpec {
  const char* key;
  Kind kind;
  std::set<std::string> commands;
  const char* help;
};

const std::vector<KeySpec>& key_specs() {
  static const std::vector<KeySpec> specs{
      {"epsilon", Kind::Number, {"alpha-curve"}, "confidence parameter eps"},
      {"kappa", Kind::IntList, {"alpha-curve"}, "kappa grid, start:stop:step or a,b,c"},
      {"snr", Kind::NumberList, {"fig5", "alpha-vs-k", "alpha-vs-m", "dnn-quasi", "partition"}, "SNR list in dB"},
      {"m", Kind::Integer, {"fig5", "alpha-vs-k", "dnn-quasi", "partition"}, "training set size"},
      {"m_large", Kind::Integer, {"dnn-quasi"}, "large training set size"},
      {"m_grid", Kind::IntList, {"alpha-vs-m"}, "training sizes to sweep"},
      {"k", Kind::IntList, {"fig5", "alpha-vs-k", "alpha-vs-m", "dnn-quasi", "partition"}, "usable subcarrier count(s)"},
      {"n", Kind::Integer, {"fig5", "alpha-vs-k", "alpha-vs-m", "dnn-quasi", "partition"}, "DFT size"},
      {"blocks", Kind::IntList, {"partition"}, "block sizes"},
      {"tau_max", Kind::Integer, {"fig5", "alpha-vs-k", "alpha-vs-m", "partition"}, "maximum delay in samples"},
      {"tau_set", Kind::IntList, {"dnn-quasi"}, "candidate maximum delays"},
      {"alpha_target", Kind::Number, {"alpha-vs-m"}, "target scaled MSE difference"},
      {"max_epochs", Kind::Integer, {"dnn-quasi"}, "MLP epoch cap for both training sets"},
      {"quick", Kind::Boolean, {"validate"}, "cheap checks only"},
  };
  return specs;
}

const std::set<std::string> kGlobalKeys{"command", "seed", "trials", "out", "workers", "plot"};

const KeySpec* find_key(const std::string& key) {
  for (const auto& s : key_specs())
    if (key == s.key) return &s;
  return nullptr;
}

std::string flag_name(const std::string& key) {
  std::string f = "--" + key;
  std::replace(f.begin(), f.end(), '_', '-');
  return f;
}

double parse_double(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid number '" + text + "' for " + key);
  return v;
}

std::int64_t parse_int(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid integer '" + text + "' for " + key);
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

json parse_list(const std::string& text, bool integer, const std::string& key) {
  json out = json::array();
  const auto range = split(text, ':');
  if (range.size() == 3) {
    const double start = parse_double(range[0], key), stop = parse_double(range[1], key),
                 step = parse_double(range[2], key);
    if (!(step > 0.0) || stop < start) throw UsageError("invalid range '" + text + "' for " + key);
    const auto count = static_cast<std::int64_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::int64_t i = 0; i < count; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (integer) {
        if (v != std::round(v)) throw UsageError("non-integer range '" + text + "' for " + key);
        out.push_back(static_cast<std::int64_t>(std::llround(v)));
      } else {
        out.push_back(v);
      }
    }
    return out;
  }
  if (range.size() != 1) throw UsageError("invalid list '" + text + "' for " + key);
  for (const auto& item : split(text, ',')) {
    if (integer)
      out.push_back(parse_int(item, key));
    else
      out.push_back(parse_double(item, key));
  }
  if (out.empty()) throw UsageError("empty list for " + key);
  return out;
}

/// Brings a flag string or file value to the canonical JSON type of `spec`.
json normalize(const KeySpec& spec, const json& value) {
  const std::string key = spec.key;
  switch (spec.kind) {
    case Kind::Boolean:
      if (value.is_boolean()) return value;
      break;
    case Kind::Number:
      if (value.is_number()) return value.get<double>();
      if (value.is_string()) return parse_double(value.get<std::string>(), key);
      break;
    case Kind::Integer:
      if (value.is_number_integer()) return value.get<std::int64_t>();
      if (value.is_string()) return parse_int(value.get<std::string>(), key);
      break;
    case Kind::IntList:
    case Kind::NumberList: {
      const bool integer = spec.kind == Kind::IntList;
      if (value.is_string()) return parse_list(value.get<std::string>(), integer, key);
      if (value.is_number()) return normalize(spec, json::array({value}));
      if (value.is_array() && !value.empty()) {
        json out = json::array();
        for (const auto& v : value) {
          if (integer && !v.is_number_integer()) throw UsageError("expected integers for " + key);
          if (!integer && !v.is_number()) throw UsageError("expected numbers for " + key);
          out.push_back(v);
        }
        return out;
      }
      break;
    }
  }
  throw UsageError("wrong type for " + key);
}

template <typename T>
std::vector<T> list_of(const json& v) {
  return v.get<std::vector<T>>();
}

int single(const json& overrides, const std::string& key, int fallback) {
  if (!overrides.contains(key)) return fallback;
  const auto values = list_of<int>(overrides.at(key));
  if (values.size() != 1) throw UsageError(flag_name(key) + " takes a single value for this command");
  return values.front();
}

template <typename T>
void take(const json& overrides, const std::string& key, T& target) {
  if (overrides.contains(key)) target = overrides.at(key).get<T>();
}

struct HelpRequested {
  std::string text;
};

RunResult dispatch(const RunConfig& cfg) {
  RunContext ctx{cfg.seed, cfg.workers, cfg.trials};
  const json& o = cfg.overrides;
  if (cfg.command == "alpha-curve") {
    AlphaCurveOptions opt;
    take(o, "epsilon", opt.epsilon);
    take(o, "kappa", opt.kappa_grid);
    return run_alpha_curve(opt, ctx);
  }
  if (cfg.command == "fig5") {
    Fig5Options opt;
    take(o, "n", opt.dft_size);
    take(o, "k", opt.k_list);
    take(o, "m", opt.m);
    take(o, "tau_max", opt.tau_max);
    take(o, "snr", opt.snr_db);
    return run_fig5(opt, ctx);
  }
  if (cfg.command == "alpha-vs-k") {
    AlphaVsKOptions opt;
    if (o.contains("n")) opt.dft_size = o.at("n").get<int>();
    take(o, "k", opt.k_list);
    take(o, "m", opt.m);
    take(o, "tau_max", opt.tau_max);
    take(o, "snr", opt.snr_db);
    return run_alpha_vs_k(opt, ctx);
  }
  if (cfg.command == "alpha-vs-m") {
    AlphaVsMOptions opt;
    take(o, "n", opt.dft_size);
    take(o, "k", opt.k_list);
    take(o, "tau_max", opt.tau_max);
    take(o, "m_grid", opt.m_grid);
    take(o, "alpha_target", opt.alpha_target);
    if (o.contains("snr")) {
      const auto snr = list_of<double>(o.at("snr"));
      if (snr.size() != 1) throw UsageError("--snr takes a single value for alpha-vs-m");
      opt.snr_db = snr.front();
    }
    return run_alpha_vs_m(opt, ctx);
  }
  if (cfg.command == "dnn-quasi") {
    DnnQuasiOptions opt;
    take(o, "n", opt.dft_size);
    opt.k = single(o, "k", opt.k);
    take(o, "tau_set", opt.tau_set);
    take(o, "snr", opt.snr_db);
    take(o, "m", opt.m_small);
    take(o, "m_large", opt.m_large);
    if (o.contains("max_epochs")) {
      opt.hyper_small.max_epochs = o.at("max_epochs").get<int>();
      opt.hyper_large.max_epochs = opt.hyper_small.max_epochs;
    }
    return run_dnn_quasi(opt, ctx);
  }
  if (cfg.command == "partition") {
    PartitionOptions opt;
    take(o, "n", opt.dft_size);
    opt.k = single(o, "k", opt.k);
    take(o, "m", opt.m);
    take(o, "tau_max", opt.tau_max);
    take(o, "blocks", opt.blocks);
    take(o, "snr", opt.snr_db);
    return run_partition(opt, ctx);
  }
  if (cfg.command == "validate") {
    ValidateOptions opt;
    take(o, "quick", opt.quick);
    return run_validate(opt, ctx);
  }
  throw UsageError("unknown command " + cfg.command);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"alpha-curve", "fig5",      "alpha-vs-k", "alpha-vs-m",
                                              "dnn-quasi",   "partition", "validate"};
  return names;
}

RunConfig parse_config(const std::vector<std::string>& args, const std::optional<json>& file) {
  CLI::App app{"Learned OFDM channel estimation experiments", "chanest"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", CHANEST_VERSION);

  std::optional<std::string> seed, trials, out, workers, config_path;
  bool plot = false;
  app.add_option("--seed", seed, "master RNG seed");
  app.add_option("--trials", trials, "evaluation trials per point");
  app.add_option("--out", out, "output directory");
  app.add_option("--workers", workers, "worker threads");
  app.add_option("--config", config_path, "JSON config file");
  app.add_flag("--plot", plot, "also write an SVG plot");

  std::map<std::string, std::optional<std::string>> raw;
  bool quick = false;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    for (const auto& spec : key_specs()) {
      if (!spec.commands.contains(name)) continue;
      if (spec.kind == Kind::Boolean)
        sub->add_flag(flag_name(spec.key), quick, spec.help);
      else
        sub->add_option(flag_name(spec.key), raw[spec.key], spec.help)->allow_extra_args(false);
    }
  }

  // the config file may name the command, so read it before parsing flags
  std::optional<json> loaded = file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(9);
    if (path.empty()) continue;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    try {
      loaded = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError("malformed config file " + path + ": " + e.what());
    }
  }
  std::vector<std::string> effective = args;
  const bool has_command = std::any_of(args.begin(), args.end(), [](const std::string& a) {
    return std::find(command_names().begin(), command_names().end(), a) != command_names().end();
  });
  if (!has_command && loaded && loaded->is_object() && loaded->contains("command") &&
      (*loaded)["command"].is_string()) {
    const auto cmd = (*loaded)["command"].get<std::string>();
    if (std::find(command_names().begin(), command_names().end(), cmd) == command_names().end())
      throw UsageError("unknown command " + cmd);
    effective.insert(effective.begin(), cmd);
  }

  std::vector<std::string> reversed(effective.rbegin(), effective.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested{std::string(CHANEST_VERSION) + "\n"};
  } catch (const CLI::ExtrasError& e) {
    std::string offending;
    for (const auto& a : args)
      if (a.rfind("-", 0) == 0 && offending.empty() && std::string(e.what()).find(a) != std::string::npos) offending = a;
    throw UsageError("unknown flag " + (offending.empty() ? std::string(e.what()) : offending));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  json merged = json::object();
  if (loaded) {
    if (!loaded->is_object()) throw UsageError("config file must hold a JSON object");
    for (const auto& [key, value] : loaded->items()) {
      if (!kGlobalKeys.contains(key) && !find_key(key)) throw UsageError("unknown config key " + key);
      merged[key] = value;
    }
  }

  RunConfig cfg;
  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();
  if (command.empty())
    throw UsageError("no command given; expected one of alpha-curve, fig5, alpha-vs-k, alpha-vs-m, dnn-quasi, "
                     "partition, validate");
  cfg.command = command;

  for (const auto& [key, value] : raw)
    if (value) merged[key] = *value;
  if (quick) merged["quick"] = true;
  if (seed) merged["seed"] = *seed;
  if (trials) merged["trials"] = *trials;
  if (out) merged["out"] = *out;
  if (workers) merged["workers"] = *workers;
  if (plot) merged["plot"] = true;

  for (const auto& [key, value] : merged.items()) {
    if (key == "command") continue;
    if (key == "seed") {
      const std::int64_t s = value.is_string() ? parse_int(value.get<std::string>(), key) : value.get<std::int64_t>();
      if (s < 0) throw UsageError("seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "trials") {
      const std::int64_t t = value.is_string() ? parse_int(value.get<std::string>(), key) : value.get<std::int64_t>();
      if (t < 1) throw UsageError("trials must be positive");
      cfg.trials = t;
    } else if (key == "workers") {
      const std::int64_t w = value.is_string() ? parse_int(value.get<std::string>(), key) : value.get<std::int64_t>();
      if (w < 1) throw UsageError("workers must be positive");
      cfg.workers = static_cast<unsigned>(w);
    } else if (key == "out") {
      if (!value.is_string()) throw UsageError("wrong type for out");
      cfg.out_dir = value.get<std::string>();
    } else if (key == "plot") {
      if (!value.is_boolean()) throw UsageError("wrong type for plot");
      cfg.plot = value.get<bool>();
    } else {
      const KeySpec* spec = find_key(key);
      if (!spec->commands.contains(command)) throw UsageError(flag_name(key) + " does not apply to " + command);
      cfg.overrides[key] = normalize(*spec, value);
    }
  }
  if (!merged.contains("workers")) cfg.workers = default_workers();
  if (cfg.out_dir.empty()) {
    const char* env = std::getenv("CHANEST_OUT");
    cfg.out_dir = (env && *env) ? env : "out";
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RunResult result = dispatch(cfg);

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw Error("cannot create output directory " + cfg.out_dir.string() + ": " + ec.message());
  const auto base = cfg.out_dir / cfg.command;
  write_text_file(base.string() + ".csv", result.table.to_csv());
  json meta = result.metadata;
  meta["overrides"] = cfg.overrides;
  write_text_file(base.string() + ".meta.json", meta.dump(2) + "\n");
  if (cfg.plot && !result.plot.series.empty()) write_text_file(base.string() + ".svg", render_svg(result.plot));

  for (const auto& c : result.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  out << "wrote " << base.string() << ".csv\n";
  if (!result.all_passed()) {
    err << "chanest: " << cfg.command << ": one or more checks failed\n";
    return 1;
  }
  return 0;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const UsageError& e) {
    err << "chanest: usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    return run(cfg, out, err);
  } catch (const std::exception& e) {
    err << "chanest: " << cfg.command << " failed: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace chanest

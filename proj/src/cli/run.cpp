#include "starconf/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "report.hpp"
#include "starconf/errors.hpp"

namespace starconf::cli {

namespace {

enum class Format { text, json, csv };

struct Command {
  const char* name;
  const char* help;
  Report (*fn)(const Params&);
};

constexpr Command kCommands[] = {
    {"skeleton", "skeleton ideal: generators, h-vector, degree, alpha", skeleton},
    {"symbolic", "symbolic power I^(l): generators, alpha, omega", symbolic},
    {"hvector", "h-vector of I^(l)", hvector},
    {"betti", "resolutions of the skeleton and its symbolic square", betti},
    {"hb", "Hilbert-Burch matrix Delta_m and its maximal minors", hb},
    {"decomp", "primary decomposition of I^l and its saturation", decomp},
    {"containment", "decide I^(m) in I^r", containment},
    {"scan", "containment grid and resurgence bounds", scan},
    {"matroid", "matroid and Stanley-Reisner checks for the skeleton complex", matroid},
    {"wk", "W_k chain of basic double links", wk},
    {"export", "script for an external computer-algebra system", export_script},
};

void emit_error(Format format, const std::string& command, const char* reason, const std::string& message,
                std::optional<std::int64_t> cap, std::ostream& out, std::ostream& err) {
  err << "error: " << message << "\n";
  if (format == Format::json) {
    Json j;
    j["command"] = command;
    j["status"] = "error";
    j["reason"] = reason;
    j["message"] = message;
    if (cap) j["cap"] = *cap;
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star configurations: symbolic powers, Hilbert functions, decompositions, resurgence", "starconf"};
  app.require_subcommand(1);

  Params p;
  Format format = Format::text;
  std::string out_path;
  std::optional<std::int64_t> enum_cap;
  std::optional<int> degree_cap, det_cap, power_cap;

  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  app.add_option("--format", format, "text, json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--jobs", p.jobs, "worker threads for scan")->check(CLI::Range(1, 256));
  app.add_option("--enum-cap", enum_cap, "max tuples enumerated for a symbolic power")->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", degree_cap, "max degree for Hilbert function work")->check(CLI::PositiveNumber);
  app.add_option("--det-cap", det_cap, "max determinant dimension")->check(CLI::PositiveNumber);
  app.add_option("--power-cap", power_cap, "max ordinary power exponent r")->check(CLI::PositiveNumber);

  std::string selected;
  for (const auto& cmd : kCommands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->fallthrough();
    const std::string name = cmd.name;
    auto needs = [&](const char* flag, int& target, const char* what) { sub->add_option(flag, target, what)->required(); };
    if (name == "hb") {
      needs("--s", p.s, "number of hyperplanes");
      needs("--m", p.m, "symbolic power m >= 2");
    } else if (name == "wk") {
      needs("--s", p.s, "number of hyperplanes");
      sub->add_option("--l", p.l, "power l (default 1)");
    } else if (name == "export") {
      sub->add_option("--s", p.s, "number of hyperplanes (coordinate or random forms)");
      needs("--c", p.c, "codimension");
      sub->add_option("--l", p.l, "power l (default 1)");
      sub->add_option("--n", p.n, "projective dimension for random forms (default s-1)");
      sub->add_option("--target", p.target, "m2 or singular");
      sub->add_option("--forms", p.forms, "linear forms, e.g. \"1,0,0;0,1,0;0,0,1;1,1/2,-3\"");
      sub->add_option("--seed", p.seed, "random rational forms from this seed");
    } else {
      needs("--s", p.s, "number of hyperplanes");
      needs("--c", p.c, "codimension");
      sub->add_option("--n", p.n, "ambient projective dimension (reported only)");
      if (name == "symbolic" || name == "hvector" || name == "decomp") sub->add_option("--l", p.l, "power l (default 1)");
      if (name == "containment") {
        needs("--m", p.m, "symbolic power m");
        needs("--r", p.r, "ordinary power r");
      }
      if (name == "scan") {
        needs("--mmax", p.mmax, "largest m");
        needs("--rmax", p.rmax, "largest r");
      }
    }
    sub->callback([&selected, name] { selected = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    emit_error(format, selected, "usage_error", e.what(), std::nullopt, out, err);
    return ExitCode::usage;
  }

  try {
    p.caps = Caps::from_environment();
    if (enum_cap) p.caps.enumeration = *enum_cap;
    if (degree_cap) p.caps.degree = *degree_cap;
    if (det_cap) p.caps.determinant_dim = *det_cap;
    if (power_cap) p.caps.power = *power_cap;
  } catch (const UsageError& e) {
    emit_error(format, selected, "usage_error", e.what(), std::nullopt, out, err);
    return ExitCode::usage;
  }

  const Command* cmd = nullptr;
  for (const auto& c : kCommands)
    if (selected == c.name) cmd = &c;

  std::optional<Report> report;
  try {
    report = cmd->fn(p);
  } catch (const UsageError& e) {
    emit_error(format, selected, "usage_error", e.what(), std::nullopt, out, err);
    return ExitCode::usage;
  } catch (const DomainError& e) {
    emit_error(format, selected, "usage_error", e.what(), std::nullopt, out, err);
    return ExitCode::usage;
  } catch (const ResourceError& e) {
    emit_error(format, selected, "resource_cap", e.what(), e.cap(), out, err);
    return ExitCode::resource;
  }

  std::string body;
  switch (format) {
    case Format::json:
      body = report->to_json(p.caps).dump(2) + "\n";
      break;
    case Format::csv:
      if (!report->csv) {
        emit_error(format, selected, "usage_error", "csv output is only available for hvector, betti and scan",
                   std::nullopt, out, err);
        return ExitCode::usage;
      }
      body = *report->csv;
      break;
    case Format::text:
      body = report->script ? *report->script : report->to_text();
      break;
  }
  if (format != Format::json)
    for (const auto& w : report->warnings) err << "warning: " << w << "\n";

  if (out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      emit_error(format, selected, "usage_error", "cannot open output file " + out_path, std::nullopt, out, err);
      return ExitCode::usage;
    }
    file << body;
  }

  if (!report->ok()) {
    for (const auto& c : report->checks)
      if (!c.ok) err << "check failed: " << c.name << (c.witness.empty() ? "" : " (witness: " + c.witness + ")") << "\n";
    return ExitCode::check_failed;
  }
  return ExitCode::ok;
}

}  // namespace starconf::cli

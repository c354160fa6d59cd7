#pragma once

// Command implementations behind the CLI. Each command returns a Report that
// can be rendered as text, json or (for tabular commands) csv.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "starconf/caps.hpp"

namespace starconf::cli {

using Json = nlohmann::ordered_json;

struct Params {
  int s = 0;
  int c = 0;
  int l = 1;
  int m = 0;
  int r = 0;
  int mmax = 0;
  int rmax = 0;
  int jobs = 1;
  std::optional<int> n;
  std::string target = "m2";
  std::optional<std::string> forms;
  std::optional<std::uint64_t> seed;
  Caps caps;
};

struct Check {
  std::string name;
  bool ok = false;
  std::string witness;  ///< set when !ok
};

struct Report {
  explicit Report(std::string name) : command(std::move(name)) {}

  std::string command;
  Json params = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::vector<std::string> text;      ///< human-readable body
  std::optional<std::string> csv;     ///< only for tabular commands
  std::optional<std::string> script;  ///< export: printed verbatim in text mode

  void check(std::string name, bool ok, std::string witness = {});
  bool ok() const;
  Json to_json(const Caps& caps) const;
  std::string to_text() const;
};

Json caps_json(const Caps& caps);

Report skeleton(const Params& p);
Report symbolic(const Params& p);
Report hvector(const Params& p);
Report betti(const Params& p);
Report hb(const Params& p);
Report decomp(const Params& p);
Report containment(const Params& p);
Report scan(const Params& p);
Report matroid(const Params& p);
Report wk(const Params& p);
Report export_script(const Params& p);

}  // namespace starconf::cli

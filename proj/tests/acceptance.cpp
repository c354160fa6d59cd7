// Acceptance run: one PASS/FAIL line per criterion. The process exits 0 only
// when the failing set equals the documented expected failures (see README).

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starconf/cli.hpp"
#include "starconf/combinatorics.hpp"
#include "starconf/decomp.hpp"
#include "starconf/hilbert.hpp"
#include "starconf/resolution.hpp"
#include "starconf/star.hpp"

using namespace starconf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string vec(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string cell(int m, int r) { return "(" + std::to_string(m) + "," + std::to_string(r) + ")"; }

Outcome worked_example() {
  Outcome o;
  const auto start = Clock::now();
  const auto hv2 = h_vector(skeleton_ideal(StarConfig::make(7, 2)), 2).entries;
  const auto hv3 = h_vector(skeleton_ideal(StarConfig::make(7, 3)), 3).entries;
  const auto square = symbolic_power(StarConfig::make(7, 3), 2);
  const auto hss = h_vector(square, 3).entries;
  o.require(hv2 == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}, "c=2 h-vector " + vec(hv2));
  o.require(hv3 == std::vector<std::int64_t>{1, 3, 6, 10, 15}, "c=3 h-vector " + vec(hv3));
  o.require(hss == std::vector<std::int64_t>{1, 3, 6, 10, 15, 21, 21, 21, 21, 21}, "symbolic square " + vec(hss));
  const auto shape = ss_resolution(7, 3);
  using Row = std::vector<std::pair<int, std::int64_t>>;
  o.require(shape.modules == std::vector<Row>{{{-6, 7}, {-10, 21}}, {{-7, 6}, {-11, 42}}, {{-12, 21}}},
            "resolution shape");
  o.require(euler_check(shape, square), "resolution does not match the Hilbert series");
  const double t = seconds_since(start);
  o.require(t < 60, "runtime " + std::to_string(t) + "s");
  if (o.pass) o.detail = "h-vectors and resolution match, " + std::to_string(static_cast<int>(t * 1000)) + " ms";
  return o;
}

Outcome generic_hvectors() {
  Outcome o;
  int cases = 0;
  for (int s = 2; s <= 7; ++s)
    for (int c = 1; c < s; ++c) {
      const auto hv = h_vector(skeleton_ideal(StarConfig::make(s, c)), c);
      std::vector<std::int64_t> expected;
      for (int t = 0; t <= s - c; ++t) expected.push_back(binomial(t + c - 1, c - 1));
      o.require(hv.entries == expected && hv.sum() == binomial(s, c),
                "s=" + std::to_string(s) + " c=" + std::to_string(c) + " got " + vec(hv.entries));
      ++cases;
    }
  if (o.pass) o.detail = std::to_string(cases) + " (s,c) pairs";
  return o;
}

Outcome alpha_omega() {
  Outcome o;
  int cases = 0;
  for (int s = 2; s <= 6; ++s)
    for (int c = 1; c < s; ++c)
      for (int ell = 1; ell <= 6; ++ell) {
        const auto cfg = StarConfig::make(s, c);
        const auto ideal = symbolic_power(cfg, ell);
        const int q = (ell - 1) / c;
        const int r = ell - q * c;
        const std::int64_t a = static_cast<std::int64_t>(q + 1) * s - c + r;
        const std::int64_t w = static_cast<std::int64_t>(ell) * (s - c + 1);
        o.require(alpha(ideal) == a && omega(ideal) == w,
                  "s=" + std::to_string(s) + " c=" + std::to_string(c) + " l=" + std::to_string(ell));
        ++cases;
      }
  if (o.pass) o.detail = std::to_string(cases) + " (s,c,l) triples by enumeration";
  return o;
}

Outcome lemma_contain() {
  Outcome o;
  int cases = 0;
  for (int s = 3; s <= 7; ++s)
    for (int c = 2; c < s; ++c) {
      const auto lower = skeleton_ideal(StarConfig::make(s, c - 1));
      const auto square = symbolic_power(StarConfig::make(s, c), 2);
      o.require(contains(square, lower), "s=" + std::to_string(s) + " c=" + std::to_string(c));
      ++cases;
    }
  if (o.pass) o.detail = std::to_string(cases) + " (s,c) pairs";
  return o;
}

Outcome decomposition() {
  Outcome o;
  int cases = 0;
  auto one = [&](int s, int c, int ell) {
    const std::string at = "s=" + std::to_string(s) + " c=" + std::to_string(c) + " l=" + std::to_string(ell);
    o.require(verify_power_decomposition(s, c, ell), "power decomposition " + at);
    o.require(verify_saturation(s, c, ell), "saturation " + at);
    ++cases;
  };
  for (int s = 3; s <= 5; ++s)
    for (int c = 2; c < s; ++c)
      for (int ell = 1; ell <= 3; ++ell) one(s, c, ell);
  one(4, 2, 4);
  if (o.pass) o.detail = std::to_string(cases) + " cases, power and saturation";
  return o;
}

Outcome hilbert_burch() {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& [s, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}, {4, 3}, {4, 4}, {5, 2}, {5, 3}}) {
    const auto report = verify_hb(s, m);
    o.require(report.ok(), "s=" + std::to_string(s) + " m=" + std::to_string(m) + ": " + report.failure);
  }
  const double t = seconds_since(start);
  o.require(t < 180, "runtime " + std::to_string(t) + "s");
  if (o.pass) o.detail = "7 (s,m) pairs, " + std::to_string(static_cast<int>(t * 1000)) + " ms";
  return o;
}

Outcome resurgence() {
  Outcome o;
  Caps caps;
  caps.power = 10;
  std::vector<std::string> disagreements;
  bool floor_ok = true;
  for (int n_proj : {3, 4}) {
    const auto report = resurgence_scan(n_proj + 1, n_proj - 1, 20, 8, caps, 4);
    for (const auto& c : report.criterion_disagreements)
      disagreements.push_back("N=" + std::to_string(n_proj) + " " + cell(c.m, c.r));
    floor_ok = floor_ok && report.floor_criterion_agreement.value_or(false);
  }
  const bool witness = !symbolic_in_power(4, 2, 12, 10, caps) && criterion(3, 12, 10);
  const bool rho = rho_exact(4, 2) == Rational(3, 2) && rho_exact(5, 3) == Rational(9, 5);

  std::string joined;
  for (const auto& d : disagreements) joined += (joined.empty() ? "" : " ") + d;
  o.require(disagreements.empty(), "closed-form inequality disagrees with containment at " + joined);
  o.require(witness, "witness (12,10) is contained");
  o.require(rho, "rho values");
  o.detail += std::string("; floor-corrected criterion ") + (floor_ok ? "agrees" : "DISAGREES") +
              " on the full grid; witness (12,10) " + (witness ? "non-contained" : "FAILED") + "; rho 3/2, 9/5 " +
              (rho ? "ok" : "FAILED");
  return o;
}

Outcome euler() {
  Outcome o;
  int cases = 0;
  for (int s = 3; s <= 6; ++s)
    for (int c = 2; c < s; ++c) {
      o.require(euler_check(ss_resolution(s, c), symbolic_power(StarConfig::make(s, c), 2)),
                "s=" + std::to_string(s) + " c=" + std::to_string(c));
      ++cases;
    }
  if (o.pass) o.detail = std::to_string(cases) + " (s,c) pairs";
  return o;
}

Outcome matroids() {
  Outcome o;
  int cases = 0;
  for (int s = 2; s <= 8; ++s)
    for (int c = 1; c < s; ++c) {
      const auto cfg = StarConfig::make(s, c);
      const auto complex = skeleton_complex(cfg);
      const std::string at = "s=" + std::to_string(s) + " c=" + std::to_string(c);
      o.require(is_matroid(complex), "not a matroid " + at);
      o.require(stanley_reisner_ideal(complex) == skeleton_ideal(cfg), "Stanley-Reisner ideal " + at);
      ++cases;
    }
  if (o.pass) o.detail = std::to_string(cases) + " complexes";
  return o;
}

Outcome wk_chain() {
  Outcome o;
  int steps = 0;
  for (int s : {4, 5})
    for (int ell : {1, 2})
      for (int k = 0; k < s; ++k) {
        const auto step = wk_step_check(s, ell, k);
        const std::string at = "s=" + std::to_string(s) + " l=" + std::to_string(ell) + " k=" + std::to_string(k);
        o.require(step.ok(), "step " + at);
        const bool hf = bdg_hf_check(principal(wk_link_monomial(s, ell, k)), wk_ideal(s, ell, k), 1,
                                     wk_ideal(s, ell, k + 1));
        o.require(hf, "Hilbert function identity " + at);
        ++steps;
      }
  if (o.pass) o.detail = std::to_string(steps) + " steps";
  return o;
}

std::string invoke(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(STARCONF_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"skeleton", "--s", "6", "--c", "3"},
      {"symbolic", "--s", "5", "--c", "2", "--l", "3"},
      {"hvector", "--s", "6", "--c", "3", "--l", "2"},
      {"betti", "--s", "6", "--c", "3"},
      {"hb", "--s", "4", "--m", "4"},
      {"decomp", "--s", "5", "--c", "3", "--l", "2"},
      {"containment", "--s", "5", "--c", "3", "--m", "7", "--r", "4"},
      {"scan", "--s", "4", "--c", "2", "--mmax", "20", "--rmax", "8"},
      {"matroid", "--s", "7", "--c", "3"},
      {"wk", "--s", "5", "--l", "2"},
      {"export", "--s", "5", "--c", "2", "--l", "2", "--seed", "3", "--n", "3"},
  };
  int runs = 0;
  for (const auto& base : commands)
    for (const std::string format : {"text", "json"}) {
      std::string reference;
      int reference_code = 0;
      for (const std::string jobs : {"1", "1", "2", "8"}) {
        auto args = base;
        args.insert(args.end(), {"--format", format, "--jobs", jobs});
        int code = 0;
        const auto out = invoke(args, code);
        ++runs;
        if (reference.empty()) {
          reference = out;
          reference_code = code;
          o.require(!out.empty(), base[0] + " produced no output");
        } else {
          o.require(out == reference && code == reference_code, base[0] + " " + format + " differs at --jobs " + jobs);
        }
      }
    }
  const std::vector<std::pair<std::vector<std::string>, std::string>> pinned{
      {{"skeleton", "--s", "7", "--c", "3", "--format", "json"}, "skeleton_s7_c3.json"},
      {{"betti", "--s", "7", "--c", "3"}, "betti_s7_c3.txt"},
      {{"scan", "--s", "4", "--c", "3", "--mmax", "8", "--rmax", "4", "--format", "csv", "--jobs", "4"}, "scan_s4_c3.csv"},
      {{"hb", "--s", "4", "--m", "3", "--format", "json"}, "hb_s4_m3.json"},
      {{"export", "--s", "4", "--c", "2", "--l", "2", "--seed", "7", "--n", "2"}, "export_seed7_s4_c2_l2.m2"},
      {{"export", "--s", "4", "--c", "2", "--l", "2", "--seed", "7", "--n", "2", "--target", "singular"},
       "export_seed7_s4_c2_l2.sing"},
      {{"export", "--s", "4", "--c", "2", "--l", "2"}, "export_coordinate_s4_c2_l2.m2"},
      {{"export", "--s", "4", "--c", "2", "--l", "2", "--target", "singular"}, "export_coordinate_s4_c2_l2.sing"},
  };
  for (const auto& [args, file] : pinned) {
    int code = 0;
    o.require(invoke(args, code) == read_golden(file), "golden mismatch " + file);
  }
  if (o.pass) o.detail = std::to_string(runs) + " runs across 11 commands, " + std::to_string(pinned.size()) + " golden files";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example s=7 c=3", worked_example},
      {2, "generic h-vector, s<=7", generic_hvectors},
      {3, "alpha/omega formulas, s<=6, l<=6", alpha_omega},
      {4, "I_{V_{c-1}} in I_{V_c}^(2), s<=7", lemma_contain},
      {5, "primary decomposition and saturation", decomposition},
      {6, "Hilbert-Burch minors", hilbert_burch},
      {7, "resurgence criterion, N=3,4, m<=20, r<=8", resurgence},
      {8, "Euler characteristic of the symbolic square resolution, s<=6", euler},
      {9, "matroid and Stanley-Reisner, s<=8", matroids},
      {10, "W_k basic double link chain", wk_chain},
      {11, "CLI determinism and golden files", determinism},
  };
  // The closed-form containment inequality is wrong on a few boundary cells of
  // the grid, so criterion 7 cannot pass as stated.
  const std::set<int> expected_failures{7};

  std::set<int> failures;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) failures.insert(c.id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failures.size() << "/" << criteria.size() << " passed";
  if (failures == expected_failures) {
    std::cout << "; failures match the documented expected set {7}\n";
    return 0;
  }
  std::cout << "; unexpected outcome\n";
  return 1;
}

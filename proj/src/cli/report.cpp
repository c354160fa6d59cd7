#include "report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "starconf/cas_export.hpp"
#include "starconf/combinatorics.hpp"
#include "starconf/decomp.hpp"
#include "starconf/errors.hpp"
#include "starconf/hilbert.hpp"
#include "starconf/resolution.hpp"
#include "starconf/star.hpp"

namespace starconf::cli {

namespace {

std::string rational_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::vector<std::string> gen_strings(const MonomialIdeal& ideal) {
  std::vector<std::string> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(to_string(g));
  return out;
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

Json shape_json(const ResolutionShape& shape) {
  Json modules = Json::array();
  for (std::size_t i = 0; i < shape.modules.size(); ++i) {
    Json terms = Json::array();
    for (const auto& [twist, rank] : shape.modules[i]) terms.push_back({{"twist", twist}, {"rank", rank}});
    modules.push_back({{"i", i + 1}, {"summands", terms}});
  }
  return modules;
}

std::vector<std::string> shape_text(const ResolutionShape& shape) {
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < shape.modules.size(); ++i) {
    std::vector<std::string> parts;
    for (const auto& [twist, rank] : shape.modules[i])
      parts.push_back("R(" + std::to_string(twist) + ")^" + std::to_string(rank));
    lines.push_back("  F" + std::to_string(i + 1) + ": " + join(parts, " + "));
  }
  return lines;
}

/// First generator of `a` that is not in `b`, if any.
std::optional<ExponentTuple> first_outside(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.gens())
    if (!member(g, b)) return g;
  return std::nullopt;
}

std::string difference_witness(const MonomialIdeal& lhs, const MonomialIdeal& rhs, const std::string& lname,
                               const std::string& rname) {
  if (auto g = first_outside(lhs, rhs)) return to_string(*g) + " is in " + lname + " but not in " + rname;
  if (auto g = first_outside(rhs, lhs)) return to_string(*g) + " is in " + rname + " but not in " + lname;
  return {};
}

StarConfig config(const Params& p) { return StarConfig::make(p.s, p.c, p.n); }

void put_config(Report& rep, const Params& p) {
  rep.params["s"] = p.s;
  rep.params["c"] = p.c;
  if (p.n) rep.params["n"] = *p.n;
}

}  // namespace

void Report::check(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

Json caps_json(const Caps& caps) {
  return {{"enumeration", caps.enumeration},
          {"degree", caps.degree},
          {"determinant_dim", caps.determinant_dim},
          {"power", caps.power}};
}

Json Report::to_json(const Caps& caps) const {
  Json j;
  j["command"] = command;
  j["status"] = ok() ? "ok" : "failed";
  if (!ok()) {
    j["reason"] = "theorem_check_failed";
    Json failed = Json::array();
    for (const auto& c : checks)
      if (!c.ok) failed.push_back({{"check", c.name}, {"witness", c.witness}});
    j["failures"] = failed;
  }
  j["params"] = params;
  j["caps"] = caps_json(caps);
  j["result"] = result;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"ok", c.ok}});
  j["checks"] = cs;
  j["warnings"] = warnings;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& line : text) os << line << "\n";
  for (const auto& c : checks) {
    os << "check " << c.name << ": " << (c.ok ? "ok" : "FAILED");
    if (!c.ok && !c.witness.empty()) os << " (witness: " << c.witness << ")";
    os << "\n";
  }
  if (!checks.empty()) os << "status: " << (ok() ? "ok" : "failed") << "\n";
  return os.str();
}

Report skeleton(const Params& p) {
  const auto cfg = config(p);
  Report rep("skeleton");
  put_config(rep, p);
  const auto ideal = skeleton_ideal(cfg);
  const auto hv = h_vector(ideal, cfg.c, p.caps.degree);
  const auto expected = generic_hvector(cfg.s, cfg.c);
  const auto shape = en_resolution(cfg.s, cfg.c);

  rep.result["generator_count"] = ideal.size();
  rep.result["generators"] = gen_strings(ideal);
  rep.result["alpha"] = alpha(ideal);
  rep.result["h_vector"] = hv.entries;
  rep.result["degree"] = hv.sum();
  rep.result["resolution"] = shape_json(shape);

  rep.text.push_back("skeleton ideal s=" + std::to_string(cfg.s) + " c=" + std::to_string(cfg.c));
  rep.text.push_back("generators (" + std::to_string(ideal.size()) + "): " + join(gen_strings(ideal), ", "));
  rep.text.push_back("alpha: " + std::to_string(alpha(ideal)));
  rep.text.push_back("h-vector: " + join(hv.entries, " "));
  rep.text.push_back("degree: " + std::to_string(hv.sum()));
  rep.text.push_back("Eagon-Northcott resolution:");
  for (auto& line : shape_text(shape)) rep.text.push_back(std::move(line));

  rep.check("generic_h_vector", hv == expected, "expected " + join(expected.entries, " "));
  rep.check("degree_is_binomial", hv.sum() == binomial(cfg.s, cfg.c),
            "expected " + std::to_string(binomial(cfg.s, cfg.c)));
  rep.check("generator_count", static_cast<std::int64_t>(ideal.size()) == en_rank(cfg.s, cfg.c, 1),
            "expected " + std::to_string(en_rank(cfg.s, cfg.c, 1)));
  rep.check("euler_characteristic", euler_check(shape, ideal, p.caps.degree),
            "resolution numerator differs from the Hilbert series numerator");
  return rep;
}

Report symbolic(const Params& p) {
  const auto cfg = config(p);
  Report rep("symbolic");
  put_config(rep, p);
  rep.params["l"] = p.l;
  const auto ideal = symbolic_power(cfg, p.l, p.caps);
  const auto a = alpha(ideal);
  const auto w = omega(ideal);
  const auto af = alpha_symbolic_formula(cfg, p.l);
  const auto wf = omega_symbolic_formula(cfg, p.l);

  rep.result["generator_count"] = ideal.size();
  rep.result["generators"] = gen_strings(ideal);
  rep.result["alpha"] = a;
  rep.result["omega"] = w;
  rep.result["alpha_formula"] = af;
  rep.result["omega_formula"] = wf;

  rep.text.push_back("symbolic power s=" + std::to_string(cfg.s) + " c=" + std::to_string(cfg.c) +
                     " l=" + std::to_string(p.l));
  rep.text.push_back("generators (" + std::to_string(ideal.size()) + "): " + join(gen_strings(ideal), ", "));
  rep.text.push_back("alpha: " + std::to_string(a) + " (formula " + std::to_string(af) + ")");
  rep.text.push_back("omega: " + std::to_string(w) + " (formula " + std::to_string(wf) + ")");

  rep.check("alpha_formula", a == af, "alpha " + std::to_string(a) + " != " + std::to_string(af));
  rep.check("omega_formula", w == wf, "omega " + std::to_string(w) + " != " + std::to_string(wf));
  const auto by_components = symbolic_power_by_intersection(cfg, p.l);
  rep.check("component_intersection", ideal == by_components,
            difference_witness(ideal, by_components, "the enumeration", "the component intersection"));
  return rep;
}

Report hvector(const Params& p) {
  const auto cfg = config(p);
  Report rep("hvector");
  put_config(rep, p);
  rep.params["l"] = p.l;
  const auto ideal = p.l == 1 ? skeleton_ideal(cfg) : symbolic_power(cfg, p.l, p.caps);
  const auto hv = h_vector(ideal, cfg.c, p.caps.degree);
  rep.result["h_vector"] = hv.entries;
  rep.result["degree"] = hv.sum();

  rep.text.push_back("h-vector of I^(" + std::to_string(p.l) + ") s=" + std::to_string(cfg.s) +
                     " c=" + std::to_string(cfg.c) + ": " + join(hv.entries, " "));
  rep.text.push_back("degree: " + std::to_string(hv.sum()));

  std::optional<HVector> expected;
  if (p.l == 1) expected = generic_hvector(cfg.s, cfg.c);
  if (p.l == 2 && cfg.c >= 2) expected = ss_hvector_formula(cfg.s, cfg.c);
  if (expected) {
    rep.result["expected"] = expected->entries;
    rep.check(p.l == 1 ? "generic_h_vector" : "symbolic_square_h_vector", hv == *expected,
              "expected " + join(expected->entries, " "));
  }
  // the multiplicity of each c-plane in I^(l) is binom(l+c-1, c)
  const auto expected_degree = binomial(cfg.s, cfg.c) * binomial(p.l + cfg.c - 1, cfg.c);
  rep.check("degree", hv.sum() == expected_degree, "expected " + std::to_string(expected_degree));

  std::ostringstream csv;
  csv << "t,h\n";
  for (std::size_t t = 0; t < hv.entries.size(); ++t) csv << t << "," << hv.entries[t] << "\n";
  rep.csv = csv.str();
  return rep;
}

Report betti(const Params& p) {
  const auto cfg = config(p);
  if (cfg.c < 2) throw UsageError("betti needs 2 <= c <= s-1 (the symbolic square of c = 1 is principal)");
  Report rep("betti");
  put_config(rep, p);
  const auto skel = skeleton_ideal(cfg);
  const auto square = symbolic_power(cfg, 2, p.caps);
  const auto en = en_resolution(cfg.s, cfg.c);
  const auto ss = ss_resolution(cfg.s, cfg.c);
  const auto cone = ss_mapping_cone(cfg.s, cfg.c);

  rep.result["skeleton_resolution"] = shape_json(en);
  rep.result["symbolic_square_resolution"] = shape_json(ss);

  rep.text.push_back("skeleton resolution s=" + std::to_string(cfg.s) + " c=" + std::to_string(cfg.c) + ":");
  for (auto& line : shape_text(en)) rep.text.push_back(std::move(line));
  rep.text.push_back("symbolic square resolution:");
  for (auto& line : shape_text(ss)) rep.text.push_back(std::move(line));

  rep.check("skeleton_euler_characteristic", euler_check(en, skel, p.caps.degree),
            "resolution numerator differs from the Hilbert series numerator");
  rep.check("symbolic_square_euler_characteristic", euler_check(ss, square, p.caps.degree),
            "resolution numerator differs from the Hilbert series numerator");
  rep.check("mapping_cone", cone == ss, "mapping cone ranks differ from the closed form");

  std::map<int, std::int64_t> histogram, f1;
  for (const auto& g : square.gens()) ++histogram[-static_cast<int>(g.degree())];
  for (const auto& [twist, rank] : ss.modules.front()) f1[twist] += rank;
  rep.check("generator_degrees", histogram == f1, "F1 does not match the generator degrees of I^(2)");

  std::ostringstream csv;
  csv << "ideal,i,twist,rank\n";
  auto rows = [&](const char* name, const ResolutionShape& shape) {
    for (std::size_t i = 0; i < shape.modules.size(); ++i)
      for (const auto& [twist, rank] : shape.modules[i]) csv << name << "," << i + 1 << "," << twist << "," << rank << "\n";
  };
  rows("skeleton", en);
  rows("symbolic_square", ss);
  rep.csv = csv.str();
  return rep;
}

Report hb(const Params& p) {
  if (p.m < 2) throw UsageError("hb needs m >= 2");
  const auto report = verify_hb(p.s, p.m, p.caps);
  const auto matrix = hb_matrix(p.s, p.m);
  Report rep("hb");
  rep.params["s"] = p.s;
  rep.params["m"] = p.m;
  rep.result["rows"] = report.rows;
  rep.result["cols"] = report.cols;
  Json rows = Json::array();
  std::vector<std::string> row_text;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < matrix.cols(); ++j) row.push_back(to_string(matrix(i, j)));
    rows.push_back(row);
    row_text.push_back("  [" + join(row, ", ") + "]");
  }
  rep.result["matrix"] = rows;
  std::vector<std::string> minors;
  for (const auto& minor : report.minors) minors.push_back(to_string(minor));
  rep.result["minors"] = minors;
  std::vector<std::string> family;
  for (const auto& t : predicted_minor_family(p.s, p.m)) family.push_back(to_string(t));
  rep.result["predicted_family"] = family;

  rep.text.push_back("Delta_" + std::to_string(p.m) + " for s=" + std::to_string(p.s) + ": " +
                     std::to_string(report.rows) + "x" + std::to_string(report.cols));
  for (auto& line : row_text) rep.text.push_back(std::move(line));
  rep.text.push_back("maximal minors (by deleted row):");
  for (std::size_t i = 0; i < minors.size(); ++i) rep.text.push_back("  " + std::to_string(i) + ": " + minors[i]);

  rep.check("signed_monomial_minors", report.all_signed_monomials, report.failure);
  rep.check("minor_family", report.family_match, report.failure);
  rep.check("symbolic_power_equality", report.ideal_match, report.failure);
  return rep;
}

Report decomp(const Params& p) {
  const auto cfg = config(p);
  Report rep("decomp");
  put_config(rep, p);
  rep.params["l"] = p.l;
  const bool power_ok = verify_power_decomposition(cfg.s, cfg.c, p.l, p.caps);
  const bool sat_ok = verify_saturation(cfg.s, cfg.c, p.l, p.caps);
  const auto pw = power(skeleton_ideal(cfg), p.l);
  const auto rhs = rhs_decomposition(cfg.s, cfg.c, p.l, p.caps);
  const auto sat = saturate(pw, maximal_ideal_power(static_cast<std::size_t>(cfg.s), 1));
  const auto sat_rhs = saturation_rhs(cfg.s, cfg.c, p.l, p.caps);

  rep.result["power_generator_count"] = pw.size();
  rep.result["saturation_generator_count"] = sat.size();
  rep.result["power_equals_intersection"] = power_ok;
  rep.result["saturation_equals_symbolic_intersection"] = sat_ok;

  rep.text.push_back("decomposition s=" + std::to_string(cfg.s) + " c=" + std::to_string(cfg.c) +
                     " l=" + std::to_string(p.l));
  rep.text.push_back("I^l generators: " + std::to_string(pw.size()));
  rep.text.push_back("sat(I^l) generators: " + std::to_string(sat.size()));
  rep.text.push_back("I^l == intersection: " + bool_word(power_ok));
  rep.text.push_back("sat(I^l) == symbolic intersection: " + bool_word(sat_ok));

  rep.check("power_decomposition", power_ok, difference_witness(pw, rhs, "I^l", "the intersection"));
  rep.check("saturation", sat_ok, difference_witness(sat, sat_rhs, "sat(I^l)", "the symbolic intersection"));
  return rep;
}

Report containment(const Params& p) {
  const auto cfg = config(p);
  Report rep("containment");
  put_config(rep, p);
  rep.params["m"] = p.m;
  rep.params["r"] = p.r;
  const bool contained = symbolic_in_power(cfg.s, cfg.c, p.m, p.r, p.caps);
  const Rational ratio(p.m, p.r);
  rep.result["contained"] = contained;
  rep.result["ratio"] = rational_string(ratio);

  rep.text.push_back("I^(" + std::to_string(p.m) + ") in I^" + std::to_string(p.r) + " for s=" +
                     std::to_string(cfg.s) + " c=" + std::to_string(cfg.c) + ": " + bool_word(contained));
  if (!contained) {
    const auto sym = symbolic_power(cfg, p.m, p.caps);
    const auto pw = power(skeleton_ideal(cfg), p.r);
    if (auto g = first_outside(sym, pw)) {
      rep.result["non_member"] = to_string(*g);
      rep.text.push_back("non-member generator: " + to_string(*g));
    }
  }
  const int n_proj = cfg.s - 1;
  if (cfg.c == n_proj - 1 && n_proj >= 3) {
    const bool predicted_not = criterion(n_proj, p.m, p.r);
    const bool floor_not = floor_criterion(n_proj, p.m, p.r);
    rep.result["criterion_predicts_contained"] = !predicted_not;
    rep.result["floor_criterion_predicts_contained"] = !floor_not;
    rep.check("floor_criterion", contained == !floor_not,
              "floor criterion predicts " + std::string(floor_not ? "non-containment" : "containment"));
    rep.check("criterion", contained == !predicted_not,
              "closed-form inequality predicts " + std::string(predicted_not ? "non-containment" : "containment"));
  }
  return rep;
}

Report scan(const Params& p) {
  const auto cfg = config(p);
  Report rep("scan");
  put_config(rep, p);
  rep.params["mmax"] = p.mmax;
  rep.params["rmax"] = p.rmax;
  const auto report = resurgence_scan(cfg.s, cfg.c, p.mmax, p.rmax, p.caps, p.jobs);

  Json cells = Json::array();
  std::ostringstream csv;
  csv << "m,r,contained,ratio_num,ratio_den\n";
  for (const auto& cell : report.cells) {
    cells.push_back({{"m", cell.m}, {"r", cell.r}, {"contained", cell.contained}});
    const Rational q(cell.m, cell.r);
    csv << cell.m << "," << cell.r << "," << (cell.contained ? "true" : "false") << "," << q.numerator() << ","
        << q.denominator() << "\n";
  }
  rep.csv = csv.str();
  rep.result["cells"] = cells;
  rep.result["empirical_sup"] = report.empirical_sup ? Json(rational_string(*report.empirical_sup)) : Json(nullptr);
  rep.result["sup_witness"] =
      report.sup_witness ? Json{{"m", report.sup_witness->m}, {"r", report.sup_witness->r}} : Json(nullptr);
  rep.result["lower_bound"] = rational_string(report.lower_bound);
  rep.result["exact"] = report.exact ? Json(rational_string(*report.exact)) : Json(nullptr);
  rep.result["largest_power_generators"] = report.largest_power_gens;

  rep.text.push_back("containment grid s=" + std::to_string(cfg.s) + " c=" + std::to_string(cfg.c) + " m<=" +
                     std::to_string(p.mmax) + " r<=" + std::to_string(p.rmax) + " (+ contained, . not contained)");
  std::string header = "  m\\r";
  for (int r = 1; r <= p.rmax; ++r) header += " " + std::to_string(r % 10);
  rep.text.push_back(header);
  for (int m = 1; m <= p.mmax; ++m) {
    std::string line = (m < 10 ? "   " : "  ") + std::to_string(m) + " ";
    for (int r = 1; r <= p.rmax; ++r)
      line += report.cells[static_cast<std::size_t>((m - 1) * p.rmax + (r - 1))].contained ? " +" : " .";
    rep.text.push_back(line);
  }
  if (report.empirical_sup) {
    rep.text.push_back("empirical sup of m/r over non-containments: " + rational_string(*report.empirical_sup) +
                       " at (m,r)=(" + std::to_string(report.sup_witness->m) + "," +
                       std::to_string(report.sup_witness->r) + ")");
  } else {
    rep.text.push_back("empirical sup: none (every cell contained)");
  }
  rep.text.push_back("lower bound: " + rational_string(report.lower_bound));
  rep.text.push_back("exact resurgence: " + (report.exact ? rational_string(*report.exact) : std::string("unknown")));

  if (report.criterion_agreement) {
    Json cells_off = Json::array();
    std::vector<std::string> pairs;
    for (const auto& cell : report.criterion_disagreements) {
      cells_off.push_back({{"m", cell.m}, {"r", cell.r}, {"contained", cell.contained}});
      pairs.push_back("(" + std::to_string(cell.m) + "," + std::to_string(cell.r) + ")");
    }
    rep.result["criterion_disagreements"] = cells_off;
    rep.check("floor_criterion_agreement", *report.floor_criterion_agreement, "some cell disagrees");
    rep.check("criterion_agreement", *report.criterion_agreement,
              "closed-form inequality wrong at (m,r) in " + join(pairs, " "));
  }
  if (report.exact && report.empirical_sup)
    rep.check("sup_below_exact", *report.empirical_sup <= *report.exact,
              rational_string(*report.empirical_sup) + " > " + rational_string(*report.exact));
  return rep;
}

Report matroid(const Params& p) {
  const auto cfg = config(p);
  Report rep("matroid");
  put_config(rep, p);
  const auto complex = skeleton_complex(cfg);
  const bool matroid_ok = is_matroid(complex);
  const auto sr = stanley_reisner_ideal(complex);
  const auto skel = skeleton_ideal(cfg);
  rep.result["vertices"] = complex.vertex_count;
  rep.result["facets"] = complex.facets.size();
  rep.result["facet_dimension"] = cfg.s - cfg.c - 1;
  rep.result["is_matroid"] = matroid_ok;
  rep.result["stanley_reisner_generators"] = gen_strings(sr);

  rep.text.push_back("complete " + std::to_string(cfg.s - cfg.c - 1) + "-skeleton on " + std::to_string(cfg.s) +
                     " vertices: " + std::to_string(complex.facets.size()) + " facets");
  rep.text.push_back("matroid: " + bool_word(matroid_ok));
  rep.text.push_back("Stanley-Reisner ideal (" + std::to_string(sr.size()) + "): " + join(gen_strings(sr), ", "));
  rep.check("matroid", matroid_ok, "some vertex restriction is not pure");
  rep.check("stanley_reisner_equals_skeleton", sr == skel,
            difference_witness(sr, skel, "the Stanley-Reisner ideal", "the skeleton ideal"));
  return rep;
}

Report wk(const Params& p) {
  if (p.s < 3) throw UsageError("wk needs s >= 3 (codimension 2 skeleton)");
  if (p.l < 1) throw UsageError("wk needs l >= 1");
  Report rep("wk");
  rep.params["s"] = p.s;
  rep.params["l"] = p.l;
  Json degrees = Json::array();
  for (int k = 0; k <= p.s; ++k) degrees.push_back(wk_multiplicity_degree(p.s, p.l, k));
  rep.result["degrees"] = degrees;
  rep.text.push_back("W_k chain for s=" + std::to_string(p.s) + " l=" + std::to_string(p.l));
  Json steps = Json::array();
  for (int k = 0; k < p.s; ++k) {
    const auto step = wk_step_check(p.s, p.l, k);
    const auto before = wk_ideal(p.s, p.l, k);
    const auto after = wk_ideal(p.s, p.l, k + 1);
    const bool hf = bdg_hf_check(principal(wk_link_monomial(p.s, p.l, k)), before, 1, after, p.caps.degree);
    steps.push_back({{"k", k},
                     {"degree_before", step.degree_before},
                     {"degree_after", step.degree_after},
                     {"ideal_identity", step.ideal_identity},
                     {"degree_recurrence", step.degree_recurrence},
                     {"degree_formula", step.degree_formula},
                     {"chain_inclusion", step.chain_inclusion},
                     {"hilbert_function_identity", hf}});
    rep.text.push_back("  k=" + std::to_string(k) + ": deg " + std::to_string(step.degree_before) + " -> " +
                       std::to_string(step.degree_after) + ", link " + to_string(wk_link_monomial(p.s, p.l, k)));
    const std::string at = "k=" + std::to_string(k);
    rep.check("ideal_identity[" + at + "]", step.ideal_identity, at);
    rep.check("degree_recurrence[" + at + "]", step.degree_recurrence, at);
    rep.check("degree_formula[" + at + "]", step.degree_formula, at);
    rep.check("chain_inclusion[" + at + "]", step.chain_inclusion, at);
    rep.check("hilbert_function_identity[" + at + "]", hf, at);
  }
  rep.result["steps"] = steps;
  return rep;
}

Report export_script(const Params& p) {
  const auto target = parse_cas_target(p.target);
  std::vector<LinearForm> forms;
  if (p.forms) {
    forms = parse_forms(*p.forms);
    if (p.s != 0 && static_cast<int>(forms.size()) != p.s)
      throw UsageError("--s does not match the number of forms given");
  } else if (p.seed) {
    if (p.s < 2) throw UsageError("random forms need --s >= 2");
    forms = random_forms(p.s, p.n.value_or(p.s - 1), *p.seed);
  } else {
    if (p.s < 2) throw UsageError("export needs --s or --forms");
    forms = coordinate_forms(p.s);
  }
  const auto script = export_cas(p.c, p.l, forms, target);
  Report rep("export");
  rep.params["s"] = forms.size();
  rep.params["c"] = p.c;
  rep.params["l"] = p.l;
  rep.params["n"] = forms.front().size() - 1;
  rep.params["target"] = std::string(cas_target_name(target));
  if (p.seed) rep.params["seed"] = *p.seed;
  std::vector<std::string> rendered;
  for (const auto& f : forms) rendered.push_back(render_form(f));
  rep.result["forms"] = rendered;
  rep.result["script"] = script.text;
  rep.warnings = script.warnings;
  rep.script = script.text;
  return rep;
}

}  // namespace starconf::cli

#include "starconf/cas_export.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "starconf/errors.hpp"

namespace starconf {

namespace {

long long parse_integer(std::string_view text) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw UsageError("malformed coefficient '" + std::string(text) + "'");
  return value;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const long long num = parse_integer(trim(text.substr(0, slash)));
  const long long den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw UsageError("zero denominator in coefficient '" + std::string(text) + "'");
  return Rational(num, den);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool proportional(const LinearForm& a, const LinearForm& b) {
  // a and b are proportional iff every 2x2 minor vanishes
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::vector<std::vector<int>> subsets(int s, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  if (k > s) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == s - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

struct Syntax {
  virtual ~Syntax() = default;
  virtual void header(std::ostream& os, int s, int n, int c, int ell) const = 0;
  virtual std::string form_ref(int i) const = 0;
  virtual std::string linear_ideal(const std::vector<int>& subset, int exponent) const = 0;
  virtual std::string maximal_power(int t) const = 0;
  virtual void finish(std::ostream& os, const std::vector<std::string>& components, int ell) const = 0;
};

std::string exponent_suffix(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

struct Macaulay2 final : Syntax {
  void header(std::ostream& os, int s, int n, int c, int ell) const override {
    os << "-- s=" << s << " c=" << c << " l=" << ell << " n=" << n << "\n";
    os << "R = QQ[";
    for (int i = 0; i <= n; ++i) os << (i ? "," : "") << "x" << i;
    os << "];\n";
  }
  std::string form_ref(int i) const override { return "L#" + std::to_string(i); }
  std::string linear_ideal(const std::vector<int>& subset, int exponent) const override {
    std::string out = "ideal(";
    for (std::size_t k = 0; k < subset.size(); ++k) out += (k ? "," : "") + form_ref(subset[k]);
    return out + ")" + exponent_suffix(exponent);
  }
  std::string maximal_power(int t) const override { return "(ideal vars R)^" + std::to_string(t); }
  void finish(std::ostream& os, const std::vector<std::string>& components, int ell) const override {
    os << "P = I^" << ell << ";\n";
    os << "J = intersect(";
    for (std::size_t k = 0; k < components.size(); ++k) os << (k ? ",\n    " : "") << components[k];
    os << ");\n";
    os << "print(P == J);\n";
  }
};

struct Singular final : Syntax {
  void header(std::ostream& os, int s, int n, int c, int ell) const override {
    os << "// s=" << s << " c=" << c << " l=" << ell << " n=" << n << "\n";
    os << "ring R = 0,(";
    for (int i = 0; i <= n; ++i) os << (i ? "," : "") << "x" << i;
    os << "),dp;\n";
  }
  std::string form_ref(int i) const override { return "L" + std::to_string(i); }
  std::string linear_ideal(const std::vector<int>& subset, int exponent) const override {
    std::string out = "ideal(";
    for (std::size_t k = 0; k < subset.size(); ++k) out += (k ? "," : "") + form_ref(subset[k]);
    out += ")";
    return exponent == 1 ? out : out + "^" + std::to_string(exponent);
  }
  std::string maximal_power(int t) const override { return "maxideal(" + std::to_string(t) + ")"; }
  void finish(std::ostream& os, const std::vector<std::string>& components, int ell) const override {
    os << "ideal P = std(I^" << ell << ");\n";
    os << "ideal J = std(intersect(";
    for (std::size_t k = 0; k < components.size(); ++k) os << (k ? ",\n    " : "") << components[k];
    os << "));\n";
    os << "int equal = (size(reduce(P, J)) == 0) && (size(reduce(J, P)) == 0);\n";
    os << "if (equal) { \"true\"; } else { \"false\"; }\n";
    os << "quit;\n";
  }
};

}  // namespace

CasTarget parse_cas_target(std::string_view name) {
  if (name == "m2") return CasTarget::macaulay2;
  if (name == "singular") return CasTarget::singular;
  throw UsageError("unknown export target '" + std::string(name) + "' (expected m2 or singular)");
}

std::string_view cas_target_name(CasTarget target) {
  return target == CasTarget::macaulay2 ? "m2" : "singular";
}

std::vector<LinearForm> parse_forms(std::string_view text) {
  std::vector<LinearForm> forms;
  for (auto part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) throw UsageError("empty linear form in --forms");
    LinearForm form;
    for (auto coef : split(part, ',')) form.push_back(parse_rational(coef));
    if (!forms.empty() && form.size() != forms.front().size())
      throw UsageError("linear forms must all have the same number of coefficients");
    forms.push_back(std::move(form));
  }
  return forms;
}

std::vector<LinearForm> coordinate_forms(int s) {
  if (s < 1) throw UsageError("need at least one form");
  std::vector<LinearForm> forms(static_cast<std::size_t>(s), LinearForm(static_cast<std::size_t>(s), Rational(0)));
  for (std::size_t i = 0; i < forms.size(); ++i) forms[i][i] = 1;
  return forms;
}

std::vector<LinearForm> random_forms(int s, int n, std::uint64_t seed) {
  if (s < 1 || n < 0) throw UsageError("random forms need s >= 1 and n >= 0");
  // The engine's output sequence is fixed by the standard; distributions are
  // not, so reduce raw outputs by hand.
  std::mt19937_64 engine(seed);
  std::vector<LinearForm> forms;
  for (int i = 0; i < s; ++i) {
    LinearForm form;
    for (int j = 0; j <= n; ++j) {
      const auto num = static_cast<long long>(engine() % 19) - 9;
      const auto den = static_cast<long long>(engine() % 5) + 1;
      form.emplace_back(num, den);
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

std::string render_form(const LinearForm& form) {
  std::string out;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const Rational& a = form[i];
    if (a.numerator() == 0) continue;
    const bool negative = a.numerator() < 0;
    const Rational mag = negative ? -a : a;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (mag.denominator() != 1) {
      out += "(" + std::to_string(mag.numerator()) + "/" + std::to_string(mag.denominator()) + ")*";
    } else if (mag.numerator() != 1) {
      out += std::to_string(mag.numerator()) + "*";
    }
    out += "x" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CasScript export_cas(int c, int ell, const std::vector<LinearForm>& forms, CasTarget target) {
  const int s = static_cast<int>(forms.size());
  if (s < 2) throw UsageError("export needs at least two linear forms");
  const int n = static_cast<int>(forms.front().size()) - 1;
  if (n < 1) throw UsageError("linear forms need at least two coefficients");
  if (!(n < s)) throw UsageError("export needs more forms than the projective dimension (s > n)");
  if (c < 1 || c > n) throw UsageError("codimension must satisfy 1 <= c <= n");
  if (ell < 1) throw UsageError("power exponent must be >= 1");

  CasScript script;
  for (int i = 0; i < s; ++i) {
    const auto& f = forms[static_cast<std::size_t>(i)];
    if (static_cast<int>(f.size()) != n + 1) throw UsageError("linear forms must all have the same number of coefficients");
    if (std::all_of(f.begin(), f.end(), [](const Rational& a) { return a.numerator() == 0; }))
      throw UsageError("linear form " + std::to_string(i) + " is zero");
  }
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (proportional(forms[static_cast<std::size_t>(i)], forms[static_cast<std::size_t>(j)]))
        script.warnings.push_back("forms " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are proportional; the hyperplanes do not meet properly");

  const Macaulay2 m2;
  const Singular sing;
  const Syntax& syntax = target == CasTarget::macaulay2 ? static_cast<const Syntax&>(m2) : sing;

  std::ostringstream os;
  syntax.header(os, s, n, c, ell);
  if (target == CasTarget::macaulay2) {
    os << "L = {";
    for (int i = 0; i < s; ++i) os << (i ? ", " : "") << render_form(forms[static_cast<std::size_t>(i)]);
    os << "};\n";
  } else {
    for (int i = 0; i < s; ++i) os << "poly L" << i << " = " << render_form(forms[static_cast<std::size_t>(i)]) << ";\n";
  }

  const auto base = subsets(s, c);
  os << (target == CasTarget::macaulay2 ? "I = intersect(" : "ideal I = intersect(");
  for (std::size_t k = 0; k < base.size(); ++k) os << (k ? ",\n    " : "") << syntax.linear_ideal(base[k], 1);
  os << ");\n";

  std::vector<std::string> components;
  for (int j = 0; j <= n - c; ++j)
    for (const auto& subset : subsets(s, c + j)) components.push_back(syntax.linear_ideal(subset, (j + 1) * ell));
  components.push_back(syntax.maximal_power((s - c + 1) * ell));
  syntax.finish(os, components, ell);

  script.text = os.str();
  return script;
}

}  // namespace starconf

#include "starconf/exponents.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "starconf/errors.hpp"

namespace starconf {

namespace {

void require_same_arity(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw UsageError(std::string(op) + ": arity mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

}  // namespace

ExponentTuple::ExponentTuple(std::size_t arity) : exps_(arity, 0) {
  if (arity == 0) throw UsageError("exponent tuple must have positive arity");
}

ExponentTuple::ExponentTuple(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) throw UsageError("exponent tuple must have positive arity");
  for (Exponent e : exps_) {
    if (e < 0) throw UsageError("exponents must be nonnegative");
  }
}

ExponentTuple::ExponentTuple(std::initializer_list<Exponent> exps)
    : ExponentTuple(std::vector<Exponent>(exps)) {}

ExponentTuple ExponentTuple::unit_vector(std::size_t arity, std::size_t var, Exponent e) {
  if (var >= arity) throw UsageError("variable index out of range");
  ExponentTuple t(arity);
  t.exps_[var] = e;
  return t;
}

std::int64_t ExponentTuple::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

ExponentTuple ExponentTuple::with(std::size_t var, Exponent e) const {
  if (var >= exps_.size()) throw UsageError("variable index out of range");
  if (e < 0) throw UsageError("exponents must be nonnegative");
  ExponentTuple t = *this;
  t.exps_[var] = e;
  return t;
}

std::size_t ExponentTupleHash::operator()(const ExponentTuple& t) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : t.exps()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool grlex_less(const ExponentTuple& a, const ExponentTuple& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  const auto ea = a.exps();
  const auto eb = b.exps();
  const std::size_t n = std::min(ea.size(), eb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return ea.size() < eb.size();
}

bool divides(const ExponentTuple& a, const ExponentTuple& b) {
  require_same_arity(a.arity(), b.arity(), "divides");
  const auto ea = a.exps();
  const auto eb = b.exps();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

namespace {

template <class Op>
ExponentTuple componentwise(const ExponentTuple& a, const ExponentTuple& b, const char* name, Op op) {
  require_same_arity(a.arity(), b.arity(), name);
  std::vector<Exponent> out(a.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return ExponentTuple(std::move(out));
}

}  // namespace

ExponentTuple product(const ExponentTuple& a, const ExponentTuple& b) {
  return componentwise(a, b, "product", [](Exponent x, Exponent y) { return x + y; });
}

ExponentTuple lcm(const ExponentTuple& a, const ExponentTuple& b) {
  return componentwise(a, b, "lcm", [](Exponent x, Exponent y) { return std::max(x, y); });
}

ExponentTuple clamped_quotient(const ExponentTuple& a, const ExponentTuple& b) {
  return componentwise(a, b, "colon", [](Exponent x, Exponent y) { return std::max(x - y, 0); });
}

std::string to_string(const ExponentTuple& t) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (t[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (t[i] > 1) os << '^' << t[i];
  }
  if (first) os << '1';
  return os.str();
}

// --- DivisorIndex ---------------------------------------------------------

struct DivisorIndex::Node {
  // sorted by exponent
  std::vector<std::pair<Exponent, std::unique_ptr<Node>>> children;
};

DivisorIndex::DivisorIndex(std::size_t arity) : arity_(arity), root_(std::make_unique<Node>()) {}
DivisorIndex::~DivisorIndex() = default;
DivisorIndex::DivisorIndex(DivisorIndex&&) noexcept = default;
DivisorIndex& DivisorIndex::operator=(DivisorIndex&&) noexcept = default;

void DivisorIndex::insert(const ExponentTuple& t) {
  require_same_arity(arity_, t.arity(), "DivisorIndex::insert");
  Node* node = root_.get();
  for (std::size_t depth = 0; depth < arity_; ++depth) {
    auto& kids = node->children;
    auto it = std::lower_bound(kids.begin(), kids.end(), t[depth],
                               [](const auto& kid, Exponent e) { return kid.first < e; });
    if (it == kids.end() || it->first != t[depth]) {
      it = kids.emplace(it, t[depth], std::make_unique<Node>());
    }
    node = it->second.get();
  }
}

bool DivisorIndex::has_divisor(const ExponentTuple& t) const {
  require_same_arity(arity_, t.arity(), "DivisorIndex::has_divisor");
  const auto exps = t.exps();
  // iterative DFS; every path of full depth is a stored tuple
  std::vector<std::pair<const Node*, std::size_t>> stack{{root_.get(), 0}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    if (depth == arity_) return true;
    for (const auto& [e, child] : node->children) {
      if (e > exps[depth]) break;
      stack.emplace_back(child.get(), depth + 1);
    }
  }
  return false;
}

// --- MonomialIdeal --------------------------------------------------------

MonomialIdeal minimalize(std::size_t arity, std::vector<ExponentTuple> tuples) {
  if (arity == 0) throw UsageError("monomial ideal must have positive arity");
  for (const auto& t : tuples) require_same_arity(arity, t.arity(), "minimalize");
  std::sort(tuples.begin(), tuples.end(), grlex_less);
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());

  std::vector<ExponentTuple> kept;
  DivisorIndex index(arity);
  for (auto& t : tuples) {
    // everything already kept has degree <= deg t, so only they can divide t
    if (index.has_divisor(t)) continue;
    index.insert(t);
    kept.push_back(std::move(t));
  }
  return MonomialIdeal(arity, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(std::size_t arity) { return minimalize(arity, {}); }

MonomialIdeal MonomialIdeal::unit(std::size_t arity) { return minimalize(arity, {ExponentTuple(arity)}); }

bool member(const ExponentTuple& mu, const MonomialIdeal& ideal) {
  require_same_arity(mu.arity(), ideal.arity(), "member");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const ExponentTuple& g) { return divides(g, mu); });
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "multiply");
  std::vector<ExponentTuple> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) out.push_back(product(g, h));
  }
  return minimalize(a.arity(), std::move(out));
}

MonomialIdeal power(const MonomialIdeal& ideal, int exponent) {
  if (exponent < 0) throw UsageError("power: exponent must be nonnegative");
  MonomialIdeal result = MonomialIdeal::unit(ideal.arity());
  for (int i = 0; i < exponent; ++i) result = multiply(result, ideal);
  return result;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "sum");
  std::vector<ExponentTuple> out(a.gens().begin(), a.gens().end());
  out.insert(out.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.arity(), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "intersect");
  std::vector<ExponentTuple> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) out.push_back(lcm(g, h));
  }
  return minimalize(a.arity(), std::move(out));
}

MonomialIdeal intersect_all(std::size_t arity, std::span<const MonomialIdeal> ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(arity);
  for (const auto& ideal : ideals) acc = intersect(acc, ideal);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentTuple& mu) {
  require_same_arity(ideal.arity(), mu.arity(), "colon");
  std::vector<ExponentTuple> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(clamped_quotient(g, mu));
  return minimalize(ideal.arity(), std::move(out));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "colon_ideal");
  MonomialIdeal acc = MonomialIdeal::unit(a.arity());
  for (const auto& g : b.gens()) acc = intersect(acc, colon(a, g));
  return acc;
}

MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "saturate");
  if (b.is_zero()) throw UsageError("saturate: cannot saturate by the zero ideal");
  MonomialIdeal current = a;
  while (true) {
    MonomialIdeal next = colon_ideal(current, b);
    if (next == current) return current;
    current = std::move(next);
  }
}

bool contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "contains");
  if (a.size() <= 16) {
    return std::all_of(b.gens().begin(), b.gens().end(),
                       [&](const ExponentTuple& g) { return member(g, a); });
  }
  DivisorIndex index(a.arity());
  for (const auto& g : a.gens()) index.insert(g);
  return std::all_of(b.gens().begin(), b.gens().end(),
                     [&](const ExponentTuple& g) { return index.has_divisor(g); });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity(), "equals");
  return a == b;
}

std::int64_t alpha(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("alpha: undefined for the zero ideal");
  // canonical order is degree-first
  return ideal.gens().front().degree();
}

std::int64_t omega(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw DomainError("omega: undefined for the zero ideal");
  return ideal.gens().back().degree();
}

MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t arity) {
  if (arity < ideal.arity()) throw UsageError("embed: target arity smaller than source");
  std::vector<ExponentTuple> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) {
    std::vector<Exponent> e(g.exps().begin(), g.exps().end());
    e.resize(arity, 0);
    out.emplace_back(std::move(e));
  }
  return minimalize(arity, std::move(out));
}

MonomialIdeal principal(const ExponentTuple& t) { return minimalize(t.arity(), {t}); }

MonomialIdeal prime_power(std::size_t arity, std::span<const std::size_t> vars, int e) {
  if (e < 0) throw UsageError("prime_power: exponent must be nonnegative");
  std::vector<ExponentTuple> gens;
  for (std::size_t v : vars) gens.push_back(ExponentTuple::unit_vector(arity, v));
  return power(minimalize(arity, std::move(gens)), e);
}

MonomialIdeal maximal_ideal_power(std::size_t arity, int t) {
  if (t < 0) throw UsageError("maximal_ideal_power: exponent must be nonnegative");
  std::vector<ExponentTuple> gens;
  for_each_monomial_of_degree(arity, t, [&](const ExponentTuple& m) { gens.push_back(m); });
  return minimalize(arity, std::move(gens));
}

void for_each_monomial_of_degree(std::size_t arity, int degree,
                                 const std::function<void(const ExponentTuple&)>& fn) {
  if (arity == 0) throw UsageError("arity must be positive");
  if (degree < 0) return;
  std::vector<Exponent> e(arity, 0);
  // recursive fill, larger leading exponents first
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == arity) {
      e[var] = remaining;
      fn(ExponentTuple(e));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
}

}  // namespace starconf

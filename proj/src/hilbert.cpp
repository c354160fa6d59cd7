#include "starconf/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "starconf/combinatorics.hpp"
#include "starconf/errors.hpp"

namespace starconf {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(IntPoly a, const IntPoly& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  trim(a);
  return a;
}

IntPoly times_one_minus_t_power(const IntPoly& p, std::int64_t d) {
  IntPoly out = p;
  IntPoly neg(p.size());
  std::transform(p.begin(), p.end(), neg.begin(), [](std::int64_t v) { return -v; });
  return add(std::move(out), neg, static_cast<std::size_t>(d));
}

bool pairwise_coprime(std::span<const ExponentTuple> gens, std::size_t arity) {
  std::vector<bool> used(arity, false);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < arity; ++i) {
      if (g[i] == 0) continue;
      if (used[i]) return false;
      used[i] = true;
    }
  }
  return true;
}

IntPoly k_polynomial(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return {1};
  if (ideal.is_unit()) return {};
  const std::size_t n = ideal.arity();
  const auto gens = ideal.gens();
  if (pairwise_coprime(gens, n)) {
    IntPoly k{1};
    for (const auto& g : gens) k = times_one_minus_t_power(k, g.degree());
    return k;
  }
  // pivot on the variable occurring in most generators, at its least
  // positive exponent: I + (p) loses at least two generators, I : p
  // lowers the total exponent
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto count = static_cast<std::size_t>(
        std::count_if(gens.begin(), gens.end(), [&](const ExponentTuple& g) { return g[i] > 0; }));
    if (count > best_count) {
      best = i;
      best_count = count;
    }
  }
  Exponent e = 0;
  for (const auto& g : gens) {
    if (g[best] > 0 && (e == 0 || g[best] < e)) e = g[best];
  }
  const auto pivot = ExponentTuple::unit_vector(n, best, e);
  const IntPoly with_pivot = k_polynomial(sum(ideal, principal(pivot)));
  const IntPoly quotient = k_polynomial(colon(ideal, pivot));
  return add(with_pivot, quotient, static_cast<std::size_t>(e));
}

}  // namespace

IntPoly series_numerator(const MonomialIdeal& ideal, int cap) {
  IntPoly k = k_polynomial(ideal);
  if (!k.empty() && static_cast<int>(k.size()) - 1 > cap) {
    throw ResourceError("series_numerator: numerator degree " + std::to_string(k.size() - 1) + " exceeds cap",
                        cap);
  }
  return k;
}

std::vector<std::int64_t> hilbert_function_values(const MonomialIdeal& ideal, int max_degree) {
  const IntPoly k = k_polynomial(ideal);
  const std::int64_t s = static_cast<std::int64_t>(ideal.arity());
  std::vector<std::int64_t> values(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  for (int d = 0; d <= max_degree; ++d) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < k.size() && static_cast<int>(i) <= d; ++i) {
      v += k[i] * binomial(d - static_cast<std::int64_t>(i) + s - 1, s - 1);
    }
    values[static_cast<std::size_t>(d)] = v;
  }
  return values;
}

std::int64_t hilbert_function(const MonomialIdeal& ideal, int d) {
  if (d < 0) return 0;
  return hilbert_function_values(ideal, d).back();
}

int default_degree_cap(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return 4;
  return static_cast<int>(4 * (1 + omega(ideal)));
}

std::int64_t HVector::sum() const { return std::accumulate(entries.begin(), entries.end(), std::int64_t{0}); }

HVector h_vector(const MonomialIdeal& ideal, int c, int degree_cap) {
  const int s = static_cast<int>(ideal.arity());
  if (c < 0 || c > s) throw UsageError("h_vector: codimension out of range");
  const int cap = degree_cap > 0 ? degree_cap : default_degree_cap(ideal);
  auto values = hilbert_function_values(ideal, cap);
  for (int round = 0; round < s - c; ++round) {
    for (std::size_t i = values.size(); i-- > 1;) values[i] -= values[i - 1];
  }
  if (!values.empty() && values.back() != 0) {
    throw ResourceError("h_vector: entries did not stabilize at zero within the degree cap", cap);
  }
  trim(values);
  return HVector{std::move(values), c};
}

namespace {

void check_cfg(int s, int c) {
  if (s < 2 || c < 1 || c > s - 1) throw UsageError("need s >= 2 and 1 <= c <= s-1");
}

}  // namespace

HVector generic_hvector(int s, int c) {
  check_cfg(s, c);
  HVector h{{}, c};
  for (int t = 0; t <= s - c; ++t) h.entries.push_back(binomial(t + c - 1, c - 1));
  return h;
}

HVector ss_hvector_formula(int s, int c) {
  check_cfg(s, c);
  HVector h{{}, c};
  for (int t = 0; t <= 2 * s - 2 * c + 1; ++t) {
    h.entries.push_back(t <= s - c ? binomial(t + c - 1, c - 1) : binomial(s, c - 1));
  }
  return h;
}

std::int64_t degree(const MonomialIdeal& ideal, int c, int degree_cap) { return h_vector(ideal, c, degree_cap).sum(); }

MonomialIdeal basic_double_link(const MonomialIdeal& i_s, const MonomialIdeal& i_c, const ExponentTuple& f) {
  return sum(multiply(principal(f), i_c), i_s);
}

bool bdg_hf_check(const MonomialIdeal& i_s, const MonomialIdeal& i_c, int d, const MonomialIdeal& i_result,
                  int degree_cap) {
  if (i_s.arity() != i_c.arity() || i_s.arity() != i_result.arity()) {
    throw UsageError("bdg_hf_check: arity mismatch");
  }
  if (d < 0) throw UsageError("bdg_hf_check: degree of F must be nonnegative");
  const int cap = degree_cap > 0 ? degree_cap : default_degree_cap(i_result);
  const auto hs = hilbert_function_values(i_s, cap);
  const auto hc = hilbert_function_values(i_c, cap);
  const auto hr = hilbert_function_values(i_result, cap);
  for (int t = 0; t <= cap; ++t) {
    const std::int64_t shifted_s = t - d >= 0 ? hs[static_cast<std::size_t>(t - d)] : 0;
    const std::int64_t shifted_c = t - d >= 0 ? hc[static_cast<std::size_t>(t - d)] : 0;
    if (hr[static_cast<std::size_t>(t)] != hs[static_cast<std::size_t>(t)] - shifted_s + shifted_c) return false;
  }
  return true;
}

}  // namespace starconf

#pragma once

// Brute-force reference computations used only by tests. Each one follows a
// definition directly and shares no code path with the library routine it
// checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "starconf/exponents.hpp"
#include "starconf/resolution.hpp"

namespace oracle {

using starconf::ExponentTuple;
using starconf::MonomialIdeal;

inline std::vector<ExponentTuple> monomials_of_degree(std::size_t arity, int d) {
  std::vector<ExponentTuple> out;
  std::vector<int> e(arity, 0);
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == arity) {
      e[var] = remaining;
      out.emplace_back(std::vector<std::int32_t>(e.begin(), e.end()));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

inline std::vector<ExponentTuple> monomials_up_to(std::size_t arity, int d) {
  std::vector<ExponentTuple> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = monomials_of_degree(arity, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline bool divides(const ExponentTuple& a, const ExponentTuple& b) {
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool in_ideal(const ExponentTuple& mu, const std::vector<ExponentTuple>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentTuple& g) { return oracle::divides(g, mu); });
}

inline bool in_ideal(const ExponentTuple& mu, const MonomialIdeal& ideal) {
  return in_ideal(mu, std::vector<ExponentTuple>(ideal.gens().begin(), ideal.gens().end()));
}

/// Hilbert function by counting standard monomials.
inline std::int64_t count_standard(const MonomialIdeal& ideal, int d) {
  std::int64_t n = 0;
  for (const auto& mu : monomials_of_degree(ideal.arity(), d)) n += !in_ideal(mu, ideal);
  return n;
}

/// All c-subsets of {0..s-1}.
inline std::vector<std::vector<int>> subsets(int s, int c) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == c) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < s; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// mu in ∩ over c-subsets S of (x_i : i in S)^l: exponent sum over S >= l for every S.
inline bool symbolic_by_components(const ExponentTuple& mu, int s, int c, int ell) {
  for (const auto& comp : subsets(s, c)) {
    int total = 0;
    for (int i : comp) total += mu[static_cast<std::size_t>(i)];
    if (total < ell) return false;
  }
  return true;
}

/// Minimal elements (under divisibility) of a set of monomials, by pairwise test.
inline std::set<ExponentTuple> minimal_elements(const std::vector<ExponentTuple>& xs) {
  std::set<ExponentTuple> out;
  for (const auto& a : xs) {
    bool minimal = true;
    for (const auto& b : xs) {
      if (!(a == b) && oracle::divides(b, a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(a);
  }
  return out;
}

inline std::set<ExponentTuple> gen_set(const MonomialIdeal& ideal) {
  return {ideal.gens().begin(), ideal.gens().end()};
}

/// Determinant by the Leibniz permutation sum.
inline starconf::SparsePoly leibniz_det(const starconf::SymbolicMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  starconf::SparsePoly total(m.arity());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    starconf::SparsePoly term = starconf::SparsePoly::monomial(1, ExponentTuple(m.arity()));
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Random small monomial ideal for property tests.
inline MonomialIdeal random_ideal(std::mt19937& rng, std::size_t arity, int max_gens, int max_exp) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::vector<ExponentTuple> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<std::int32_t> e(arity);
    for (auto& x : e) x = exp(rng);
    gens.emplace_back(std::move(e));
  }
  return starconf::minimalize(arity, std::move(gens));
}

}  // namespace oracle

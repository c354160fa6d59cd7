#include "starconf/star.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "starconf/combinatorics.hpp"
#include "starconf/errors.hpp"

namespace starconf {

StarConfig StarConfig::make(int s, int c, std::optional<int> ambient) {
  if (s < 2) throw UsageError("star configuration needs s >= 2 (got " + std::to_string(s) + ")");
  if (c < 1 || c > s - 1) {
    throw UsageError("codimension must satisfy 1 <= c <= s-1 (got c=" + std::to_string(c) +
                     ", s=" + std::to_string(s) + ")");
  }
  if (ambient && (*ambient < c || *ambient >= s)) {
    throw UsageError("ambient dimension must satisfy c <= n < s");
  }
  return StarConfig{s, c, ambient};
}

namespace {

void validate(const StarConfig& cfg) { StarConfig::make(cfg.s, cfg.c, cfg.ambient); }

void require_positive_power(int ell) {
  if (ell <= 0) throw UsageError("symbolic power exponent must be >= 1");
}

// Calls fn(mask) for every subset of {0..n-1} of size k.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(std::uint32_t{0});
    return;
  }
  std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (mask < limit) {
    fn(mask);
    // Gosper's hack
    const std::uint32_t lowest = mask & (~mask + 1);
    const std::uint32_t ripple = mask + lowest;
    mask = (((ripple ^ mask) >> 2) / lowest) | ripple;
  }
}

std::vector<std::size_t> mask_to_vars(std::uint32_t mask) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) vars.push_back(i);
  }
  return vars;
}

}  // namespace

MonomialIdeal squarefree_ideal(std::size_t arity, std::size_t support, int degree) {
  if (support > arity || arity > 31) throw UsageError("squarefree_ideal: bad support");
  std::vector<ExponentTuple> gens;
  for_each_subset(static_cast<int>(support), degree, [&](std::uint32_t mask) {
    std::vector<Exponent> e(arity, 0);
    for (std::size_t v : mask_to_vars(mask)) e[v] = 1;
    gens.emplace_back(std::move(e));
  });
  return minimalize(arity, std::move(gens));
}

MonomialIdeal skeleton_ideal(const StarConfig& cfg) {
  validate(cfg);
  return squarefree_ideal(cfg.s, cfg.s, cfg.s - cfg.c + 1);
}

bool symbolic_member(const ExponentTuple& mu, const StarConfig& cfg, int ell) {
  require_positive_power(ell);
  if (mu.arity() != static_cast<std::size_t>(cfg.s)) throw UsageError("symbolic_member: arity mismatch");
  std::vector<Exponent> e(mu.exps().begin(), mu.exps().end());
  std::partial_sort(e.begin(), e.begin() + cfg.c, e.end());
  std::int64_t smallest = 0;
  for (int i = 0; i < cfg.c; ++i) smallest += e[i];
  return smallest >= ell;
}

MonomialIdeal symbolic_power(const StarConfig& cfg, int ell, const Caps& caps) {
  validate(cfg);
  require_positive_power(ell);
  std::int64_t total = 1;
  for (int i = 0; i < cfg.s; ++i) {
    total *= ell + 1;
    if (total > caps.enumeration) {
      throw ResourceError("symbolic_power: enumeration over {0.." + std::to_string(ell) + "}^" +
                              std::to_string(cfg.s) + " exceeds cap",
                          caps.enumeration);
    }
  }

  const std::size_t s = static_cast<std::size_t>(cfg.s);
  std::vector<Exponent> e(s, 0);
  std::vector<Exponent> scratch(s);
  auto in_power = [&](const std::vector<Exponent>& v) {
    scratch = v;
    std::partial_sort(scratch.begin(), scratch.begin() + cfg.c, scratch.end());
    std::int64_t acc = 0;
    for (int i = 0; i < cfg.c; ++i) acc += scratch[i];
    return acc >= ell;
  };

  std::vector<ExponentTuple> gens;
  for (std::int64_t n = 0; n < total; ++n) {
    if (in_power(e)) {
      // minimal iff lowering any positive exponent leaves the ideal
      bool minimal = true;
      for (std::size_t i = 0; i < s && minimal; ++i) {
        if (e[i] == 0) continue;
        --e[i];
        minimal = !in_power(e);
        ++e[i];
      }
      if (minimal) gens.emplace_back(e);
    }
    for (std::size_t i = 0; i < s; ++i) {  // odometer increment
      if (++e[i] <= ell) break;
      e[i] = 0;
    }
  }
  return minimalize(s, std::move(gens));
}

MonomialIdeal symbolic_power_by_intersection(const StarConfig& cfg, int ell) {
  validate(cfg);
  require_positive_power(ell);
  std::vector<MonomialIdeal> primes;
  for_each_subset(cfg.s, cfg.c, [&](std::uint32_t mask) {
    const auto vars = mask_to_vars(mask);
    primes.push_back(prime_power(cfg.s, vars, ell));
  });
  return intersect_all(cfg.s, primes);
}

std::int64_t alpha_symbolic_formula(const StarConfig& cfg, int ell) {
  validate(cfg);
  require_positive_power(ell);
  const std::int64_t q = (ell - 1) / cfg.c;
  const std::int64_t r = ell - q * cfg.c;  // 1 <= r <= c
  return (q + 1) * cfg.s - cfg.c + r;
}

std::int64_t omega_symbolic_formula(const StarConfig& cfg, int ell) {
  validate(cfg);
  require_positive_power(ell);
  return std::int64_t{ell} * (cfg.s - cfg.c + 1);
}

bool check_lemma_contain(const StarConfig& cfg) {
  validate(cfg);
  if (cfg.c < 2) throw UsageError("check_lemma_contain requires c >= 2");
  const auto lower = skeleton_ideal(StarConfig::make(cfg.s, cfg.c - 1));
  return contains(symbolic_power(cfg, 2), lower);
}

SimplicialComplex skeleton_complex(const StarConfig& cfg) {
  validate(cfg);
  if (cfg.s > 16) throw ResourceError("skeleton_complex: too many vertices", 16);
  SimplicialComplex complex{cfg.s, {}};
  for_each_subset(cfg.s, cfg.s - cfg.c, [&](std::uint32_t mask) { complex.facets.push_back(mask); });
  return complex;
}

namespace {

void check_complex(const SimplicialComplex& complex) {
  if (complex.vertex_count <= 0) throw UsageError("simplicial complex needs at least one vertex");
  if (complex.vertex_count > 16) throw ResourceError("simplicial complex: too many vertices", 16);
  const std::uint32_t all = (std::uint32_t{1} << complex.vertex_count) - 1;
  for (std::uint32_t f : complex.facets) {
    if ((f & ~all) != 0) throw UsageError("facet uses a vertex outside the vertex set");
  }
}

bool is_face(const SimplicialComplex& complex, std::uint32_t set) {
  return std::any_of(complex.facets.begin(), complex.facets.end(),
                     [&](std::uint32_t f) { return (set & ~f) == 0; });
}

}  // namespace

bool is_matroid(const SimplicialComplex& complex) {
  check_complex(complex);
  const std::uint32_t limit = std::uint32_t{1} << complex.vertex_count;
  std::vector<std::uint32_t> restricted;
  for (std::uint32_t w = 0; w < limit; ++w) {
    restricted.clear();
    for (std::uint32_t f : complex.facets) restricted.push_back(f & w);
    // maximal elements of {F & W} are the facets of the restriction
    int size = -1;
    for (std::size_t i = 0; i < restricted.size(); ++i) {
      const std::uint32_t a = restricted[i];
      bool maximal = true;
      for (std::size_t j = 0; j < restricted.size() && maximal; ++j) {
        const std::uint32_t b = restricted[j];
        if (a != b && (a & ~b) == 0) maximal = false;
      }
      if (!maximal) continue;
      const int pc = std::popcount(a);
      if (size >= 0 && pc != size) return false;
      size = pc;
    }
  }
  return true;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  check_complex(complex);
  const std::size_t n = static_cast<std::size_t>(complex.vertex_count);
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::vector<ExponentTuple> gens;
  for (std::uint32_t set = 0; set < limit; ++set) {
    if (is_face(complex, set)) continue;
    bool minimal = true;
    for (std::uint32_t rest = set; rest != 0 && minimal; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      minimal = is_face(complex, set & ~bit);
    }
    if (!minimal) continue;
    std::vector<Exponent> e(n, 0);
    for (std::size_t v : mask_to_vars(set)) e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimalize(n, std::move(gens));
}

namespace {

void check_wk(int s, int ell, int k) {
  if (s < 2) throw UsageError("W_k: s must be >= 2");
  if (ell < 1) throw UsageError("W_k: l must be >= 1");
  if (k < 0 || k > s) throw UsageError("W_k: k must satisfy 0 <= k <= s");
}

}  // namespace

int wk_pair_exponent(int ell, int k, int i, int j) {
  return ell + (i < k ? 1 : 0) + (j < k ? 1 : 0);
}

MonomialIdeal wk_ideal(int s, int ell, int k) {
  check_wk(s, ell, k);
  std::vector<MonomialIdeal> parts;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      const std::size_t vars[] = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      parts.push_back(prime_power(s, vars, wk_pair_exponent(ell, k, i, j)));
    }
  }
  return intersect_all(s, parts);
}

std::int64_t wk_multiplicity_degree(int s, int ell, int k) {
  check_wk(s, ell, k);
  std::int64_t deg = 0;
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) deg += binomial(wk_pair_exponent(ell, k, i, j) + 1, 2);
  }
  return deg;
}

std::int64_t wk_degree_formula(int s, int ell, int k) {
  check_wk(s, ell, k);
  return binomial(k, 2) * binomial(ell + 3, 2) + std::int64_t{k} * (s - k) * binomial(ell + 2, 2) +
         binomial(s - k, 2) * binomial(ell + 1, 2);
}

ExponentTuple wk_link_monomial(int s, int ell, int k) {
  check_wk(s, ell, k);
  if (k >= s) throw UsageError("W_k link monomial needs k < s");
  std::vector<Exponent> e(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) e[i] = i < k ? ell + 2 : (i == k ? 0 : ell + 1);
  return ExponentTuple(std::move(e));
}

WkStep wk_step_check(int s, int ell, int k) {
  check_wk(s, ell, k);
  if (k >= s) throw UsageError("wk_step_check needs 0 <= k < s");
  const auto before = wk_ideal(s, ell, k);
  const auto after = wk_ideal(s, ell, k + 1);
  const auto linked = sum(multiply(principal(ExponentTuple::unit_vector(s, k)), before),
                          principal(wk_link_monomial(s, ell, k)));
  WkStep step;
  step.ideal_identity = equals(after, linked);
  step.chain_inclusion = contains(before, after);
  step.degree_before = wk_multiplicity_degree(s, ell, k);
  step.degree_after = wk_multiplicity_degree(s, ell, k + 1);
  step.degree_recurrence =
      step.degree_after == step.degree_before + std::int64_t{k} * (ell + 2) + std::int64_t{s - k - 1} * (ell + 1);
  step.degree_formula = step.degree_before == wk_degree_formula(s, ell, k) &&
                        step.degree_after == wk_degree_formula(s, ell, k + 1);
  return step;
}

}  // namespace starconf

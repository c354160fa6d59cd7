#include "starconf/decomp.hpp"

#include <string>

#include "parallel.hpp"
#include "starconf/errors.hpp"
#include "starconf/star.hpp"

namespace starconf {

namespace {

void check_decomp(int s, int c, int ell) {
  StarConfig::make(s, c);
  if (ell < 1) throw UsageError("power exponent must be >= 1");
}

void check_power_cap(int s, int r, const Caps& caps) {
  const int cap = caps.power_cap_for(s);
  if (r > cap) {
    throw ResourceError("ordinary power exponent " + std::to_string(r) + " exceeds cap for s=" + std::to_string(s),
                        cap);
  }
}

std::vector<MonomialIdeal> symbolic_terms(int s, int c, int ell, const Caps& caps) {
  const int n_proj = s - 1;
  std::vector<MonomialIdeal> terms;
  for (int j = 0; c + j <= n_proj; ++j) {
    terms.push_back(symbolic_power(StarConfig::make(s, c + j), (j + 1) * ell, caps));
  }
  return terms;
}

}  // namespace

MonomialIdeal rhs_decomposition(int s, int c, int ell, const Caps& caps) {
  check_decomp(s, c, ell);
  auto terms = symbolic_terms(s, c, ell, caps);
  const int n_proj = s - 1;
  terms.push_back(maximal_ideal_power(s, (n_proj - c + 2) * ell));
  return intersect_all(s, terms);
}

MonomialIdeal saturation_rhs(int s, int c, int ell, const Caps& caps) {
  check_decomp(s, c, ell);
  return intersect_all(s, symbolic_terms(s, c, ell, caps));
}

bool verify_power_decomposition(int s, int c, int ell, const Caps& caps) {
  check_decomp(s, c, ell);
  check_power_cap(s, ell, caps);
  const auto lhs = power(skeleton_ideal(StarConfig::make(s, c)), ell);
  return equals(lhs, rhs_decomposition(s, c, ell, caps));
}

bool verify_saturation(int s, int c, int ell, const Caps& caps) {
  check_decomp(s, c, ell);
  check_power_cap(s, ell, caps);
  const auto lhs = power(skeleton_ideal(StarConfig::make(s, c)), ell);
  const auto saturated = saturate(lhs, maximal_ideal_power(s, 1));
  return equals(saturated, saturation_rhs(s, c, ell, caps));
}

namespace {

bool contained_in(const MonomialIdeal& symbolic, std::int64_t power_alpha, const DivisorIndex& power_index) {
  // a generator below the initial degree of I^r can never be a member
  if (alpha(symbolic) < power_alpha) return false;
  for (const auto& g : symbolic.gens()) {
    if (!power_index.has_divisor(g)) return false;
  }
  return true;
}

DivisorIndex index_of(const MonomialIdeal& ideal) {
  DivisorIndex index(ideal.arity());
  for (const auto& g : ideal.gens()) index.insert(g);
  return index;
}

}  // namespace

bool symbolic_in_power(int s, int c, int m, int r, const Caps& caps) {
  const StarConfig cfg = StarConfig::make(s, c);
  if (m < 1 || r < 1) throw UsageError("containment needs m, r >= 1");
  check_power_cap(s, r, caps);
  const auto ordinary = power(skeleton_ideal(cfg), r);
  return contained_in(symbolic_power(cfg, m, caps), alpha(ordinary), index_of(ordinary));
}

bool criterion(int n_proj, int m, int r) {
  if (n_proj < 3) throw UsageError("criterion requires N >= 3");
  if (m < 1 || r < 1) throw UsageError("criterion needs m, r >= 1");
  const long long n = n_proj;
  const Rational bound = (Rational(3) - Rational(2 * n - 4, (n - 1) * r)) * Rational(n - 1, n + 1);
  return Rational(m, r) < bound;
}

bool floor_criterion(int n_proj, int m, int r) {
  if (n_proj < 3) throw UsageError("criterion requires N >= 3");
  if (m < 1 || r < 1) throw UsageError("criterion needs m, r >= 1");
  const long long n = n_proj;
  if (m < r) return true;
  // not in the symbolic power of the points V_N
  if (Rational(m, r) <= (Rational(2) - Rational(1, r)) * Rational(n - 1, n)) return true;
  // not in M^{3r}
  return m + 2 + 2 * ((m - 1) / (n - 1)) < 3LL * r;
}

std::optional<Rational> rho_exact(int s, int c) {
  StarConfig::make(s, c);
  const long long n = s - 1;
  if (c == 1) return Rational(1);
  if (c == n) return Rational(2 * n, n + 1);
  if (c == n - 1 && n >= 3) return Rational(3 * (n - 1), n + 1);
  return std::nullopt;
}

Rational rho_lower_bound(int s, int c) {
  StarConfig::make(s, c);
  return Rational(static_cast<long long>(c) * (s - c + 1), s);
}

ContainmentReport resurgence_scan(int s, int c, int m_max, int r_max, const Caps& caps, int jobs) {
  const StarConfig cfg = StarConfig::make(s, c);
  if (m_max < 1 || r_max < 1) throw UsageError("scan needs mmax, rmax >= 1");
  check_power_cap(s, r_max, caps);

  ContainmentReport report;
  report.s = s;
  report.c = c;
  report.m_max = m_max;
  report.r_max = r_max;
  report.lower_bound = rho_lower_bound(s, c);
  report.exact = rho_exact(s, c);

  const auto skeleton = skeleton_ideal(cfg);
  std::vector<MonomialIdeal> powers{skeleton};
  for (int r = 2; r <= r_max; ++r) powers.push_back(multiply(powers.back(), skeleton));
  for (const auto& p : powers) report.largest_power_gens = std::max(report.largest_power_gens, p.size());
  std::vector<DivisorIndex> indexes;
  std::vector<std::int64_t> power_alpha;
  for (const auto& p : powers) {
    indexes.push_back(index_of(p));
    power_alpha.push_back(alpha(p));
  }

  std::vector<MonomialIdeal> symbolic(static_cast<std::size_t>(m_max), MonomialIdeal::zero(s));
  detail::parallel_for(symbolic.size(), jobs,
                       [&](std::size_t i) { symbolic[i] = symbolic_power(cfg, static_cast<int>(i) + 1, caps); });

  report.cells.resize(static_cast<std::size_t>(m_max) * r_max);
  detail::parallel_for(report.cells.size(), jobs, [&](std::size_t idx) {
    const int m = static_cast<int>(idx) / r_max + 1;
    const int r = static_cast<int>(idx) % r_max + 1;
    const auto ri = static_cast<std::size_t>(r - 1);
    report.cells[idx] = {m, r, contained_in(symbolic[static_cast<std::size_t>(m - 1)], power_alpha[ri], indexes[ri])};
  });

  const bool use_criterion = c == s - 2 && s - 1 >= 3;
  if (use_criterion) {
    report.criterion_agreement = true;
    report.floor_criterion_agreement = true;
  }
  for (const auto& cell : report.cells) {
    if (!cell.contained) {
      const Rational ratio(cell.m, cell.r);
      if (!report.empirical_sup || ratio > *report.empirical_sup) {
        report.empirical_sup = ratio;
        report.sup_witness = cell;
      }
    }
    if (use_criterion && cell.contained == criterion(s - 1, cell.m, cell.r)) {
      report.criterion_agreement = false;
      if (!report.first_disagreement) report.first_disagreement = cell;
      report.criterion_disagreements.push_back(cell);
    }
    if (use_criterion && cell.contained == floor_criterion(s - 1, cell.m, cell.r))
      report.floor_criterion_agreement = false;
  }
  return report;
}

}  // namespace starconf

#pragma once

// Primary decomposition of powers of monomial star ideals, the saturation
// identity, and the containment problem I^{(m)} in I^r with the resulting
// resurgence. Model: s = N + 1 coordinate hyperplanes of P^N.
//
// Only the monomial-model resurgence is computed. For s hyperplanes in a
// smaller P^n one has rho(general) <= rho(monomial); equality is open.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "starconf/caps.hpp"
#include "starconf/exponents.hpp"

namespace starconf {

using Rational = boost::rational<long long>;

/// I_{V_c}^{(l)} ∩ I_{V_{c+1}}^{(2l)} ∩ ... ∩ I_{V_N}^{((N-c+1)l)} ∩ M^{(N-c+2)l}.
MonomialIdeal rhs_decomposition(int s, int c, int ell, const Caps& caps = {});
/// The same intersection without the M-primary factor.
MonomialIdeal saturation_rhs(int s, int c, int ell, const Caps& caps = {});

/// power(skeleton, l) == rhs_decomposition(s, c, l).
bool verify_power_decomposition(int s, int c, int ell, const Caps& caps = {});
/// saturate(power(skeleton, l), M) == saturation_rhs(s, c, l).
bool verify_saturation(int s, int c, int ell, const Caps& caps = {});

/// I^{(m)} ⊆ I^r, decided generator by generator.
bool symbolic_in_power(int s, int c, int m, int r, const Caps& caps = {});

/// For c = N-1: true iff m/r < (3 - (2N-4)/((N-1)r)) (N-1)/(N+1), the
/// closed-form test for I^{(m)} NOT contained in I^r. Requires N >= 3.
///
/// This inequality replaces alpha(I^{(m)}) = m + 2 + 2 floor((m-1)/(N-1)) by
/// the value without the floor, so it answers "contained" on cells where the
/// floor matters, e.g. (N,m,r) = (3,4,3) and (3,10,7).
bool criterion(int n_proj, int m, int r);

/// For c = N-1: true iff I^{(m)} is NOT contained in I^r, decided by the three
/// conditions m < r, m/r <= (2 - 1/r)(N-1)/N, alpha(I^{(m)}) < 3r, with the
/// floor kept. Requires N >= 3.
bool floor_criterion(int n_proj, int m, int r);

/// 1 for c = 1, 2N/(N+1) for c = N, 3(N-1)/(N+1) for c = N-1 with N >= 3,
/// absent otherwise.
std::optional<Rational> rho_exact(int s, int c);
/// c(s-c+1)/s.
Rational rho_lower_bound(int s, int c);

struct ContainmentCell {
  int m = 0;
  int r = 0;
  bool contained = false;
};

struct ContainmentReport {
  int s = 0, c = 0, m_max = 0, r_max = 0;
  std::vector<ContainmentCell> cells;  ///< m ascending, then r ascending
  std::optional<Rational> empirical_sup;
  std::optional<ContainmentCell> sup_witness;
  Rational lower_bound{0};
  std::optional<Rational> exact;
  /// For c = N-1, N >= 3: whether every cell agrees with criterion().
  std::optional<bool> criterion_agreement;
  std::optional<ContainmentCell> first_disagreement;
  std::vector<ContainmentCell> criterion_disagreements;
  /// For c = N-1, N >= 3: whether every cell agrees with floor_criterion().
  std::optional<bool> floor_criterion_agreement;
  /// Generator count of the largest ordinary power built.
  std::size_t largest_power_gens = 0;
};

/// Full grid 1 <= m <= m_max, 1 <= r <= r_max. Cells are evaluated on up to
/// `jobs` threads; the report does not depend on `jobs`.
ContainmentReport resurgence_scan(int s, int c, int m_max, int r_max, const Caps& caps = {}, int jobs = 1);

}  // namespace starconf

#pragma once

// Star configurations in the monomial model: the s coordinate hyperplanes of
// P^{s-1}. Variable x_i (0-based) stands for the linear form L_{i+1}.

#include <cstdint>
#include <optional>
#include <vector>

#include "starconf/caps.hpp"
#include "starconf/exponents.hpp"

namespace starconf {

struct StarConfig {
  int s = 0;  ///< number of hyperplanes = number of variables
  int c = 0;  ///< codimension, 1 <= c <= s-1
  /// Reported ambient dimension n (c <= n < s). Never used in computation.
  std::optional<int> ambient;

  /// Validated constructor; throws UsageError on out-of-range parameters.
  static StarConfig make(int s, int c, std::optional<int> ambient = std::nullopt);
};

/// Squarefree monomials of the given degree in the first `support` of
/// `arity` variables.
MonomialIdeal squarefree_ideal(std::size_t arity, std::size_t support, int degree);

/// I_{V_c}: all squarefree monomials of degree s-c+1.
MonomialIdeal skeleton_ideal(const StarConfig& cfg);

/// mu is in I^{(l)} iff its c smallest exponents sum to at least l.
bool symbolic_member(const ExponentTuple& mu, const StarConfig& cfg, int ell);

/// Minimal generators of I^{(l)} by threshold enumeration over {0..l}^s.
/// Minimal generators never need an exponent above l.
MonomialIdeal symbolic_power(const StarConfig& cfg, int ell, const Caps& caps = {});

/// Same ideal, built as the intersection of (x_{i_1},...,x_{i_c})^l over all
/// c-subsets. Independent route used for cross-checking.
MonomialIdeal symbolic_power_by_intersection(const StarConfig& cfg, int ell);

/// alpha(I^{(l)}) = (q+1)s - c + r where l = qc + r, 1 <= r <= c.
std::int64_t alpha_symbolic_formula(const StarConfig& cfg, int ell);
/// omega(I^{(l)}) = l(s-c+1).
std::int64_t omega_symbolic_formula(const StarConfig& cfg, int ell);

/// I_{V_{c-1}} is contained in I_{V_c}^{(2)}. Requires c >= 2.
bool check_lemma_contain(const StarConfig& cfg);

/// Facets stored as vertex bitmasks; vertex_count <= 16.
struct SimplicialComplex {
  int vertex_count = 0;
  std::vector<std::uint32_t> facets;
};

/// The complete complex of dimension s-c-1: facets are the (s-c)-subsets.
SimplicialComplex skeleton_complex(const StarConfig& cfg);
/// Every vertex-induced restriction is pure.
bool is_matroid(const SimplicialComplex& complex);
/// Ideal of minimal non-faces.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Exponent attached to the pair-prime (x_i, x_j) in I_{W_k}: l+2 when both
/// indices are < k, l+1 when exactly one is, l otherwise.
int wk_pair_exponent(int ell, int k, int i, int j);

/// I_{W_k} for the codimension-2 skeleton, 0 <= k <= s.
MonomialIdeal wk_ideal(int s, int ell, int k);

/// deg W_k as the sum of binom(a_ij + 1, 2) over pair components.
std::int64_t wk_multiplicity_degree(int s, int ell, int k);
/// binom(k,2)binom(l+3,2) + k(s-k)binom(l+2,2) + binom(s-k,2)binom(l+1,2).
std::int64_t wk_degree_formula(int s, int ell, int k);
/// The monomial x_0^{l+2}...x_{k-1}^{l+2} x_{k+1}^{l+1}...x_{s-1}^{l+1}.
ExponentTuple wk_link_monomial(int s, int ell, int k);

struct WkStep {
  bool ideal_identity = false;     ///< I_{W_{k+1}} == x_k I_{W_k} + (link monomial)
  bool degree_recurrence = false;  ///< deg W_{k+1} == deg W_k + k(l+2) + (s-k-1)(l+1)
  bool degree_formula = false;     ///< closed form matches the multiplicity sum at k and k+1
  bool chain_inclusion = false;    ///< I_{W_{k+1}} is contained in I_{W_k}
  std::int64_t degree_before = 0;
  std::int64_t degree_after = 0;
  bool ok() const { return ideal_identity && degree_recurrence && degree_formula && chain_inclusion; }
};

WkStep wk_step_check(int s, int ell, int k);

}  // namespace starconf

#pragma once

// Betti tables of the skeleton and its symbolic square, and the
// Hilbert-Burch matrices Delta_m of symbolic powers in codimension 2.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starconf/caps.hpp"
#include "starconf/exponents.hpp"
#include "starconf/hilbert.hpp"

namespace starconf {

/// Multivariate polynomial with integer coefficients; no zero terms stored.
class SparsePoly {
 public:
  explicit SparsePoly(std::size_t arity);
  static SparsePoly monomial(std::int64_t coefficient, const ExponentTuple& t);
  static SparsePoly variable(std::size_t arity, std::size_t var);

  std::size_t arity() const noexcept { return arity_; }
  const std::map<ExponentTuple, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// (sign, monomial) when the polynomial is +-1 times a single monomial.
  std::optional<std::pair<int, ExponentTuple>> as_signed_monomial() const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void add_term(const ExponentTuple& t, std::int64_t coefficient);

  std::size_t arity_;
  std::map<ExponentTuple, std::int64_t> terms_;
};

/// Highest degree first, canonical order within a degree, e.g. "-x0*x1^2 + 3*x2".
std::string to_string(const SparsePoly& p);

class SymbolicMatrix {
 public:
  SymbolicMatrix(std::size_t rows, std::size_t cols, std::size_t arity);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t arity() const noexcept { return arity_; }
  const SparsePoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  SparsePoly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_, arity_;
  std::vector<SparsePoly> entries_;
};

/// Graded free resolution shape: modules[i-1] lists (twist, rank) of F_i,
/// twists negative, sorted by decreasing twist. Zero ranks are omitted.
struct ResolutionShape {
  std::vector<std::vector<std::pair<int, std::int64_t>>> modules;
  friend bool operator==(const ResolutionShape&, const ResolutionShape&) = default;
};

/// Eagon-Northcott rank of E^{s,c}_i = binom(s, s-c+i) binom(s-c+i-1, i-1), 1 <= i <= c.
std::int64_t en_rank(int s, int c, int i);
/// Linear resolution of the skeleton: F_i = R(-(s-c+i))^{en_rank(s,c,i)}.
ResolutionShape en_resolution(int s, int c);
/// Closed-form resolution of the symbolic square (2 <= c <= s-1).
ResolutionShape ss_resolution(int s, int c);
/// The same shape assembled as the mapping cone
/// E^{s,c}_i(-(s-c+1)) + E^{s,c-1}_{i-1}(-(s-c+1)) + E^{s,c-1}_i.
ResolutionShape ss_mapping_cone(int s, int c);

/// K-polynomial 1 - F_1 + F_2 - ... of a shape.
IntPoly shape_numerator(const ResolutionShape& shape);
/// shape_numerator(shape) == series_numerator(ideal).
bool euler_check(const ResolutionShape& shape, const MonomialIdeal& ideal, int degree_cap = 0);

/// Delta_m over the s variables h_i = x_{i-1}; m >= 2.
SymbolicMatrix hb_matrix(int s, int m);

/// Exact determinant by memoized cofactor expansion along the sparsest line.
SparsePoly determinant(const SymbolicMatrix& m, int max_dim = 16);
/// Determinants after deleting each row in turn (requires rows == cols + 1).
std::vector<SparsePoly> maximal_minors(const SymbolicMatrix& m, int max_dim = 16);

/// Monomials P^{r-k} P_i^{2k} (m = 2r) or P^{r-k} P_i^{2k+1} (m = 2r+1), sorted canonically.
std::vector<ExponentTuple> predicted_minor_family(int s, int m);

struct HbReport {
  int s = 0, m = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<SparsePoly> minors;   ///< in deleted-row order
  bool all_signed_monomials = false;
  bool family_match = false;        ///< {|minor|} == predicted family as sets
  bool ideal_match = false;         ///< (minors) == I^{(m)} for c = 2
  std::string failure;              ///< first violation, empty when ok
  bool ok() const { return all_signed_monomials && family_match && ideal_match; }
};

HbReport verify_hb(int s, int m, const Caps& caps = {});

}  // namespace starconf

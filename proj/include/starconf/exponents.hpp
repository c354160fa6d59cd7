#pragma once

// Monomials as exponent tuples and monomial ideals as minimal generating
// antichains. Every value carries its arity (number of variables) and every
// binary operation checks it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace starconf {

using Exponent = std::int32_t;

class ExponentTuple {
 public:
  ExponentTuple() = default;
  /// The monomial 1 in `arity` variables.
  explicit ExponentTuple(std::size_t arity);
  explicit ExponentTuple(std::vector<Exponent> exps);
  ExponentTuple(std::initializer_list<Exponent> exps);

  static ExponentTuple unit_vector(std::size_t arity, std::size_t var, Exponent e = 1);

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exps() const noexcept { return exps_; }
  std::int64_t degree() const noexcept;

  /// Copy with exponent of `var` replaced.
  ExponentTuple with(std::size_t var, Exponent e) const;

  /// Lexicographic on the exponent vector; used for ordered containers only.
  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct ExponentTupleHash {
  std::size_t operator()(const ExponentTuple& t) const noexcept;
};

/// Canonical order: by degree, then lexicographically with the larger x0
/// exponent first: x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2.
bool grlex_less(const ExponentTuple& a, const ExponentTuple& b);

/// a | b, i.e. a <= b componentwise. Throws UsageError on arity mismatch.
bool divides(const ExponentTuple& a, const ExponentTuple& b);
ExponentTuple product(const ExponentTuple& a, const ExponentTuple& b);
ExponentTuple lcm(const ExponentTuple& a, const ExponentTuple& b);
/// Componentwise max(a - b, 0): the generator of (a) : b.
ExponentTuple clamped_quotient(const ExponentTuple& a, const ExponentTuple& b);

/// x0^2*x1 style rendering; "1" for the empty monomial.
std::string to_string(const ExponentTuple& t);

class MonomialIdeal;

/// Minimal generators of the ideal spanned by `tuples`. All tuples must have
/// arity `arity`.
MonomialIdeal minimalize(std::size_t arity, std::vector<ExponentTuple> tuples);

class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t arity);
  static MonomialIdeal unit(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const ExponentTuple> gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].degree() == 0; }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t arity, std::vector<ExponentTuple> gens)
      : arity_(arity), gens_(std::move(gens)) {}
  friend MonomialIdeal minimalize(std::size_t, std::vector<ExponentTuple>);

  std::size_t arity_ = 0;
  std::vector<ExponentTuple> gens_;
};

/// Divisor lookup over a fixed set of monomials (a trie keyed by exponents).
class DivisorIndex {
 public:
  explicit DivisorIndex(std::size_t arity);
  ~DivisorIndex();
  DivisorIndex(DivisorIndex&&) noexcept;
  DivisorIndex& operator=(DivisorIndex&&) noexcept;

  void insert(const ExponentTuple& t);
  /// True iff some inserted tuple divides `t`.
  bool has_divisor(const ExponentTuple& t) const;

 private:
  struct Node;
  std::size_t arity_;
  std::unique_ptr<Node> root_;
};

bool member(const ExponentTuple& mu, const MonomialIdeal& ideal);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// power(I, 0) is the unit ideal; negative exponents are a usage error.
MonomialIdeal power(const MonomialIdeal& ideal, int exponent);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// Pairwise fold with minimalization after each step. Empty list gives the unit ideal.
MonomialIdeal intersect_all(std::size_t arity, std::span<const MonomialIdeal> ideals);
MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentTuple& mu);
MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
/// Iterates colon_ideal(., b) to a fixed point. b must be nonzero.
MonomialIdeal saturate(const MonomialIdeal& a, const MonomialIdeal& b);
/// True iff b is a subset of a.
bool contains(const MonomialIdeal& a, const MonomialIdeal& b);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
std::int64_t alpha(const MonomialIdeal& ideal);
std::int64_t omega(const MonomialIdeal& ideal);

/// The same ideal in `arity` >= ideal.arity() variables (new variables last).
MonomialIdeal embed(const MonomialIdeal& ideal, std::size_t arity);
/// Monomial ideal generated by one monomial.
MonomialIdeal principal(const ExponentTuple& t);
/// (x_{v_1}, ..., x_{v_k})^e in `arity` variables.
MonomialIdeal prime_power(std::size_t arity, std::span<const std::size_t> vars, int e);
/// M^t: all monomials of degree t.
MonomialIdeal maximal_ideal_power(std::size_t arity, int t);

/// Calls fn on every monomial of the given degree in `arity` variables, in
/// canonical order.
void for_each_monomial_of_degree(std::size_t arity, int degree,
                                 const std::function<void(const ExponentTuple&)>& fn);

}  // namespace starconf

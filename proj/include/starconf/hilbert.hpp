#pragma once

#include <cstdint>
#include <vector>

#include "starconf/exponents.hpp"

namespace starconf {

/// Dense integer polynomial in one variable t; index = power of t.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
using IntPoly = std::vector<std::int64_t>;

/// Numerator K(t) of the Hilbert series of R/I written over (1-t)^s,
/// computed by pivot recursion K(I) = K(I + (p)) + t^{deg p} K(I : p).
/// Throws ResourceError if deg K exceeds `cap`.
IntPoly series_numerator(const MonomialIdeal& ideal, int cap);

/// Number of degree-d monomials outside I.
std::int64_t hilbert_function(const MonomialIdeal& ideal, int d);
/// hilbert_function for d = 0..max_degree.
std::vector<std::int64_t> hilbert_function_values(const MonomialIdeal& ideal, int max_degree);

/// 4 * (1 + max generator degree); 4 for the zero ideal.
int default_degree_cap(const MonomialIdeal& ideal);

struct HVector {
  std::vector<std::int64_t> entries;
  int codim = 0;
  std::int64_t sum() const;
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// (s-c)-fold first difference of the Hilbert function, with H(-1) = 0.
/// Throws ResourceError when the entries are still nonzero at the degree cap
/// (cap 0 selects default_degree_cap).
HVector h_vector(const MonomialIdeal& ideal, int c, int degree_cap = 0);

/// binom(t+c-1, c-1) for t = 0..s-c.
HVector generic_hvector(int s, int c);
/// h-vector of the symbolic square: generic up to s-c, then binom(s, c-1)
/// through 2s-2c+1.
HVector ss_hvector_formula(int s, int c);

/// Sum of the h-vector; the degree of an unmixed codimension-c scheme.
std::int64_t degree(const MonomialIdeal& ideal, int c, int degree_cap = 0);

/// F * I_C + I_S.
MonomialIdeal basic_double_link(const MonomialIdeal& i_s, const MonomialIdeal& i_c, const ExponentTuple& f);

/// h_{C'}(t) == h_S(t) - h_S(t-d) + h_C(t-d) for t = 0..cap (cap 0 selects
/// default_degree_cap(i_result)).
bool bdg_hf_check(const MonomialIdeal& i_s, const MonomialIdeal& i_c, int d, const MonomialIdeal& i_result,
                  int degree_cap = 0);

}  // namespace starconf

#pragma once

// Scripts for external computer-algebra systems that test whether the power
// of a hyperplane skeleton ideal equals the expected intersection of symbolic
// powers, for arbitrary linear forms over QQ.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starconf/decomp.hpp"

namespace starconf {

enum class CasTarget { macaulay2, singular };

/// "m2" or "singular"; anything else is a UsageError.
CasTarget parse_cas_target(std::string_view name);
std::string_view cas_target_name(CasTarget target);

/// Coefficients of L = a_0 x0 + ... + a_n xn.
using LinearForm = std::vector<Rational>;

/// Parses "a,b,c;d,e,f;..." where each coefficient is an integer or p/q.
/// All forms must have the same nonzero length.
std::vector<LinearForm> parse_forms(std::string_view text);
/// x0, ..., x{s-1}.
std::vector<LinearForm> coordinate_forms(int s);
/// s forms in n+1 variables with small random rational coefficients.
/// Depends only on the seed, not on the platform.
std::vector<LinearForm> random_forms(int s, int n, std::uint64_t seed);

std::string render_form(const LinearForm& form);

struct CasScript {
  std::string text;
  std::vector<std::string> warnings;  ///< e.g. proportional forms
};

/// Script for the skeleton of codimension c cut out by `forms` in P^n
/// (n + 1 = coefficient count), the l-th power, and the intersection
/// I^{(l)} ∩ I_{V_{c+1}}^{(2l)} ∩ ... ∩ I_{V_n}^{((n-c+1)l)} ∩ M^{(s-c+1)l}.
/// The script prints true or false.
CasScript export_cas(int c, int ell, const std::vector<LinearForm>& forms, CasTarget target);

}  // namespace starconf

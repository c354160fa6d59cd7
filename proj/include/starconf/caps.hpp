#pragma once

#include <cstdint>

namespace starconf {

/// Resource limits. Exceeding one raises ResourceError instead of degrading.
struct Caps {
  /// Max tuples scanned when enumerating a symbolic power ({0..l}^s).
  std::int64_t enumeration = 50'000'000;
  /// Max degree used for Hilbert-function work; 0 means 4 * (1 + max generator degree).
  int degree = 0;
  /// Max square size for symbolic determinants.
  int determinant_dim = 16;
  /// Max ordinary-power exponent r; 0 means the per-s default (see default_power_cap).
  int power = 0;

  int power_cap_for(int s) const { return power > 0 ? power : default_power_cap(s); }

  /// 8 for s <= 4, 5 for s = 5, 3 beyond.
  static int default_power_cap(int s) { return s <= 4 ? 8 : (s == 5 ? 5 : 3); }

  /// Defaults overridden by STARCONF_ENUM_CAP, STARCONF_DEGREE_CAP,
  /// STARCONF_DET_CAP and STARCONF_POWER_CAP when set.
  static Caps from_environment();
};

}  // namespace starconf

#include "starconf/caps.hpp"

#include <cstdlib>
#include <string>

#include "starconf/errors.hpp"

namespace starconf {

namespace {

template <class T>
void override_from(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v < 0) throw std::invalid_argument(raw);
    field = static_cast<T>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + ": expected a nonnegative integer, got '" + raw + "'");
  }
}

}  // namespace

Caps Caps::from_environment() {
  Caps caps;
  override_from("STARCONF_ENUM_CAP", caps.enumeration);
  override_from("STARCONF_DEGREE_CAP", caps.degree);
  override_from("STARCONF_DET_CAP", caps.determinant_dim);
  override_from("STARCONF_POWER_CAP", caps.power);
  return caps;
}

}  // namespace starconf

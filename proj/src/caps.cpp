#include "chief/caps.hpp"

#include <cstdlib>
#include <string>

#include "chief/error.hpp"

namespace chief {

namespace {

uint64_t env_u64(const char* name, uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v)
    return fallback;
  try {
    size_t pos = 0;
    unsigned long long parsed = std::stoull(v, &pos);
    if (pos != std::string(v).size())
      throw ParseError("");
    return parsed;
  } catch (...) {
    throw ParseError(std::string("invalid value for ") + name + ": " + v);
  }
}

} // namespace

Caps Caps::from_env() {
  Caps caps;
  caps.max_order = env_u64("CHIEF_MAX_ORDER", caps.max_order);
  caps.lattice_cap = env_u64("CHIEF_LATTICE_CAP", caps.lattice_cap);
  caps.jobs = static_cast<unsigned>(env_u64("CHIEF_JOBS", caps.jobs));
  return caps;
}

Caps& global_caps() {
  static Caps caps;
  return caps;
}

} // namespace chief

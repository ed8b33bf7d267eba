#pragma once

#include <cstdint>

namespace chief {

// Resource limits for the engine. Exceeding a cap raises CapExceeded;
// nothing degrades silently. Environment overrides: CHIEF_MAX_ORDER,
// CHIEF_LATTICE_CAP, CHIEF_JOBS.
struct Caps {
  uint64_t max_order = 2000;        // hard cap on ambient group order
  uint64_t lattice_cap = 500;       // |G| limit for full subgroup enumeration
  uint64_t series_limit = 1000;     // chief-series enumeration bound
  uint64_t sample_threshold = 256;  // lemma tuple count beyond which suites sample
  uint32_t sample_seed = 1;         // seed for lemma-suite sampling
  unsigned jobs = 0;                // campaign worker threads; 0 = hardware

  static Caps from_env();
};

// Process-wide default caps. Configured once at startup (CLI) or by tests;
// campaign workers copy it before going parallel.
Caps& global_caps();

} // namespace chief

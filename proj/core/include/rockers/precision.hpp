#pragma once

namespace rockers {

/// Multiprecision escalation policy shared by certified decimal rendering
/// and certified floors: start at `start_bits`, double until `ceiling_bits`.
struct PrecisionConfig {
  unsigned start_bits = 128;
  unsigned ceiling_bits = 4096;
};

}  // namespace rockers

#pragma once

#include <cstdint>

namespace rrts {

// Per-primitive call counts. These are the hardware-independent currency for
// per-iteration workload comparisons between planners.
struct OpCounters {
  std::uint64_t sample = 0;     // free-space samples drawn
  std::uint64_t nearest = 0;    // nearest-vertex queries
  std::uint64_t near = 0;       // radius queries
  std::uint64_t collision = 0;  // segment collision checks
  std::uint64_t steer = 0;      // straight-line steering evaluations

  std::uint64_t total() const { return sample + nearest + near + collision + steer; }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

}  // namespace rrts

#pragma once

#include <cstdint>
#include <string>

#include "bgp/instance.hpp"

namespace bgp {

// Result of a full solve. The witness always satisfies
// budget_of_ordering(inst, witness) == budget; solvers verify this before
// returning (self-certification).
struct SolveReport {
  Weight budget = 0;
  Ordering witness;
  std::string algorithm;
  std::uint64_t states = 0;  // search nodes / table entries touched
  double elapsed_ms = 0.0;

  // Deterministic rendering: everything except wall-clock time.
  std::string canonical_text(const Instance& inst) const;
};

// Raised when a bounded search cannot settle the answer either way.
struct UnknownResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an instance is handed to a solver for a class it is not in.
struct ClassMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bgp

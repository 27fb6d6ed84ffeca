#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "bgp/bits.hpp"
#include "bgp/instance.hpp"
#include "bgp/report.hpp"
#include "bgp/solvers.hpp"

namespace bgp {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// Evaluates the witness and builds the report from it, so a report can never
// claim a budget its ordering does not achieve.
SolveReport finish_report(const Instance& inst, std::vector<int> order,
                          std::string algorithm, std::uint64_t states,
                          const Stopwatch& sw);

using SeqBlock = Strategy::Block;

// Exchange-optimal order for independent blocks: net-nonpositive blocks
// first by ascending peak, the rest by descending slack (peak - net).
void schedule_blocks(std::vector<SeqBlock>& blocks);

// Connected components of the underlying graph, in first-vertex order.
std::vector<std::pair<Bits, Bits>> components(const Instance& inst);

// Maps a sub-instance order (global indices of sub.inst) back to global
// indices of the parent.
std::vector<int> lift_order(const SubInstance& sub, const Instance& parent,
                            const std::vector<int>& order);

}  // namespace bgp

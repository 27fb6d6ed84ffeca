#include "bgp/report.hpp"

#include <sstream>

namespace bgp {

std::string SolveReport::canonical_text(const Instance& inst) const {
  std::ostringstream out;
  out << "budget " << budget << "\n";
  out << "algorithm " << algorithm << "\n";
  out << "states " << states << "\n";
  if (!witness.seq.empty()) {
    out << "order";
    for (int g : witness.seq) out << ' ' << inst.vertex_id(g);
    out << "\n";
    // recompute from scratch so a wrong witness can never print silently
    try {
      Weight check = budget_of_ordering(inst, witness);
      out << "order-check " << (check == budget ? "ok " : "mismatch ") << check
          << "\n";
    } catch (const std::exception&) {
      out << "order-check invalid\n";
    }
  }
  return out.str();
}

}  // namespace bgp

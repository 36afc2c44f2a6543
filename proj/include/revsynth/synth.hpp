#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "revsynth/boolean.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

enum class GateSet { cnts, mct };
enum class SynthBackend { transform, optimal };

struct SearchConfig {
  int max_depth = 7;
  GateSet gate_set = GateSet::mct;
  /// Optional move-set restriction below gate_set (e.g. Cnot-only searches).
  std::optional<std::vector<GateKind>> allowed_kinds;
};

struct SynthesisResult {
  Circuit circuit;
  SynthBackend backend;
  std::size_t gate_count = 0;
  bool verified = false;
  /// Gates with three or more controls left after lowering to the fixed
  /// library. Always populated; callers targeting pure {Not, Cnot, Toffoli,
  /// Swap} treat a non-empty list as "not realizable without ancilla".
  std::vector<Gate> lowering_report;
};

/// Transformation-based synthesis. Walks input indices in ascending order
/// and picks gates that move the current image of index i onto i without
/// touching smaller, already-fixed indices: multi-control gates conditioned
/// on the current image turn on bits i still needs, then gates conditioned
/// on i turn off surplus bits. The collected gates, in reverse discovery
/// order, realize the map exactly; the result is round-trip verified and
/// never exceeds width * 2^width gates.
SynthesisResult synth_transform(const PermutationMap& p);

/// Minimum-gate-count search by iterative-deepening DFS over a canonical
/// move order (Not by target, Cnot by control/target, Toffoli by controls/
/// target, Swap by line pair, then larger multi-control gates when the gate
/// set allows). Deterministic; immediate gate repetition is pruned since
/// every move is an involution. gate_set cnts requires width <= 3.
SynthesisResult synth_optimal(const PermutationMap& p, const SearchConfig& cfg = {});

/// Total monomial count across outputs; a cheap complexity indicator.
std::size_t pprm_cost(const PprmForm& pprm);

bool verify_circuit(const Circuit& c, const PermutationMap& p);

}  // namespace revsynth

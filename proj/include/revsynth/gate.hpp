#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "revsynth/perm.hpp"

namespace revsynth {

enum class GateKind { Identity, Not, Cnot, Toffoli, Swap, Mct };

/// One reversible gate on 1-based line numbers. Controls are kept sorted
/// ascending; all lines of a gate are distinct. Line range against a circuit
/// width is checked where a width is known (Circuit::add, gate_permutation).
class Gate {
public:
  static Gate identity(int line);
  static Gate not_gate(int target);
  static Gate cnot(int control, int target);
  static Gate toffoli(int control1, int control2, int target);
  static Gate swap(int a, int b);
  /// k >= 0 controls plus one target. Kind stays Mct regardless of k; use
  /// lower_mct_to_cnts to rename small instances into the fixed library.
  static Gate mct(std::vector<int> controls, int target);

  GateKind kind() const noexcept { return kind_; }
  const std::vector<int>& controls() const noexcept { return controls_; }
  int target() const noexcept { return target_; }
  /// Swap only: the two exchanged lines, low first.
  std::pair<int, int> swap_lines() const noexcept { return {target_, other_}; }
  int max_line() const noexcept;

  friend bool operator==(const Gate&, const Gate&) = default;

private:
  Gate(GateKind kind, std::vector<int> controls, int target, int other);

  GateKind kind_;
  std::vector<int> controls_;
  int target_;
  int other_;  // swap partner line; 0 otherwise
};

/// An ordered gate cascade on a fixed number of lines. gates()[0] executes
/// first in time.
class Circuit {
public:
  explicit Circuit(int width);

  void add(Gate g);
  void append(const Circuit& other);

  int width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

private:
  int width_;
  std::vector<Gate> gates_;
};

/// The permutation of the width-line circuit holding g and identity elsewhere.
/// Computed directly on basis indices: the target bit flips iff every control
/// bit is 1; Swap exchanges two bit positions.
PermutationMap gate_permutation(const Gate& g, int width);

/// Left-fold of the gate permutations in execution order.
PermutationMap circuit_permutation(const Circuit& c);

/// Rewrites a Toffoli with controls i, j and target k on arbitrary distinct
/// lines into adjacent-line swaps conjugating one Toffoli on three adjacent
/// lines. The swaps migrate the outer lines next to the middle line and are
/// mirrored afterwards, so the whole circuit equals the plain gate.
Circuit decompose_nonadjacent_toffoli(int i, int j, int k, int width);

/// The three-Cnot realization of Swap(a, b).
Circuit swap_to_cnots(int a, int b, int width);

struct LoweringResult {
  Circuit circuit;
  /// Gates that do not fit the {Not, Cnot, Toffoli, Swap} library (three or
  /// more controls), left in place.
  std::vector<Gate> not_lowered;
};

/// Renames Mct gates with at most two controls into Not/Cnot/Toffoli and
/// reports the rest. Functionally a no-op.
LoweringResult lower_mct_to_cnts(const Circuit& c);

}  // namespace revsynth

#include "revsynth/gate.hpp"

#include <algorithm>
#include <string>

namespace revsynth {

namespace {

void check_line(int line) {
  if (line < 1) {
    fail(Errc::LineOutOfRange, "line numbers are 1-based; got " + std::to_string(line));
  }
}

// Bit position of 1-based line within a width-n index (line 1 = MSB).
std::uint32_t line_mask(int line, int width) { return std::uint32_t{1} << (width - line); }

}  // namespace

Gate::Gate(GateKind kind, std::vector<int> controls, int target, int other)
    : kind_(kind), controls_(std::move(controls)), target_(target), other_(other) {
  check_line(target_);
  for (int c : controls_) check_line(c);
  std::sort(controls_.begin(), controls_.end());
  std::vector<int> all(controls_);
  all.push_back(target_);
  if (other_ != 0) all.push_back(other_);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    fail(Errc::LinesNotDistinct, "gate lines must be pairwise distinct");
  }
}

Gate Gate::identity(int line) { return Gate(GateKind::Identity, {}, line, 0); }

Gate Gate::not_gate(int target) { return Gate(GateKind::Not, {}, target, 0); }

Gate Gate::cnot(int control, int target) {
  return Gate(GateKind::Cnot, {control}, target, 0);
}

Gate Gate::toffoli(int control1, int control2, int target) {
  return Gate(GateKind::Toffoli, {control1, control2}, target, 0);
}

Gate Gate::swap(int a, int b) {
  check_line(a);
  check_line(b);
  return Gate(GateKind::Swap, {}, std::min(a, b), std::max(a, b));
}

Gate Gate::mct(std::vector<int> controls, int target) {
  return Gate(GateKind::Mct, std::move(controls), target, 0);
}

int Gate::max_line() const noexcept {
  int m = std::max(target_, other_);
  for (int c : controls_) m = std::max(m, c);
  return m;
}

Circuit::Circuit(int width) : width_(width) {
  if (width < 1 || width > 30) {
    fail(Errc::WidthTooLarge, "circuit width " + std::to_string(width) + " out of range [1, 30]");
  }
}

void Circuit::add(Gate g) {
  if (g.max_line() > width_) {
    fail(Errc::LineOutOfRange, "gate uses line " + std::to_string(g.max_line()) +
                                   " on a circuit of width " + std::to_string(width_));
  }
  gates_.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.width_ != width_) {
    fail(Errc::WidthMismatch, "cannot append a circuit of different width");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

PermutationMap gate_permutation(const Gate& g, int width) {
  if (g.max_line() > width) {
    fail(Errc::LineOutOfRange, "gate uses line " + std::to_string(g.max_line()) +
                                   " on a register of width " + std::to_string(width));
  }
  const std::size_t n = std::size_t{1} << width;
  std::vector<std::uint32_t> image(n);
  if (g.kind() == GateKind::Swap) {
    const auto [a, b] = g.swap_lines();
    const std::uint32_t ma = line_mask(a, width);
    const std::uint32_t mb = line_mask(b, width);
    for (std::uint32_t i = 0; i < n; ++i) {
      const bool ba = (i & ma) != 0;
      const bool bb = (i & mb) != 0;
      std::uint32_t out = i;
      if (ba != bb) out ^= ma | mb;
      image[i] = out;
    }
    return PermutationMap::from_image(width, std::move(image));
  }
  std::uint32_t control_mask = 0;
  for (int c : g.controls()) control_mask |= line_mask(c, width);
  const std::uint32_t target_mask =
      g.kind() == GateKind::Identity ? 0 : line_mask(g.target(), width);
  for (std::uint32_t i = 0; i < n; ++i) {
    image[i] = ((i & control_mask) == control_mask) ? (i ^ target_mask) : i;
  }
  return PermutationMap::from_image(width, std::move(image));
}

PermutationMap circuit_permutation(const Circuit& c) {
  PermutationMap result = PermutationMap::identity(c.width());
  for (const Gate& g : c.gates()) {
    result = compose(gate_permutation(g, c.width()), result);
  }
  return result;
}

Circuit decompose_nonadjacent_toffoli(int i, int j, int k, int width) {
  check_line(i);
  check_line(j);
  check_line(k);
  if (i == j || j == k || i == k) {
    fail(Errc::LinesNotDistinct, "control and target lines must be distinct");
  }
  if (std::max({i, j, k}) > width) {
    fail(Errc::LineOutOfRange, "lines exceed register width " + std::to_string(width));
  }
  // Controls are interchangeable; route everything toward the middle of the
  // sorted triple so only adjacent gates remain.
  const int c1 = std::min(i, j);
  const int c2 = std::max(i, j);
  int lines[3] = {c1, c2, k};
  std::sort(lines, lines + 3);
  const int lo = lines[0], mid = lines[1], hi = lines[2];

  Circuit circ(width);
  for (int t = lo; t <= mid - 2; ++t) circ.add(Gate::swap(t, t + 1));
  for (int t = hi - 1; t >= mid + 1; --t) circ.add(Gate::swap(t, t + 1));
  // After migration the three values sit on mid-1, mid, mid+1; pick the
  // slot now holding the target.
  if (k == hi) {
    circ.add(Gate::toffoli(mid - 1, mid, mid + 1));
  } else if (k == mid) {
    circ.add(Gate::toffoli(mid - 1, mid + 1, mid));
  } else {
    circ.add(Gate::toffoli(mid, mid + 1, mid - 1));
  }
  for (int t = mid + 1; t <= hi - 1; ++t) circ.add(Gate::swap(t, t + 1));
  for (int t = mid - 2; t >= lo; --t) circ.add(Gate::swap(t, t + 1));
  return circ;
}

Circuit swap_to_cnots(int a, int b, int width) {
  check_line(a);
  check_line(b);
  if (a == b) fail(Errc::LinesNotDistinct, "swap lines must be distinct");
  Circuit circ(width);
  circ.add(Gate::cnot(a, b));
  circ.add(Gate::cnot(b, a));
  circ.add(Gate::cnot(a, b));
  return circ;
}

LoweringResult lower_mct_to_cnts(const Circuit& c) {
  LoweringResult result{Circuit(c.width()), {}};
  for (const Gate& g : c.gates()) {
    if (g.kind() != GateKind::Mct) {
      result.circuit.add(g);
      continue;
    }
    const auto& ctrl = g.controls();
    switch (ctrl.size()) {
      case 0: result.circuit.add(Gate::not_gate(g.target())); break;
      case 1: result.circuit.add(Gate::cnot(ctrl[0], g.target())); break;
      case 2: result.circuit.add(Gate::toffoli(ctrl[0], ctrl[1], g.target())); break;
      default:
        result.circuit.add(g);
        result.not_lowered.push_back(g);
        break;
    }
  }
  return result;
}

}  // namespace revsynth

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "revsynth/gate.hpp"

using namespace revsynth;

namespace {

PermutationMap perm(std::initializer_list<std::uint32_t> one_based) {
  return PermutationMap::from_image_list(std::vector<std::uint32_t>(one_based));
}

}  // namespace

TEST_CASE("gate lines must be distinct") {
  CHECK_THROWS_AS(Gate::cnot(2, 2), Error);
  CHECK_THROWS_AS(Gate::toffoli(1, 3, 3), Error);
  CHECK_THROWS_AS(Gate::mct({1, 2}, 2), Error);
  try {
    Gate::swap(4, 4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LinesNotDistinct);
  }
}

TEST_CASE("controls are stored sorted") {
  CHECK(Gate::toffoli(3, 1, 2) == Gate::toffoli(1, 3, 2));
  CHECK(Gate::mct({4, 2, 1}, 3).controls() == std::vector<int>{1, 2, 4});
}

TEST_CASE("gate_permutation of the library gates") {
  CHECK(gate_permutation(Gate::toffoli(1, 2, 3), 3) == perm({1, 2, 3, 4, 5, 6, 8, 7}));
  CHECK(gate_permutation(Gate::swap(1, 2), 2) == perm({1, 3, 2, 4}));
  CHECK(gate_permutation(Gate::identity(1), 2) == PermutationMap::identity(2));
  CHECK(gate_permutation(Gate::cnot(1, 2), 2) == perm({1, 2, 4, 3}));
  CHECK(gate_permutation(Gate::cnot(2, 1), 2) == perm({1, 4, 3, 2}));
  CHECK(gate_permutation(Gate::not_gate(1), 1) == perm({2, 1}));

  // Trailing identity line = tensor with a one-line identity.
  CHECK(gate_permutation(Gate::toffoli(1, 2, 3), 4) ==
        tensor(gate_permutation(Gate::toffoli(1, 2, 3), 3), PermutationMap::identity(1)));

  try {
    gate_permutation(Gate::cnot(1, 3), 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LineOutOfRange);
  }
}

TEST_CASE("gate_permutation equals the tensor embedding for adjacent blocks") {
  for (int width = 1; width <= 6; ++width) {
    for (int line = 1; line <= width; ++line) {
      // Not at any line.
      PermutationMap expect = gate_permutation(Gate::not_gate(1), 1);
      if (line > 1) expect = tensor(PermutationMap::identity(line - 1), expect);
      if (line < width) expect = tensor(expect, PermutationMap::identity(width - line));
      CHECK(gate_permutation(Gate::not_gate(line), width) == expect);
    }
    for (int i = 1; i + 1 <= width; ++i) {
      // Adjacent two-line blocks: swap and both cnot orientations.
      const Gate blocks2[] = {Gate::swap(1, 2), Gate::cnot(1, 2), Gate::cnot(2, 1)};
      const Gate placed2[] = {Gate::swap(i, i + 1), Gate::cnot(i, i + 1),
                              Gate::cnot(i + 1, i)};
      for (int g = 0; g < 3; ++g) {
        PermutationMap expect = gate_permutation(blocks2[g], 2);
        if (i > 1) expect = tensor(PermutationMap::identity(i - 1), expect);
        if (i + 1 < width) expect = tensor(expect, PermutationMap::identity(width - i - 1));
        CHECK(gate_permutation(placed2[g], width) == expect);
      }
    }
    for (int i = 1; i + 2 <= width; ++i) {
      PermutationMap expect = gate_permutation(Gate::toffoli(1, 2, 3), 3);
      if (i > 1) expect = tensor(PermutationMap::identity(i - 1), expect);
      if (i + 2 < width) expect = tensor(expect, PermutationMap::identity(width - i - 2));
      CHECK(gate_permutation(Gate::toffoli(i, i + 1, i + 2), width) == expect);
    }
  }
}

TEST_CASE("library gates are involutions and control-symmetric") {
  const int width = 4;
  const Gate gates[] = {Gate::not_gate(2),      Gate::cnot(3, 1),
                        Gate::toffoli(1, 3, 4), Gate::swap(2, 4),
                        Gate::mct({1, 2, 3}, 4)};
  for (const Gate& g : gates) {
    const PermutationMap p = gate_permutation(g, width);
    CHECK(compose(p, p) == PermutationMap::identity(width));
  }
  CHECK(gate_permutation(Gate::toffoli(3, 1, 4), width) ==
        gate_permutation(Gate::toffoli(1, 3, 4), width));
}

TEST_CASE("circuit_permutation folds in execution order") {
  CHECK(circuit_permutation(Circuit(2)) == PermutationMap::identity(2));

  Circuit comparator(2);
  comparator.add(Gate::cnot(2, 1));
  comparator.add(Gate::not_gate(1));
  CHECK(circuit_permutation(comparator) == perm({3, 2, 1, 4}));

  Circuit ciw(3);
  ciw.add(Gate::cnot(1, 2));
  CHECK(circuit_permutation(ciw) == perm({1, 2, 3, 4, 7, 8, 5, 6}));

  // Non-commuting pair: not(1) then cnot(1;2) differs from the swapped order.
  Circuit ab(2);
  ab.add(Gate::not_gate(1));
  ab.add(Gate::cnot(1, 2));
  Circuit ba(2);
  ba.add(Gate::cnot(1, 2));
  ba.add(Gate::not_gate(1));
  const PermutationMap pa = gate_permutation(Gate::not_gate(1), 2);
  const PermutationMap pb = gate_permutation(Gate::cnot(1, 2), 2);
  CHECK(circuit_permutation(ab) == compose(pb, pa));
  CHECK(circuit_permutation(ba) == compose(pa, pb));
  CHECK(circuit_permutation(ab) != circuit_permutation(ba));
}

TEST_CASE("circuits reject gates outside their width") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::cnot(1, 3)), Error);
}

TEST_CASE("decompose_nonadjacent_toffoli produces the expected ladders") {
  const Circuit already = decompose_nonadjacent_toffoli(1, 2, 3, 3);
  REQUIRE(already.gates().size() == 1);
  CHECK(already.gates()[0] == Gate::toffoli(1, 2, 3));

  const Circuit one_swap = decompose_nonadjacent_toffoli(1, 2, 4, 4);
  REQUIRE(one_swap.gates().size() == 3);
  CHECK(one_swap.gates()[0] == Gate::swap(3, 4));
  CHECK(one_swap.gates()[1] == Gate::toffoli(1, 2, 3));
  CHECK(one_swap.gates()[2] == Gate::swap(3, 4));

  const Circuit ladder = decompose_nonadjacent_toffoli(1, 3, 5, 5);
  REQUIRE(ladder.gates().size() == 5);
  CHECK(ladder.gates()[0] == Gate::swap(1, 2));
  CHECK(ladder.gates()[1] == Gate::swap(4, 5));
  CHECK(ladder.gates()[2] == Gate::toffoli(2, 3, 4));
  CHECK(ladder.gates()[3] == Gate::swap(4, 5));
  CHECK(ladder.gates()[4] == Gate::swap(1, 2));

  try {
    decompose_nonadjacent_toffoli(2, 2, 4, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LinesNotDistinct);
  }
  try {
    decompose_nonadjacent_toffoli(1, 2, 7, 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LineOutOfRange);
  }
}

TEST_CASE("decompose_nonadjacent_toffoli round-trips exhaustively") {
  for (int width = 3; width <= 6; ++width) {
    for (int i = 1; i <= width; ++i) {
      for (int j = 1; j <= width; ++j) {
        for (int k = 1; k <= width; ++k) {
          if (i == j || j == k || i == k) continue;
          const Circuit c = decompose_nonadjacent_toffoli(i, j, k, width);
          CHECK(circuit_permutation(c) == gate_permutation(Gate::toffoli(i, j, k), width));
          // Only adjacent-line gates, exactly one toffoli.
          int toffolis = 0;
          for (const Gate& g : c.gates()) {
            if (g.kind() == GateKind::Toffoli) {
              ++toffolis;
              CHECK(g.max_line() - std::min(g.controls()[0], std::min(g.controls()[1], g.target())) == 2);
            } else {
              REQUIRE(g.kind() == GateKind::Swap);
              CHECK(g.swap_lines().second - g.swap_lines().first == 1);
            }
          }
          CHECK(toffolis == 1);
        }
      }
    }
  }
}

TEST_CASE("swap_to_cnots realizes the swap") {
  const Circuit c = swap_to_cnots(1, 2, 2);
  REQUIRE(c.gates().size() == 3);
  CHECK(circuit_permutation(c) == perm({1, 3, 2, 4}));
  CHECK(circuit_permutation(c) == gate_permutation(Gate::swap(1, 2), 2));

  // Two independent swaps on four lines.
  Circuit pairs = swap_to_cnots(1, 2, 4);
  pairs.append(swap_to_cnots(3, 4, 4));
  CHECK(circuit_permutation(pairs) ==
        perm({1, 3, 2, 4, 9, 11, 10, 12, 5, 7, 6, 8, 13, 15, 14, 16}));

  CHECK_THROWS_AS(swap_to_cnots(2, 2, 3), Error);
}

TEST_CASE("lower_mct_to_cnts renames small gates and reports the rest") {
  Circuit c(4);
  c.add(Gate::mct({}, 2));
  c.add(Gate::mct({3}, 1));
  c.add(Gate::mct({1, 2}, 4));
  c.add(Gate::mct({1, 2, 3}, 4));
  c.add(Gate::swap(1, 3));

  const LoweringResult lowered = lower_mct_to_cnts(c);
  REQUIRE(lowered.circuit.gates().size() == 5);
  CHECK(lowered.circuit.gates()[0] == Gate::not_gate(2));
  CHECK(lowered.circuit.gates()[1] == Gate::cnot(3, 1));
  CHECK(lowered.circuit.gates()[2] == Gate::toffoli(1, 2, 4));
  CHECK(lowered.circuit.gates()[3] == Gate::mct({1, 2, 3}, 4));
  CHECK(lowered.circuit.gates()[4] == Gate::swap(1, 3));
  REQUIRE(lowered.not_lowered.size() == 1);
  CHECK(lowered.not_lowered[0] == Gate::mct({1, 2, 3}, 4));
  CHECK(circuit_permutation(lowered.circuit) == circuit_permutation(c));
}

TEST_CASE("random circuits match gate-by-gate composition") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int width = 2 + trial % 3;
    Circuit c(width);
    PermutationMap expected = PermutationMap::identity(width);
    std::uniform_int_distribution<int> pick_line(1, width);
    std::uniform_int_distribution<int> pick_kind(0, 2);
    for (int g = 0; g < 8; ++g) {
      const int a = pick_line(rng);
      int b = pick_line(rng);
      while (b == a) b = pick_line(rng);
      Gate gate = Gate::not_gate(a);
      switch (pick_kind(rng)) {
        case 0: gate = Gate::not_gate(a); break;
        case 1: gate = Gate::cnot(a, b); break;
        case 2: gate = Gate::swap(a, b); break;
      }
      c.add(gate);
      expected = compose(gate_permutation(gate, width), expected);
    }
    CHECK(circuit_permutation(c) == expected);
  }
}

#include "revsynth/synth.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace revsynth {

namespace {

std::uint32_t line_mask(int line, int width) { return std::uint32_t{1} << (width - line); }

std::vector<int> mask_to_lines(std::uint32_t mask, int width) {
  std::vector<int> lines;
  for (int line = 1; line <= width; ++line) {
    if (mask & line_mask(line, width)) lines.push_back(line);
  }
  return lines;
}

// Applies a multi-control flip to the output side of the residual map.
void apply_output_gate(std::vector<std::uint32_t>& f, std::uint32_t control_mask,
                       std::uint32_t target_mask) {
  for (std::uint32_t& y : f) {
    if ((y & control_mask) == control_mask) y ^= target_mask;
  }
}

bool kind_allowed(GateKind kind, const SearchConfig& cfg) {
  if (!cfg.allowed_kinds) return true;
  return std::find(cfg.allowed_kinds->begin(), cfg.allowed_kinds->end(), kind) !=
         cfg.allowed_kinds->end();
}

std::vector<Gate> canonical_moves(int width, const SearchConfig& cfg) {
  std::vector<Gate> moves;
  if (kind_allowed(GateKind::Not, cfg)) {
    for (int t = 1; t <= width; ++t) moves.push_back(Gate::not_gate(t));
  }
  if (kind_allowed(GateKind::Cnot, cfg)) {
    for (int c = 1; c <= width; ++c) {
      for (int t = 1; t <= width; ++t) {
        if (t != c) moves.push_back(Gate::cnot(c, t));
      }
    }
  }
  if (kind_allowed(GateKind::Toffoli, cfg)) {
    for (int c1 = 1; c1 <= width; ++c1) {
      for (int c2 = c1 + 1; c2 <= width; ++c2) {
        for (int t = 1; t <= width; ++t) {
          if (t != c1 && t != c2) moves.push_back(Gate::toffoli(c1, c2, t));
        }
      }
    }
  }
  if (kind_allowed(GateKind::Swap, cfg)) {
    for (int a = 1; a <= width; ++a) {
      for (int b = a + 1; b <= width; ++b) moves.push_back(Gate::swap(a, b));
    }
  }
  if (cfg.gate_set == GateSet::mct && kind_allowed(GateKind::Mct, cfg)) {
    // Control sets of size >= 3, in ascending subset order, target last.
    const std::uint32_t n = std::uint32_t{1} << width;
    for (std::uint32_t subset = 0; subset < n; ++subset) {
      if (std::popcount(subset) < 3) continue;
      for (int t = 1; t <= width; ++t) {
        if (subset & line_mask(t, width)) continue;
        moves.push_back(Gate::mct(mask_to_lines(subset, width), t));
      }
    }
  }
  return moves;
}

struct DepthFirstSearch {
  const std::vector<std::vector<std::uint32_t>>& move_maps;
  const std::vector<std::uint32_t>& target;
  std::vector<std::vector<std::uint32_t>> frames;
  std::vector<int> path;

  bool run(const std::vector<std::uint32_t>& start, int depth) {
    frames.assign(depth + 1, std::vector<std::uint32_t>(start.size()));
    frames[0] = start;
    path.clear();
    return dfs(0, depth);
  }

  bool dfs(int level, int remaining) {
    if (remaining == 0) return frames[level] == target;
    const std::vector<std::uint32_t>& cur = frames[level];
    for (std::size_t m = 0; m < move_maps.size(); ++m) {
      if (!path.empty() && path.back() == static_cast<int>(m)) continue;
      std::vector<std::uint32_t>& next = frames[level + 1];
      const std::vector<std::uint32_t>& map = move_maps[m];
      for (std::size_t x = 0; x < cur.size(); ++x) next[x] = map[cur[x]];
      path.push_back(static_cast<int>(m));
      if (dfs(level + 1, remaining - 1)) return true;
      path.pop_back();
    }
    return false;
  }
};

SynthesisResult finish(Circuit raw, SynthBackend backend, const PermutationMap& p) {
  LoweringResult lowered = lower_mct_to_cnts(raw);
  SynthesisResult result{std::move(lowered.circuit), backend, 0, false,
                         std::move(lowered.not_lowered)};
  result.gate_count = result.circuit.gates().size();
  result.verified = verify_circuit(result.circuit, p);
  if (!result.verified) {
    throw std::logic_error("synthesized circuit failed round-trip verification");
  }
  return result;
}

}  // namespace

SynthesisResult synth_transform(const PermutationMap& p) {
  const int n = p.width();
  std::vector<std::uint32_t> f = p.image();
  std::vector<Gate> discovered;

  for (std::uint32_t i = 0; i < f.size(); ++i) {
    if (f[i] != i) {
      // Turn on bits i needs; controls come from the evolving image, which
      // stays >= i, so fixed rows never satisfy them.
      const std::uint32_t missing = i & ~f[i];
      for (int t = 1; t <= n; ++t) {
        const std::uint32_t bit = line_mask(t, n);
        if (!(missing & bit)) continue;
        const std::uint32_t controls = f[i];
        discovered.push_back(Gate::mct(mask_to_lines(controls, n), t));
        apply_output_gate(f, controls, bit);
      }
      // Turn off surplus bits; controls are exactly the bits of i.
      const std::uint32_t surplus = f[i] & ~i;
      for (int t = 1; t <= n; ++t) {
        const std::uint32_t bit = line_mask(t, n);
        if (!(surplus & bit)) continue;
        discovered.push_back(Gate::mct(mask_to_lines(i, n), t));
        apply_output_gate(f, i, bit);
      }
    }
#ifndef NDEBUG
    // Rows up to i stay fixed once handled.
    for (std::uint32_t j = 0; j <= i; ++j) assert(f[j] == j);
#endif
  }

  Circuit raw(n);
  for (auto it = discovered.rbegin(); it != discovered.rend(); ++it) raw.add(*it);
  SynthesisResult result = finish(std::move(raw), SynthBackend::transform, p);
  assert(result.gate_count <= static_cast<std::size_t>(n) * p.size());
  return result;
}

SynthesisResult synth_optimal(const PermutationMap& p, const SearchConfig& cfg) {
  if (cfg.max_depth < 1) {
    fail(Errc::DepthExhausted, "max_depth must be at least 1");
  }
  if (cfg.gate_set == GateSet::cnts && p.width() > 3) {
    fail(Errc::WidthTooLarge,
         "exhaustive search over the fixed library is supported up to 3 lines");
  }
  const std::vector<Gate> moves = canonical_moves(p.width(), cfg);
  std::vector<std::vector<std::uint32_t>> move_maps;
  move_maps.reserve(moves.size());
  for (const Gate& g : moves) move_maps.push_back(gate_permutation(g, p.width()).image());

  const std::vector<std::uint32_t> start = PermutationMap::identity(p.width()).image();
  DepthFirstSearch search{move_maps, p.image(), {}, {}};
  for (int depth = 0; depth <= cfg.max_depth; ++depth) {
    if (!search.run(start, depth)) continue;
    Circuit raw(p.width());
    for (int m : search.path) raw.add(moves[m]);
    return finish(std::move(raw), SynthBackend::optimal, p);
  }
  fail(Errc::DepthExhausted, "no circuit of at most " + std::to_string(cfg.max_depth) +
                                 " gates realizes the map");
}

std::size_t pprm_cost(const PprmForm& pprm) {
  std::size_t total = 0;
  for (const auto& monomials : pprm.outputs) total += monomials.size();
  return total;
}

bool verify_circuit(const Circuit& c, const PermutationMap& p) {
  if (c.width() != p.width()) {
    fail(Errc::WidthMismatch, "circuit width " + std::to_string(c.width()) +
                                  " does not match map width " + std::to_string(p.width()));
  }
  return circuit_permutation(c) == p;
}

}  // namespace revsynth

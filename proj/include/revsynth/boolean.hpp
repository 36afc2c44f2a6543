#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "revsynth/perm.hpp"

namespace revsynth {

/// One product term over n variables. Masks live in basis-index bit space:
/// variable v_i occupies bit (n - i), matching PermutationMap indices, so a
/// cube matches input x iff (x & care) == value. care = 0 is the constant-1
/// cube; value is always a subset of care.
struct Cube {
  std::uint32_t care = 0;
  std::uint32_t value = 0;

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

inline bool cube_matches(const Cube& c, std::uint32_t input) {
  return (input & c.care) == c.value;
}

/// Per-line output columns of a reversible mapping: columns[o][i] is output
/// bit o (MSB first) for input index i.
struct TruthTable {
  int num_inputs = 0;
  int num_outputs = 0;
  std::vector<std::vector<std::uint8_t>> columns;
};

/// Covers combining under OR (SopForm) or under XOR (EsopForm); one cube
/// list per output. PprmForm holds one sorted monomial-mask list per output;
/// an empty mask is the constant-1 term.
struct SopForm {
  int num_inputs = 0;
  std::vector<std::vector<Cube>> outputs;
};

struct EsopForm {
  int num_inputs = 0;
  std::vector<std::vector<Cube>> outputs;
};

struct PprmForm {
  int num_inputs = 0;
  std::vector<std::vector<std::uint32_t>> outputs;
};

TruthTable extract_truth_table(const PermutationMap& p);

/// Prime-irredundant OR cover of one output column: Quine-McCluskey prime
/// generation, then exact minimum cover selection for up to 4 inputs and
/// greedy selection above. Deterministic for a given column.
std::vector<Cube> minimize_sop(const std::vector<std::uint8_t>& column, int num_inputs);
SopForm minimize_sop(const TruthTable& table);

/// Rewrites an OR cover into a functionally equal XOR cover by recursive
/// cube disjointing; pairwise-disjoint input covers pass through unchanged.
std::vector<Cube> sop_to_esop(const std::vector<Cube>& cover);
EsopForm sop_to_esop(const SopForm& sop);

/// Expands complemented literals as v' = v xor 1, multiplies out and cancels
/// duplicate monomials mod 2.
std::vector<std::uint32_t> esop_to_pprm(const std::vector<Cube>& cover, int num_inputs);
PprmForm esop_to_pprm(const EsopForm& esop);

/// Canonical positive-polarity coefficients of one column via the binary
/// Moebius (Reed-Muller) transform.
std::vector<std::uint32_t> pprm_from_bits(const std::vector<std::uint8_t>& column,
                                          int num_inputs);
PprmForm pprm_from_table(const TruthTable& table);

/// Inverse direction: evaluates the monomial set back into a column. The
/// transform is an involution, so this is the same butterfly.
std::vector<std::uint8_t> pprm_to_bits(const std::vector<std::uint32_t>& monomials,
                                       int num_inputs);

std::uint8_t eval_sop(const std::vector<Cube>& cover, std::uint32_t input);
std::uint8_t eval_esop(const std::vector<Cube>& cover, std::uint32_t input);
std::uint8_t eval_pprm(const std::vector<std::uint32_t>& monomials, std::uint32_t input);

/// Karnaugh-style chart of a mapping: rows are labeled by the first
/// ceil(n/2) lines, columns by the rest, both in reflected Gray order; each
/// cell holds the full output register value for that input cell.
struct QkMapView {
  int width = 0;
  int row_bits = 0;
  int col_bits = 0;
  std::vector<std::uint32_t> row_labels;
  std::vector<std::uint32_t> col_labels;
  std::vector<std::vector<std::uint32_t>> cells;  // [row][col] = output index
};

QkMapView render_qkmap(const PermutationMap& p);
std::string qkmap_to_text(const QkMapView& view, const std::vector<std::string>& names = {});

/// Positional default names v1..vn.
std::vector<std::string> default_names(int n);

std::string cube_to_string(const Cube& c, int num_inputs, const std::vector<std::string>& names);
std::string cover_to_string(const std::vector<Cube>& cover, int num_inputs,
                            const std::vector<std::string>& names, char separator);
std::string monomial_to_string(std::uint32_t mask, int num_inputs,
                               const std::vector<std::string>& names);
std::string pprm_to_string(const std::vector<std::uint32_t>& monomials, int num_inputs,
                           const std::vector<std::string>& names);

}  // namespace revsynth

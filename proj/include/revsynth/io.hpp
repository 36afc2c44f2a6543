#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "revsynth/boolean.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

// Text formats. All of them are ASCII and newline-delimited; '#' starts a
// comment that runs to the end of the line. Lines and indices are 1-based in
// the files, 0-based in the library.
//
//   permutation:  "perm <n>" header, then 2^n comma-separated 1-based images.
//   matrix:       dim rows of dim space-separated naturals.
//   circuit:      ".v a,b,c" declaring line names, then one gate per line:
//                 "t1 t" (not), "t2 c,t" (cnot), "t3 c1,c2,t" (toffoli),
//                 "t<k+1> c1,...,ck,t" (multi-control), "s2 a,b" (swap).
//                 File order is execution order.
//   pla:          ".i n" / ".o m" / ".type fr|esop", cube lines of a
//                 {0,1,-} input part plus a {0,1} output part, then ".e".

PermutationMap parse_perm(std::string_view text);
std::string emit_perm(const PermutationMap& p);

PermutationMap parse_matrix(std::string_view text);

/// Accepts either permutation or matrix text: a "perm" header selects the
/// list format, a leading digit the matrix grid.
PermutationMap parse_permutation_auto(std::string_view text);

struct ParsedCircuit {
  Circuit circuit;
  std::vector<std::string> names;
};

ParsedCircuit parse_circuit(std::string_view text);

/// Names default to v1..vn. Identity gates have no mnemonic and are skipped.
std::string emit_circuit(const Circuit& c, const std::vector<std::string>& names = {});

/// One gate as its file line, e.g. "t2 a,b".
std::string format_gate(const Gate& g, const std::vector<std::string>& names);

std::string emit_pla(const SopForm& sop, const std::vector<std::string>& names = {});
std::string emit_pla(const EsopForm& esop, const std::vector<std::string>& names = {});

/// Positive-polarity monomial listing: every input column is '1' (variable
/// in the monomial) or '0' (variable absent) - no dashes and no complemented
/// literals. This is a coefficient table, not a cube cover.
std::string emit_pla(const PprmForm& pprm, const std::vector<std::string>& names = {});

using ParsedPla = std::variant<SopForm, EsopForm>;
ParsedPla parse_pla(std::string_view text);

}  // namespace revsynth

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "revsynth/io.hpp"

using namespace revsynth;

namespace {

PermutationMap perm(std::initializer_list<std::uint32_t> one_based) {
  return PermutationMap::from_image_list(std::vector<std::uint32_t>(one_based));
}

}  // namespace

TEST_CASE("parse_perm reads the header and image list") {
  CHECK(parse_perm("perm 2\n3,2,1,4\n") == perm({3, 2, 1, 4}));
  CHECK(parse_perm("perm 1\n1,2\n") == PermutationMap::identity(1));
  CHECK(parse_perm("# comment\nperm 2\n1, 2, 4, 3\n# trailing\n") == perm({1, 2, 4, 3}));
}

TEST_CASE("parse_perm failures carry a source location") {
  try {
    parse_perm("perm 2\n1,1,3,4\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateImage);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_perm("perm 2\n1,2,x,4\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
  try {
    parse_perm("perm 2\n1,2,3\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LengthMismatch);
  }
  CHECK_THROWS_AS(parse_perm("3,2,1,4\n"), Error);
  CHECK_THROWS_AS(parse_perm(""), Error);
}

TEST_CASE("perm emit/parse round-trip") {
  CHECK(emit_perm(perm({3, 2, 1, 4})) == "perm 2\n3,2,1,4\n");
  std::mt19937 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const PermutationMap p = oracle::random_perm(1 + trial % 4, rng);
    CHECK(parse_perm(emit_perm(p)) == p);
  }
}

TEST_CASE("parse_matrix validates the grid") {
  CHECK(parse_matrix("1 0 0 0\n0 0 1 0\n0 1 0 0\n0 0 0 1\n") == perm({1, 3, 2, 4}));

  std::string id8;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) id8 += (r == c ? "1 " : "0 ");
    id8 += '\n';
  }
  CHECK(parse_matrix(id8) == PermutationMap::identity(3));

  try {
    parse_matrix("2 0\n0 1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonBinaryEntry);
  }
  try {
    parse_matrix("1 1\n0 1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RowOrColumnWeightNotOne);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  try {
    parse_matrix("0 0\n1 1\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RowOrColumnWeightNotOne);
  }
  CHECK_THROWS_AS(parse_matrix("1 0 0\n0 1 0\n0 0 1\n"), Error);
  CHECK_THROWS_AS(parse_matrix("1 0\n0 1 0\n"), Error);
}

TEST_CASE("parse_permutation_auto sniffs the format") {
  CHECK(parse_permutation_auto("perm 2\n3,2,1,4\n") == perm({3, 2, 1, 4}));
  CHECK(parse_permutation_auto("1 0\n0 1\n") == PermutationMap::identity(1));
  CHECK_THROWS_AS(parse_permutation_auto(".v a,b\n"), Error);
}

TEST_CASE("emit_circuit writes one mnemonic per gate") {
  Circuit c(3);
  c.add(Gate::cnot(1, 2));
  CHECK(emit_circuit(c, {"a", "b", "c"}) == ".v a,b,c\nt2 a,b\n");

  Circuit all(4);
  all.add(Gate::not_gate(3));
  all.add(Gate::toffoli(2, 1, 4));
  all.add(Gate::swap(4, 1));
  all.add(Gate::mct({1, 2, 3}, 4));
  CHECK(emit_circuit(all) == ".v v1,v2,v3,v4\nt1 v3\nt3 v1,v2,v4\ns2 v1,v4\nt4 v1,v2,v3,v4\n");
}

TEST_CASE("parse_circuit resolves names and arities") {
  const ParsedCircuit pc = parse_circuit(".v a,b,c\nt2 a,b\nt1 c\ns2 a,c\nt3 a,b,c\n");
  CHECK(pc.names == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(pc.circuit.gates().size() == 4);
  CHECK(pc.circuit.gates()[0] == Gate::cnot(1, 2));
  CHECK(pc.circuit.gates()[1] == Gate::not_gate(3));
  CHECK(pc.circuit.gates()[2] == Gate::swap(1, 3));
  CHECK(pc.circuit.gates()[3] == Gate::toffoli(1, 2, 3));

  const ParsedCircuit mct = parse_circuit(".v a,b,c,d\nt4 a,b,c,d\n");
  CHECK(mct.circuit.gates()[0] == Gate::mct({1, 2, 3}, 4));
}

TEST_CASE("parse_circuit rejects malformed gate lines") {
  try {
    parse_circuit(".v a,b\nt3 a,a,b\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LinesNotDistinct);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_circuit(".v a,b\nq2 a,b\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("unknown mnemonic") != std::string::npos);
  }
  try {
    parse_circuit(".v a,b\nt2 a,z\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("undeclared line name") != std::string::npos);
  }
  try {
    parse_circuit(".v a,b\nt2 a\n");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("expects 2 operands") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_circuit(".v a,a\nt1 a\n"), Error);
  CHECK_THROWS_AS(parse_circuit("t1 a\n"), Error);
}

TEST_CASE("circuit emit/parse round-trip") {
  // The six-cnot four-line double swap round-trips byte-identically.
  Circuit pairs = swap_to_cnots(1, 2, 4);
  pairs.append(swap_to_cnots(3, 4, 4));
  const std::string text = emit_circuit(pairs);
  const ParsedCircuit back = parse_circuit(text);
  CHECK(back.circuit == pairs);
  CHECK(emit_circuit(back.circuit, back.names) == text);

  std::mt19937 rng(52);
  std::uniform_int_distribution<int> pick_kind(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int width = 2 + trial % 3;
    std::uniform_int_distribution<int> pick_line(1, width);
    Circuit c(width);
    for (int g = 0; g < 6; ++g) {
      const int a = pick_line(rng);
      int b = pick_line(rng);
      while (b == a) b = pick_line(rng);
      switch (pick_kind(rng)) {
        case 0: c.add(Gate::not_gate(a)); break;
        case 1: c.add(Gate::cnot(a, b)); break;
        case 2: c.add(Gate::swap(a, b)); break;
        case 3:
          if (width >= 3) {
            int t = pick_line(rng);
            while (t == a || t == b) t = pick_line(rng);
            c.add(Gate::toffoli(a, b, t));
          }
          break;
        case 4:
          if (width >= 4) {
            std::vector<int> controls;
            for (int line = 1; line <= width; ++line) {
              if (line != a) controls.push_back(line);
            }
            c.add(Gate::mct(controls, a));
          }
          break;
      }
    }
    const ParsedCircuit round = parse_circuit(emit_circuit(c));
    CHECK(round.circuit == c);
  }
}

TEST_CASE("sop pla output matches the expected layout") {
  const PermutationMap comparator = perm({3, 2, 1, 4});
  const SopForm sop = minimize_sop(extract_truth_table(comparator));
  const std::string text = emit_pla(sop, {"a", "b"});
  CHECK(text ==
        "# f1 = a'b'+ab\n"
        "# f2 = b\n"
        ".i 2\n"
        ".o 2\n"
        ".type fr\n"
        "00 10\n"
        "11 10\n"
        "-1 01\n"
        ".e\n");
}

TEST_CASE("pprm pla output lists positive monomials without dashes") {
  const PermutationMap comparator = perm({3, 2, 1, 4});
  const PprmForm pprm = pprm_from_table(extract_truth_table(comparator));
  const std::string text = emit_pla(pprm, {"a", "b"});
  CHECK(text ==
        "# f1 = 1^a^b\n"
        "# f2 = b\n"
        ".i 2\n"
        ".o 2\n"
        ".type esop\n"
        "00 10\n"
        "10 10\n"
        "01 10\n"
        "01 01\n"
        ".e\n");
  CHECK(text.find('-') == std::string::npos);
}

TEST_CASE("pla emit/parse round-trip") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const int width = 2 + trial % 3;
    const PermutationMap p = oracle::random_perm(width, rng);
    const SopForm sop = minimize_sop(extract_truth_table(p));
    const ParsedPla round_sop = parse_pla(emit_pla(sop));
    REQUIRE(std::holds_alternative<SopForm>(round_sop));
    CHECK(std::get<SopForm>(round_sop).outputs == sop.outputs);

    const EsopForm esop = sop_to_esop(sop);
    const ParsedPla round_esop = parse_pla(emit_pla(esop));
    REQUIRE(std::holds_alternative<EsopForm>(round_esop));
    CHECK(std::get<EsopForm>(round_esop).outputs == esop.outputs);
  }
}

TEST_CASE("parsers reject junk without crashing") {
  std::mt19937 rng(54);
  const std::string alphabet = "perm 0123456789,.vts#\n abcxyz-'";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 60);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int length = len(rng);
    for (int i = 0; i < length; ++i) text += alphabet[pick(rng)];
    try {
      (void)parse_permutation_auto(text);
    } catch (const Error&) {
    }
    try {
      (void)parse_circuit(text);
    } catch (const Error&) {
    }
    try {
      (void)parse_pla(text);
    } catch (const Error&) {
    }
  }
  CHECK(true);  // reaching here means no crash or foreign exception
}

TEST_CASE("parse_pla rejects inconsistent cubes") {
  CHECK_THROWS_AS(parse_pla(".i 2\n.o 1\n.type fr\n0 1\n.e\n"), Error);
  CHECK_THROWS_AS(parse_pla(".i 2\n.o 1\n.type fr\n00 1\n00 1\n.e\n"), Error);
  CHECK_THROWS_AS(parse_pla(".i 2\n.o 1\n.type fr\n00 1\n"), Error);
  CHECK_THROWS_AS(parse_pla(".i 2\n.o 1\n.type pos\n.e\n"), Error);
}

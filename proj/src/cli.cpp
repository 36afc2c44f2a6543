#include "revsynth/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "revsynth/boolean.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/io.hpp"
#include "revsynth/perm.hpp"
#include "revsynth/synth.hpp"

namespace revsynth {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitExhausted = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_names(const std::string& flag) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= flag.size()) {
    std::size_t end = flag.find(',', pos);
    if (end == std::string::npos) end = flag.size();
    names.push_back(flag.substr(pos, end - pos));
    if (end == flag.size()) break;
    pos = end + 1;
  }
  return names;
}

std::vector<std::string> names_for(const std::string& flag, int width) {
  if (flag.empty()) return default_names(width);
  std::vector<std::string> names = split_names(flag);
  if (static_cast<int>(names.size()) != width) {
    throw UsageError("--names expects " + std::to_string(width) +
                     " comma-separated names for this input");
  }
  return names;
}

std::string to_bits(std::uint32_t value, int bits) {
  std::string s;
  for (int b = bits - 1; b >= 0; --b) s += ((value >> b) & 1) ? '1' : '0';
  return s;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    parse_permutation_auto(read_file(path));
  } catch (const Error& e) {
    if (e.code() == Errc::NonBinaryEntry) {
      out << "condition 1 violated\n";
    } else if (e.code() == Errc::RowOrColumnWeightNotOne ||
               e.code() == Errc::DuplicateImage) {
      out << "condition 2 violated\n";
    }
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitValidation;
  }
  out << "WELL-FORMED\n";
  return kExitOk;
}

int cmd_synth(const PermutationMap& p, const std::string& backend,
              const std::string& gates, int max_depth, const std::string& names_flag,
              std::ostream& out) {
  SearchConfig cfg;
  cfg.max_depth = max_depth;
  cfg.gate_set = gates == "cnts" ? GateSet::cnts : GateSet::mct;
  const SynthesisResult result =
      backend == "optimal" ? synth_optimal(p, cfg) : synth_transform(p);
  const std::vector<std::string> names = names_for(names_flag, p.width());

  out << emit_circuit(result.circuit, names);
  out << "# backend: " << (result.backend == SynthBackend::optimal ? "optimal" : "transform")
      << '\n';
  out << "# gates: " << result.gate_count << '\n';
  out << "# pprm-cost: " << pprm_cost(pprm_from_table(extract_truth_table(p))) << '\n';
  out << "# parity: " << (parity(p) == Parity::odd ? "odd" : "even") << '\n';
  out << "# non-cnts gates: " << result.lowering_report.size() << '\n';
  for (const Gate& g : result.lowering_report) {
    out << "#   " << format_gate(g, names) << '\n';
  }
  if (cfg.gate_set == GateSet::cnts && !result.lowering_report.empty()) {
    out << "# note: not realizable over {not,cnot,toffoli,swap} without ancilla lines\n";
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"reversible-circuit synthesis toolkit"};
  app.name("revsynth");

  std::string input;
  std::string second;
  std::string names_flag;
  std::string backend = "transform";
  std::string gates = "mct";
  int max_depth = 7;
  std::uint64_t state = 0;

  const auto add_input = [&input](CLI::App* sub, const char* desc) {
    sub->add_option("input", input, desc)->required();
  };
  const auto add_names = [&names_flag](CLI::App* sub) {
    sub->add_option("--names", names_flag, "comma-separated line names (default v1..vn)");
  };

  CLI::App* check = app.add_subcommand("check", "validate a matrix or permutation file");
  add_input(check, "matrix or permutation file");

  CLI::App* truthtable =
      app.add_subcommand("truthtable", "print the input/output table of a mapping");
  add_input(truthtable, "matrix or permutation file");

  CLI::App* qkmap = app.add_subcommand("qkmap", "print the Karnaugh-style output chart");
  add_input(qkmap, "matrix or permutation file");
  add_names(qkmap);

  CLI::App* sop = app.add_subcommand("sop", "minimized OR covers as a pla file");
  add_input(sop, "matrix or permutation file");
  add_names(sop);

  CLI::App* esop = app.add_subcommand("esop", "disjoint XOR covers as a pla file");
  add_input(esop, "matrix or permutation file");
  add_names(esop);

  CLI::App* pprm =
      app.add_subcommand("pprm", "canonical positive-polarity monomials as a pla file");
  add_input(pprm, "matrix or permutation file");
  add_names(pprm);

  CLI::App* synth = app.add_subcommand("synth", "synthesize a circuit for a mapping");
  add_input(synth, "matrix or permutation file");
  add_names(synth);
  synth->add_option("--backend", backend, "transform (default) or optimal")
      ->check(CLI::IsMember({"transform", "optimal"}));
  synth->add_option("--gates", gates, "mct (default) or cnts")
      ->check(CLI::IsMember({"cnts", "mct"}));
  synth->add_option("--max-depth", max_depth, "gate-count bound for the optimal backend")
      ->check(CLI::PositiveNumber);

  CLI::App* simulate = app.add_subcommand("simulate", "apply the mapping to one basis state");
  add_input(simulate, "matrix or permutation file");
  simulate->add_option("--state", state, "1-based input basis index")->required();

  CLI::App* verify =
      app.add_subcommand("verify", "check a circuit against a mapping (exit 0 iff equal)");
  add_input(verify, "matrix or permutation file");
  verify->add_option("circuit", second, "circuit file")->required();

  CLI::App* tensor_cmd = app.add_subcommand("tensor", "tensor product of two mappings");
  add_input(tensor_cmd, "first mapping file");
  tensor_cmd->add_option("second", second, "second mapping file")->required();

  CLI::App* compose_cmd =
      app.add_subcommand("compose", "matrix product of two mappings (second acts first)");
  add_input(compose_cmd, "first mapping file");
  compose_cmd->add_option("second", second, "second mapping file")->required();

  CLI::App* parity_cmd = app.add_subcommand("parity", "permutation sign of a mapping");
  add_input(parity_cmd, "matrix or permutation file");

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("revsynth");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(input, out, err);

    if (app.got_subcommand(verify)) {
      const PermutationMap p = parse_permutation_auto(read_file(input));
      const ParsedCircuit pc = parse_circuit(read_file(second));
      const bool ok = verify_circuit(pc.circuit, p);
      out << (ok ? "EQUIVALENT\n" : "NOT EQUIVALENT\n");
      return ok ? kExitOk : kExitMismatch;
    }
    if (app.got_subcommand(tensor_cmd) || app.got_subcommand(compose_cmd)) {
      const PermutationMap a = parse_permutation_auto(read_file(input));
      const PermutationMap b = parse_permutation_auto(read_file(second));
      out << emit_perm(app.got_subcommand(tensor_cmd) ? tensor(a, b) : compose(a, b));
      return kExitOk;
    }

    const PermutationMap p = parse_permutation_auto(read_file(input));
    if (app.got_subcommand(truthtable)) {
      for (std::uint32_t i = 0; i < p.size(); ++i) {
        out << to_bits(i, p.width()) << ' ' << to_bits(p(i), p.width()) << '\n';
      }
      return kExitOk;
    }
    if (app.got_subcommand(qkmap)) {
      out << qkmap_to_text(render_qkmap(p), names_for(names_flag, p.width()));
      return kExitOk;
    }
    if (app.got_subcommand(sop)) {
      out << emit_pla(minimize_sop(extract_truth_table(p)), names_for(names_flag, p.width()));
      return kExitOk;
    }
    if (app.got_subcommand(esop)) {
      out << emit_pla(sop_to_esop(minimize_sop(extract_truth_table(p))),
                      names_for(names_flag, p.width()));
      return kExitOk;
    }
    if (app.got_subcommand(pprm)) {
      out << emit_pla(pprm_from_table(extract_truth_table(p)),
                      names_for(names_flag, p.width()));
      return kExitOk;
    }
    if (app.got_subcommand(synth)) {
      return cmd_synth(p, backend, gates, max_depth, names_flag, out);
    }
    if (app.got_subcommand(simulate)) {
      if (state < 1 || state > p.size()) {
        fail(Errc::IndexOutOfRange, "--state must be in [1, " + std::to_string(p.size()) + "]");
      }
      const PureState result = apply(p, PureState(p.width(), static_cast<std::uint32_t>(state - 1)));
      out << result.index + 1 << '\n';
      return kExitOk;
    }
    if (app.got_subcommand(parity_cmd)) {
      out << (parity(p) == Parity::odd ? "odd" : "even") << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::DepthExhausted ? kExitExhausted : kExitValidation;
  }
  err << "error: Usage: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace revsynth

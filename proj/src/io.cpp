#include "revsynth/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace revsynth {

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped, trimmed
};

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string body = strip(raw);
    if (!body.empty()) lines.push_back(Line{number, std::move(body)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

struct Token {
  std::string text;
  int column;  // 1-based within the stripped line
};

std::vector<Token> split(const std::string& line, char delim) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t end = line.find(delim, pos);
    if (end == std::string::npos) end = line.size();
    const std::string piece = strip(std::string_view(line).substr(pos, end - pos));
    tokens.push_back(Token{piece, static_cast<int>(pos) + 1});
    if (end == line.size()) break;
    pos = end + 1;
  }
  return tokens;
}

std::vector<Token> split_whitespace(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    tokens.push_back(Token{line.substr(pos, end - pos), static_cast<int>(pos) + 1});
    pos = end;
  }
  return tokens;
}

[[noreturn]] void parse_fail(int line, int column, const std::string& what) {
  fail(Errc::ParseError, "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what);
}

std::uint64_t parse_number(const Token& tok, int line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size()) {
    parse_fail(line, tok.column, "expected a number, got '" + tok.text + "'");
  }
  return value;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::vector<std::string> resolve_names(const std::vector<std::string>& names, int width) {
  if (names.empty()) return default_names(width);
  if (static_cast<int>(names.size()) != width) {
    fail(Errc::LengthMismatch, "expected " + std::to_string(width) + " line names, got " +
                                   std::to_string(names.size()));
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_name(n)) fail(Errc::ParseError, "invalid line name '" + n + "'");
    if (!seen.insert(n).second) fail(Errc::ParseError, "duplicate line name '" + n + "'");
  }
  return names;
}

}  // namespace

PermutationMap parse_perm(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) parse_fail(1, 1, "empty input");
  const std::vector<Token> header = split_whitespace(lines[0].text);
  if (header.size() != 2 || header[0].text != "perm") {
    parse_fail(lines[0].number, header.empty() ? 1 : header[0].column,
               "expected header 'perm <n>'");
  }
  const std::uint64_t width = parse_number(header[1], lines[0].number);
  if (width < 1 || width > 30) {
    parse_fail(lines[0].number, header[1].column, "width out of range [1, 30]");
  }
  if (lines.size() < 2) parse_fail(lines[0].number, 1, "missing image list");
  if (lines.size() > 2) parse_fail(lines[2].number, 1, "unexpected extra line");

  std::vector<std::uint32_t> entries;
  for (const Token& tok : split(lines[1].text, ',')) {
    if (tok.text.empty()) parse_fail(lines[1].number, tok.column, "empty entry");
    const std::uint64_t v = parse_number(tok, lines[1].number);
    if (v > 0xffffffffu) parse_fail(lines[1].number, tok.column, "entry too large");
    entries.push_back(static_cast<std::uint32_t>(v));
  }
  if (entries.size() != (std::size_t{1} << width)) {
    fail(Errc::LengthMismatch, "line " + std::to_string(lines[1].number) + ": " +
                                   std::to_string(entries.size()) +
                                   " entries for width " + std::to_string(width) +
                                   " (expected " +
                                   std::to_string(std::size_t{1} << width) + ")");
  }
  try {
    return PermutationMap::from_image_list(entries);
  } catch (const Error& e) {
    throw Error(e.code(), "line " + std::to_string(lines[1].number) + ": " + e.what());
  }
}

std::string emit_perm(const PermutationMap& p) {
  std::ostringstream out;
  out << "perm " << p.width() << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out << ',';
    out << p(static_cast<std::uint32_t>(i)) + 1;
  }
  out << '\n';
  return out.str();
}

PermutationMap parse_matrix(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) parse_fail(1, 1, "empty input");
  std::vector<std::vector<std::uint64_t>> rows;
  for (const Line& line : lines) {
    std::vector<std::uint64_t> row;
    for (const Token& tok : split_whitespace(line.text)) {
      row.push_back(parse_number(tok, line.number));
    }
    rows.push_back(std::move(row));
  }
  const std::size_t dim = rows.size();
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) {
      parse_fail(lines[r].number, 1,
                 "row has " + std::to_string(rows[r].size()) + " entries, expected " +
                     std::to_string(dim) + " for a square matrix");
    }
  }
  DenseBinaryMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m.set(r, c, rows[r][c]);
  }
  return validate_dense(m);
}

PermutationMap parse_permutation_auto(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) parse_fail(1, 1, "empty input");
  const std::vector<Token> head = split_whitespace(lines[0].text);
  if (!head.empty() && head[0].text == "perm") return parse_perm(text);
  if (!head.empty() && std::isdigit(static_cast<unsigned char>(head[0].text[0]))) {
    return parse_matrix(text);
  }
  parse_fail(lines[0].number, 1, "expected a 'perm <n>' header or a matrix row");
}

ParsedCircuit parse_circuit(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) parse_fail(1, 1, "empty input");
  const std::vector<Token> head = split_whitespace(lines[0].text);
  if (head.empty() || head[0].text != ".v") {
    parse_fail(lines[0].number, 1, "expected '.v <name,...>' declaration");
  }
  std::vector<std::string> names;
  const std::string rest = strip(std::string_view(lines[0].text).substr(2));
  for (const Token& tok : split(rest, ',')) {
    if (!valid_name(tok.text)) {
      parse_fail(lines[0].number, tok.column, "invalid line name '" + tok.text + "'");
    }
    if (std::find(names.begin(), names.end(), tok.text) != names.end()) {
      parse_fail(lines[0].number, tok.column, "duplicate line name '" + tok.text + "'");
    }
    names.push_back(tok.text);
  }

  Circuit circuit(static_cast<int>(names.size()));
  auto line_of = [&names](const Token& tok, int line) -> int {
    const auto it = std::find(names.begin(), names.end(), tok.text);
    if (it == names.end()) {
      parse_fail(line, tok.column, "undeclared line name '" + tok.text + "'");
    }
    return static_cast<int>(it - names.begin()) + 1;
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::vector<Token> parts = split_whitespace(line.text);
    const std::string& mnemonic = parts[0].text;
    std::string operand_text;
    for (std::size_t i = 1; i < parts.size(); ++i) operand_text += parts[i].text;
    std::vector<int> operands;
    for (const Token& tok : split(operand_text, ',')) {
      if (tok.text.empty()) parse_fail(line.number, parts[0].column, "empty operand");
      operands.push_back(line_of(tok, line.number));
    }

    try {
      if (mnemonic == "s2") {
        if (operands.size() != 2) {
          parse_fail(line.number, parts[0].column,
                     "s2 expects 2 operands, got " + std::to_string(operands.size()));
        }
        circuit.add(Gate::swap(operands[0], operands[1]));
      } else if (mnemonic.size() >= 2 && mnemonic[0] == 't') {
        std::uint64_t arity = 0;
        const auto [ptr, ec] = std::from_chars(
            mnemonic.data() + 1, mnemonic.data() + mnemonic.size(), arity);
        if (ec != std::errc{} || ptr != mnemonic.data() + mnemonic.size() || arity < 1) {
          parse_fail(line.number, parts[0].column, "unknown mnemonic '" + mnemonic + "'");
        }
        if (operands.size() != arity) {
          parse_fail(line.number, parts[0].column,
                     mnemonic + " expects " + std::to_string(arity) + " operands, got " +
                         std::to_string(operands.size()));
        }
        const int target = operands.back();
        if (arity == 1) {
          circuit.add(Gate::not_gate(target));
        } else if (arity == 2) {
          circuit.add(Gate::cnot(operands[0], target));
        } else if (arity == 3) {
          circuit.add(Gate::toffoli(operands[0], operands[1], target));
        } else {
          circuit.add(Gate::mct({operands.begin(), operands.end() - 1}, target));
        }
      } else {
        parse_fail(line.number, parts[0].column, "unknown mnemonic '" + mnemonic + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError) throw;
      throw Error(e.code(), "line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return ParsedCircuit{std::move(circuit), std::move(names)};
}

std::string format_gate(const Gate& g, const std::vector<std::string>& names) {
  const auto name = [&names](int line) { return names[line - 1]; };
  std::ostringstream out;
  switch (g.kind()) {
    case GateKind::Identity:
      break;
    case GateKind::Swap:
      out << "s2 " << name(g.swap_lines().first) << ',' << name(g.swap_lines().second);
      break;
    default: {
      out << 't' << g.controls().size() + 1 << ' ';
      for (int c : g.controls()) out << name(c) << ',';
      out << name(g.target());
      break;
    }
  }
  return out.str();
}

std::string emit_circuit(const Circuit& c, const std::vector<std::string>& names) {
  const std::vector<std::string> resolved = resolve_names(names, c.width());
  std::ostringstream out;
  out << ".v ";
  for (std::size_t i = 0; i < resolved.size(); ++i) {
    if (i > 0) out << ',';
    out << resolved[i];
  }
  out << '\n';
  for (const Gate& g : c.gates()) {
    if (g.kind() == GateKind::Identity) continue;
    out << format_gate(g, resolved) << '\n';
  }
  return out.str();
}

namespace {

std::string pla_header(int inputs, int outputs, const char* type) {
  std::ostringstream out;
  out << ".i " << inputs << '\n' << ".o " << outputs << '\n' << ".type " << type << '\n';
  return out.str();
}

std::string output_part(std::size_t index, std::size_t count) {
  std::string s(count, '0');
  s[index] = '1';
  return s;
}

std::string cover_pla_body(int n, const std::vector<std::vector<Cube>>& outputs) {
  std::ostringstream out;
  for (std::size_t o = 0; o < outputs.size(); ++o) {
    for (const Cube& cube : outputs[o]) {
      std::string input(n, '-');
      for (int v = 0; v < n; ++v) {
        const std::uint32_t bit = std::uint32_t{1} << (n - 1 - v);
        if (cube.care & bit) input[v] = (cube.value & bit) ? '1' : '0';
      }
      out << input << ' ' << output_part(o, outputs.size()) << '\n';
    }
  }
  return out.str();
}

std::string cover_comments(int n, const std::vector<std::vector<Cube>>& outputs,
                           const std::vector<std::string>& names, char separator) {
  std::ostringstream out;
  for (std::size_t o = 0; o < outputs.size(); ++o) {
    out << "# f" << o + 1 << " = " << cover_to_string(outputs[o], n, names, separator)
        << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit_pla(const SopForm& sop, const std::vector<std::string>& names) {
  const std::vector<std::string> vars = resolve_names(names, sop.num_inputs);
  return cover_comments(sop.num_inputs, sop.outputs, vars, '+') +
         pla_header(sop.num_inputs, static_cast<int>(sop.outputs.size()), "fr") +
         cover_pla_body(sop.num_inputs, sop.outputs) + ".e\n";
}

std::string emit_pla(const EsopForm& esop, const std::vector<std::string>& names) {
  const std::vector<std::string> vars = resolve_names(names, esop.num_inputs);
  return cover_comments(esop.num_inputs, esop.outputs, vars, '^') +
         pla_header(esop.num_inputs, static_cast<int>(esop.outputs.size()), "esop") +
         cover_pla_body(esop.num_inputs, esop.outputs) + ".e\n";
}

std::string emit_pla(const PprmForm& pprm, const std::vector<std::string>& names) {
  const int n = pprm.num_inputs;
  const std::vector<std::string> vars = resolve_names(names, n);
  std::ostringstream out;
  for (std::size_t o = 0; o < pprm.outputs.size(); ++o) {
    out << "# f" << o + 1 << " = " << pprm_to_string(pprm.outputs[o], n, vars) << '\n';
  }
  out << pla_header(n, static_cast<int>(pprm.outputs.size()), "esop");
  for (std::size_t o = 0; o < pprm.outputs.size(); ++o) {
    for (std::uint32_t mask : pprm.outputs[o]) {
      std::string input(n, '0');
      for (int v = 0; v < n; ++v) {
        if (mask & (std::uint32_t{1} << (n - 1 - v))) input[v] = '1';
      }
      out << input << ' ' << output_part(o, pprm.outputs.size()) << '\n';
    }
  }
  out << ".e\n";
  return out.str();
}

ParsedPla parse_pla(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  int inputs = -1;
  int outputs = -1;
  std::string type = "fr";
  bool ended = false;
  std::vector<std::vector<Cube>> covers;

  for (const Line& line : lines) {
    const std::vector<Token> parts = split_whitespace(line.text);
    const std::string& head = parts[0].text;
    if (ended) parse_fail(line.number, parts[0].column, "content after .e");
    if (head == ".i" || head == ".o") {
      if (parts.size() != 2) parse_fail(line.number, parts[0].column, head + " expects one number");
      const std::uint64_t v = parse_number(parts[1], line.number);
      if (v < 1 || v > 26) parse_fail(line.number, parts[1].column, "count out of range");
      (head == ".i" ? inputs : outputs) = static_cast<int>(v);
      if (outputs > 0) covers.assign(outputs, {});
      continue;
    }
    if (head == ".type") {
      if (parts.size() != 2 || (parts[1].text != "fr" && parts[1].text != "esop")) {
        parse_fail(line.number, parts[0].column, ".type expects fr or esop");
      }
      type = parts[1].text;
      continue;
    }
    if (head == ".e") {
      ended = true;
      continue;
    }
    // Cube line.
    if (inputs < 1 || outputs < 1) {
      parse_fail(line.number, parts[0].column, "cube before .i/.o declarations");
    }
    if (parts.size() != 2 || static_cast<int>(parts[0].text.size()) != inputs ||
        static_cast<int>(parts[1].text.size()) != outputs) {
      parse_fail(line.number, parts[0].column, "cube does not match declared widths");
    }
    Cube cube;
    for (int v = 0; v < inputs; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << (inputs - 1 - v);
      const char ch = parts[0].text[v];
      if (ch == '1') {
        cube.care |= bit;
        cube.value |= bit;
      } else if (ch == '0') {
        cube.care |= bit;
      } else if (ch != '-') {
        parse_fail(line.number, parts[0].column + v, "input literal must be 0, 1 or -");
      }
    }
    for (int o = 0; o < outputs; ++o) {
      const char ch = parts[1].text[o];
      if (ch == '1') {
        auto& cover = covers[o];
        if (std::find(cover.begin(), cover.end(), cube) != cover.end()) {
          parse_fail(line.number, parts[0].column, "duplicate cube in output " + std::to_string(o + 1));
        }
        cover.push_back(cube);
      } else if (ch != '0') {
        parse_fail(line.number, parts[1].column + o, "output literal must be 0 or 1");
      }
    }
  }
  if (inputs < 1 || outputs < 1) parse_fail(1, 1, "missing .i/.o declarations");
  if (!ended) parse_fail(lines.empty() ? 1 : lines.back().number, 1, "missing .e");
  if (type == "fr") return SopForm{inputs, std::move(covers)};
  return EsopForm{inputs, std::move(covers)};
}

}  // namespace revsynth

#include "revsynth/boolean.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace revsynth {

namespace {

void check_column(const std::vector<std::uint8_t>& column, int num_inputs) {
  if (num_inputs < 1 || num_inputs > 26 ||
      column.size() != (std::size_t{1} << num_inputs)) {
    fail(Errc::LengthMismatch, "column of " + std::to_string(column.size()) +
                                   " bits does not fit " + std::to_string(num_inputs) +
                                   " inputs");
  }
}

// Canonical monomial order: by degree, then leading variable first (higher
// mask first, since v1 is the most significant bit).
bool monomial_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return a > b;
}

std::vector<std::uint32_t> sorted_monomials(const std::set<std::uint32_t>& acc) {
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), monomial_less);
  return out;
}

bool cubes_disjoint(const Cube& a, const Cube& b) {
  return ((a.care & b.care) & (a.value ^ b.value)) != 0;
}

// Appends c AND NOT d as pairwise-disjoint cubes. Splits c along every
// variable fixed in d but free in c; the final fragment lies inside d and is
// dropped.
void sharp_into(const Cube& c, const Cube& d, std::vector<Cube>& out) {
  if (cubes_disjoint(c, d)) {
    out.push_back(c);
    return;
  }
  std::uint32_t split = d.care & ~c.care;
  Cube cur = c;
  while (split != 0) {
    const std::uint32_t bit = std::uint32_t{1} << (31 - std::countl_zero(split));
    split &= ~bit;
    Cube piece = cur;
    piece.care |= bit;
    piece.value = cur.value | (bit & ~d.value);
    out.push_back(piece);
    cur.care |= bit;
    cur.value |= bit & d.value;
  }
}

struct ExactCoverSelector {
  const std::vector<Cube>& primes;
  const std::vector<std::uint32_t>& minterms;
  const std::vector<std::vector<int>>& options;     // per minterm: prime indices
  const std::vector<std::vector<int>>& prime_span;  // per prime: minterm positions

  std::vector<int> chosen;
  std::vector<int> cover_count;
  std::vector<int> best;
  bool found = false;

  void run() {
    cover_count.assign(minterms.size(), 0);
    recurse();
  }

  void recurse() {
    int pick = -1;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t m = 0; m < minterms.size(); ++m) {
      if (cover_count[m] == 0 && options[m].size() < fewest) {
        fewest = options[m].size();
        pick = static_cast<int>(m);
      }
    }
    if (pick < 0) {
      if (!found || chosen.size() < best.size()) {
        best = chosen;
        found = true;
      }
      return;
    }
    if (found && chosen.size() + 1 >= best.size()) return;
    for (int pi : options[pick]) {
      chosen.push_back(pi);
      for (int m : prime_span[pi]) ++cover_count[m];
      recurse();
      for (int m : prime_span[pi]) --cover_count[m];
      chosen.pop_back();
    }
  }
};

std::vector<int> greedy_cover(const std::vector<Cube>& primes,
                              const std::vector<std::uint32_t>& minterms,
                              const std::vector<std::vector<int>>& options,
                              const std::vector<std::vector<int>>& prime_span) {
  std::vector<int> chosen;
  std::vector<char> selected(primes.size(), 0);
  std::vector<int> cover_count(minterms.size(), 0);
  auto select = [&](int pi) {
    selected[pi] = 1;
    chosen.push_back(pi);
    for (int m : prime_span[pi]) ++cover_count[m];
  };
  // Essential primes: sole cover of some minterm.
  for (std::size_t m = 0; m < minterms.size(); ++m) {
    if (options[m].size() == 1 && !selected[options[m][0]]) select(options[m][0]);
  }
  for (;;) {
    int best_prime = -1;
    int best_gain = 0;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      if (selected[pi]) continue;
      int gain = 0;
      for (int m : prime_span[pi]) gain += cover_count[m] == 0;
      if (gain > best_gain) {
        best_gain = gain;
        best_prime = static_cast<int>(pi);
      }
    }
    if (best_prime < 0) break;
    select(best_prime);
  }
  // Drop cubes whose minterms are all covered elsewhere.
  for (std::size_t ci = 0; ci < chosen.size(); ++ci) {
    const int pi = chosen[ci];
    bool needed = false;
    for (int m : prime_span[pi]) {
      if (cover_count[m] == 1) {
        needed = true;
        break;
      }
    }
    if (!needed) {
      for (int m : prime_span[pi]) --cover_count[m];
      chosen.erase(chosen.begin() + ci);
      --ci;
    }
  }
  return chosen;
}

}  // namespace

TruthTable extract_truth_table(const PermutationMap& p) {
  const int n = p.width();
  TruthTable table{n, n, {}};
  table.columns.assign(n, std::vector<std::uint8_t>(p.size(), 0));
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    const std::uint32_t out = p(i);
    for (int o = 0; o < n; ++o) {
      table.columns[o][i] = static_cast<std::uint8_t>((out >> (n - 1 - o)) & 1);
    }
  }
  return table;
}

std::vector<Cube> minimize_sop(const std::vector<std::uint8_t>& column, int num_inputs) {
  check_column(column, num_inputs);
  const std::uint32_t full = (num_inputs == 32) ? ~0u
                                                : (std::uint32_t{1} << num_inputs) - 1;
  std::vector<std::uint32_t> minterms;
  for (std::uint32_t i = 0; i < column.size(); ++i) {
    if (column[i]) minterms.push_back(i);
  }
  if (minterms.empty()) return {};

  // Quine-McCluskey prime generation.
  std::vector<Cube> current;
  current.reserve(minterms.size());
  for (std::uint32_t m : minterms) current.push_back(Cube{full, m});
  std::vector<Cube> primes;
  while (!current.empty()) {
    std::vector<char> combined(current.size(), 0);
    std::set<Cube> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].care != current[j].care) continue;
        const std::uint32_t diff = current[i].value ^ current[j].value;
        if (std::popcount(diff) != 1) continue;
        combined[i] = combined[j] = 1;
        next.insert(Cube{current[i].care & ~diff, current[i].value & ~diff});
      }
    }
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (!combined[i]) primes.push_back(current[i]);
    }
    current.assign(next.begin(), next.end());
  }
  std::sort(primes.begin(), primes.end(), [](const Cube& a, const Cube& b) {
    const int la = std::popcount(a.care);
    const int lb = std::popcount(b.care);
    if (la != lb) return la < lb;  // fewer literals first
    return a < b;
  });

  std::vector<std::vector<int>> options(minterms.size());
  std::vector<std::vector<int>> prime_span(primes.size());
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    for (std::size_t m = 0; m < minterms.size(); ++m) {
      if (cube_matches(primes[pi], minterms[m])) {
        options[m].push_back(static_cast<int>(pi));
        prime_span[pi].push_back(static_cast<int>(m));
      }
    }
  }

  std::vector<int> chosen;
  if (num_inputs <= 4) {
    ExactCoverSelector selector{primes, minterms, options, prime_span, {}, {}, {}, false};
    selector.run();
    chosen = selector.best;
  } else {
    chosen = greedy_cover(primes, minterms, options, prime_span);
  }

  std::vector<Cube> cover;
  cover.reserve(chosen.size());
  for (int pi : chosen) cover.push_back(primes[pi]);
  std::sort(cover.begin(), cover.end(),
            [](const Cube& a, const Cube& b) { return std::pair(a.value, a.care) < std::pair(b.value, b.care); });
  return cover;
}

SopForm minimize_sop(const TruthTable& table) {
  SopForm sop{table.num_inputs, {}};
  sop.outputs.reserve(table.columns.size());
  for (const auto& column : table.columns) {
    sop.outputs.push_back(minimize_sop(column, table.num_inputs));
  }
  return sop;
}

std::vector<Cube> sop_to_esop(const std::vector<Cube>& cover) {
  std::vector<Cube> result;
  for (const Cube& c : cover) {
    std::vector<Cube> frags{c};
    const std::size_t existing = result.size();
    for (std::size_t di = 0; di < existing && !frags.empty(); ++di) {
      std::vector<Cube> next;
      for (const Cube& f : frags) sharp_into(f, result[di], next);
      frags = std::move(next);
    }
    result.insert(result.end(), frags.begin(), frags.end());
  }
  return result;
}

EsopForm sop_to_esop(const SopForm& sop) {
  EsopForm esop{sop.num_inputs, {}};
  esop.outputs.reserve(sop.outputs.size());
  for (const auto& cover : sop.outputs) esop.outputs.push_back(sop_to_esop(cover));
  return esop;
}

std::vector<std::uint32_t> esop_to_pprm(const std::vector<Cube>& cover, int num_inputs) {
  std::set<std::uint32_t> acc;
  auto toggle = [&acc](std::uint32_t m) {
    auto it = acc.find(m);
    if (it == acc.end()) {
      acc.insert(m);
    } else {
      acc.erase(it);
    }
  };
  (void)num_inputs;
  for (const Cube& c : cover) {
    const std::uint32_t pos = c.value;
    const std::uint32_t neg = c.care & ~c.value;
    std::uint32_t s = neg;
    for (;;) {
      toggle(pos | s);
      if (s == 0) break;
      s = (s - 1) & neg;
    }
  }
  return sorted_monomials(acc);
}

PprmForm esop_to_pprm(const EsopForm& esop) {
  PprmForm pprm{esop.num_inputs, {}};
  pprm.outputs.reserve(esop.outputs.size());
  for (const auto& cover : esop.outputs) {
    pprm.outputs.push_back(esop_to_pprm(cover, esop.num_inputs));
  }
  return pprm;
}

std::vector<std::uint32_t> pprm_from_bits(const std::vector<std::uint8_t>& column,
                                          int num_inputs) {
  check_column(column, num_inputs);
  const std::uint32_t n = static_cast<std::uint32_t>(column.size());
  std::vector<std::uint8_t> c(column);
  for (std::uint32_t bit = 1; bit < n; bit <<= 1) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (x & bit) c[x] ^= c[x ^ bit];
    }
  }
  std::set<std::uint32_t> acc;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (c[x]) acc.insert(x);
  }
  return sorted_monomials(acc);
}

PprmForm pprm_from_table(const TruthTable& table) {
  PprmForm pprm{table.num_inputs, {}};
  pprm.outputs.reserve(table.columns.size());
  for (const auto& column : table.columns) {
    pprm.outputs.push_back(pprm_from_bits(column, table.num_inputs));
  }
  return pprm;
}

std::vector<std::uint8_t> pprm_to_bits(const std::vector<std::uint32_t>& monomials,
                                       int num_inputs) {
  const std::uint32_t n = std::uint32_t{1} << num_inputs;
  std::vector<std::uint8_t> c(n, 0);
  for (std::uint32_t m : monomials) {
    if (m >= n) {
      fail(Errc::IndexOutOfRange, "monomial mask " + std::to_string(m) +
                                      " exceeds " + std::to_string(num_inputs) +
                                      " variables");
    }
    c[m] ^= 1;
  }
  for (std::uint32_t bit = 1; bit < n; bit <<= 1) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (x & bit) c[x] ^= c[x ^ bit];
    }
  }
  return c;
}

std::uint8_t eval_sop(const std::vector<Cube>& cover, std::uint32_t input) {
  for (const Cube& c : cover) {
    if (cube_matches(c, input)) return 1;
  }
  return 0;
}

std::uint8_t eval_esop(const std::vector<Cube>& cover, std::uint32_t input) {
  std::uint8_t acc = 0;
  for (const Cube& c : cover) acc ^= cube_matches(c, input) ? 1 : 0;
  return acc;
}

std::uint8_t eval_pprm(const std::vector<std::uint32_t>& monomials, std::uint32_t input) {
  std::uint8_t acc = 0;
  for (std::uint32_t m : monomials) acc ^= ((input & m) == m) ? 1 : 0;
  return acc;
}

QkMapView render_qkmap(const PermutationMap& p) {
  if (p.width() > 6) {
    fail(Errc::WidthTooLarge,
         "chart rendering is capped at 6 lines; got " + std::to_string(p.width()));
  }
  QkMapView view;
  view.width = p.width();
  view.row_bits = (p.width() + 1) / 2;
  view.col_bits = p.width() - view.row_bits;
  const std::uint32_t rows = std::uint32_t{1} << view.row_bits;
  const std::uint32_t cols = std::uint32_t{1} << view.col_bits;
  for (std::uint32_t t = 0; t < rows; ++t) view.row_labels.push_back(t ^ (t >> 1));
  for (std::uint32_t t = 0; t < cols; ++t) view.col_labels.push_back(t ^ (t >> 1));
  view.cells.assign(rows, std::vector<std::uint32_t>(cols, 0));
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const std::uint32_t input = (view.row_labels[r] << view.col_bits) | view.col_labels[c];
      view.cells[r][c] = p(input);
    }
  }
  return view;
}

namespace {

std::string to_bits(std::uint32_t value, int bits) {
  std::string s;
  for (int b = bits - 1; b >= 0; --b) s += ((value >> b) & 1) ? '1' : '0';
  return s;
}

std::string pad_left(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string qkmap_to_text(const QkMapView& view, const std::vector<std::string>& names) {
  const std::vector<std::string> vars =
      names.empty() ? default_names(view.width) : names;
  if (static_cast<int>(vars.size()) != view.width) {
    fail(Errc::LengthMismatch, "expected " + std::to_string(view.width) + " names");
  }
  std::ostringstream out;
  out << "rows:";
  for (int v = 0; v < view.row_bits; ++v) out << ' ' << vars[v];
  out << "  columns:";
  if (view.col_bits == 0) out << " -";
  for (int v = view.row_bits; v < view.width; ++v) out << ' ' << vars[v];
  out << '\n';

  const std::size_t cell_w = std::max<std::size_t>(view.width, view.col_bits) + 2;
  const std::size_t label_w = static_cast<std::size_t>(view.row_bits) + 2;
  out << std::string(label_w, ' ');
  for (std::uint32_t c : view.col_labels) out << pad_left(to_bits(c, view.col_bits), cell_w);
  out << '\n';
  for (std::size_t r = 0; r < view.cells.size(); ++r) {
    out << pad_left(to_bits(view.row_labels[r], view.row_bits), label_w);
    for (std::uint32_t cell : view.cells[r]) out << pad_left(to_bits(cell, view.width), cell_w);
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

std::string cube_to_string(const Cube& c, int num_inputs,
                           const std::vector<std::string>& names) {
  std::string s;
  for (int v = 1; v <= num_inputs; ++v) {
    const std::uint32_t bit = std::uint32_t{1} << (num_inputs - v);
    if (!(c.care & bit)) continue;
    s += names[v - 1];
    if (!(c.value & bit)) s += '\'';
  }
  return s.empty() ? "1" : s;
}

std::string cover_to_string(const std::vector<Cube>& cover, int num_inputs,
                            const std::vector<std::string>& names, char separator) {
  if (cover.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (i > 0) s += separator;
    s += cube_to_string(cover[i], num_inputs, names);
  }
  return s;
}

std::string monomial_to_string(std::uint32_t mask, int num_inputs,
                               const std::vector<std::string>& names) {
  if (mask == 0) return "1";
  std::string s;
  for (int v = 1; v <= num_inputs; ++v) {
    if (mask & (std::uint32_t{1} << (num_inputs - v))) s += names[v - 1];
  }
  return s;
}

std::string pprm_to_string(const std::vector<std::uint32_t>& monomials, int num_inputs,
                           const std::vector<std::string>& names) {
  if (monomials.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i > 0) s += '^';
    s += monomial_to_string(monomials[i], num_inputs, names);
  }
  return s;
}

}  // namespace revsynth

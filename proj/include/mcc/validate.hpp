#ifndef MCC_VALIDATE_HPP
#define MCC_VALIDATE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mcc/pda.hpp"

namespace mcc {

enum class Condition { C1, C2, C3a, C3b, cyclicity };

inline const char* to_string(Condition c) {
  switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3a: return "C3a";
    case Condition::C3b: return "C3b";
    case Condition::cyclicity: return "cyclicity";
  }
  return "?";
}

struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// One structured finding. Which fields are meaningful depends on the
/// condition:
///   C1        column = offending column, count = its star count
///   C2        symbol = missing symbol (absent when the array has no symbol)
///   C3a, C3b  cells = the two equal-symbol positions, row-major ordered
///   cyclicity column = first non-interval column, or absent when every
///             column is an interval but no common shift exists
struct Violation {
  Condition condition = Condition::C1;
  std::optional<std::size_t> column;
  std::optional<std::size_t> count;
  std::optional<Symbol> symbol;
  std::vector<Cell> cells;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tie(a.condition, a.column, a.count, a.symbol, a.cells) <
           std::tie(b.condition, b.column, b.count, b.symbol, b.cells);
  }
};

struct ValidationReport {
  std::size_t rows = 0;  // F
  std::size_t cols = 0;  // K
  bool is_pda = false;
  std::optional<std::size_t> Z;
  std::size_t S = 0;  // distinct symbols
  std::optional<std::size_t> regular_g;
  std::optional<std::size_t> cyclic_t;
  std::vector<Violation> violations;  // sorted

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

namespace detail {

inline bool breaks_pda(const Violation& v) { return v.condition != Condition::cyclicity; }

/// Most frequent star count across columns, smaller count on ties.
inline std::size_t reference_star_count(const std::vector<std::size_t>& counts) {
  std::map<std::size_t, std::size_t> freq;
  for (std::size_t c : counts) ++freq[c];
  std::size_t best = counts.front(), best_freq = 0;
  for (auto [value, f] : freq)
    if (f > best_freq) best = value, best_freq = f;
  return best;
}

inline void finish_report(ValidationReport& r, const std::vector<std::size_t>& symbol_counts) {
  std::sort(r.violations.begin(), r.violations.end());
  r.is_pda = std::none_of(r.violations.begin(), r.violations.end(), breaks_pda);
  if (r.is_pda && !symbol_counts.empty() &&
      std::all_of(symbol_counts.begin(), symbol_counts.end(),
                  [&](std::size_t c) { return c == symbol_counts.front(); }))
    r.regular_g = symbol_counts.front();
  if (!r.regular_g) r.cyclic_t.reset();
}

}  // namespace detail

/// Checks the PDA conditions, regularity and t-cyclicity in one pass.
/// Equal-symbol pairs are only compared within a symbol's occurrence list.
inline ValidationReport validate(const Pda& p) {
  const std::size_t F = p.rows(), K = p.cols();
  ValidationReport r;
  r.rows = F;
  r.cols = K;

  // C1
  std::vector<std::size_t> star_count(K, 0);
  std::vector<std::vector<bool>> star(K, std::vector<bool>(F, false));
  for (std::size_t i = 0; i < F; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (p(i, j).is_star()) {
        ++star_count[j];
        star[j][i] = true;
      }
  const std::size_t z_ref = detail::reference_star_count(star_count);
  bool uniform = true;
  for (std::size_t j = 0; j < K; ++j)
    if (star_count[j] != z_ref) {
      uniform = false;
      r.violations.push_back({Condition::C1, j, star_count[j], {}, {}});
    }
  if (uniform) r.Z = z_ref;

  // C2
  std::map<Symbol, std::vector<Cell>> where;
  for (std::size_t i = 0; i < F; ++i)
    for (std::size_t j = 0; j < K; ++j)
      if (p(i, j).is_symbol()) where[p(i, j).value()].push_back({i, j});
  r.S = where.size();
  if (where.empty()) {
    r.violations.push_back({Condition::C2, {}, {}, {}, {}});
  } else {
    Symbol expect = 0;
    for (const auto& [s, cells] : where) {
      for (; expect < s; ++expect) r.violations.push_back({Condition::C2, {}, {}, expect, {}});
      expect = s + 1;
    }
  }

  // C3
  for (const auto& [s, cells] : where) {
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        const Cell x = cells[a], y = cells[b];
        if (x.row == y.row || x.col == y.col)
          r.violations.push_back({Condition::C3a, {}, {}, s, {x, y}});
        else if (!p(x.row, y.col).is_star() || !p(y.row, x.col).is_star())
          r.violations.push_back({Condition::C3b, {}, {}, s, {x, y}});
      }
  }

  // Cyclicity. A column is a cyclic interval iff it is empty, full, or has
  // exactly one star whose predecessor (mod F) is not a star.
  std::vector<std::optional<std::size_t>> start(K);
  bool all_intervals = true;
  for (std::size_t j = 0; j < K; ++j) {
    if (star_count[j] == 0 || star_count[j] == F) continue;
    std::size_t starts = 0;
    for (std::size_t i = 0; i < F; ++i)
      if (star[j][i] && !star[j][(i + F - 1) % F]) {
        ++starts;
        start[j] = i;
      }
    if (starts != 1) {
      all_intervals = false;
      r.violations.push_back({Condition::cyclicity, j, {}, {}, {}});
    }
  }
  if (all_intervals) {
    // Interval columns are equal up to a shift only if their sizes match;
    // a proper interval fixes the shift uniquely.
    std::optional<std::size_t> t_found;
    for (std::size_t t = 1; t < F && !t_found; ++t) {
      bool ok = true;
      for (std::size_t j = 1; j < K && ok; ++j) {
        if (star_count[j] != star_count[j - 1])
          ok = false;
        else if (start[j])
          ok = *start[j] == (*start[j - 1] + t) % F;
      }
      if (ok) t_found = t;
    }
    if (t_found)
      r.cyclic_t = t_found;
    else if (K >= 2)
      r.violations.push_back({Condition::cyclicity, {}, {}, {}, {}});
  }

  std::vector<std::size_t> counts;
  counts.reserve(where.size());
  for (const auto& [s, cells] : where) counts.push_back(cells.size());
  detail::finish_report(r, counts);
  return r;
}

/// Brute-force reference for validate(): every condition is evaluated
/// directly from its definition by scanning all entries or entry pairs.
inline ValidationReport validate_oracle(const Pda& p) {
  const std::size_t F = p.rows(), K = p.cols();
  ValidationReport r;
  r.rows = F;
  r.cols = K;

  auto stars_in = [&](std::size_t j) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < F; ++i) n += p(i, j).is_star();
    return n;
  };
  std::vector<std::size_t> counts(K);
  for (std::size_t j = 0; j < K; ++j) counts[j] = stars_in(j);
  const std::size_t z_ref = detail::reference_star_count(counts);
  for (std::size_t j = 0; j < K; ++j)
    if (counts[j] != z_ref) r.violations.push_back({Condition::C1, j, counts[j], {}, {}});
  if (r.violations.empty()) r.Z = z_ref;

  bool any = false;
  Symbol max_symbol = 0;
  for (Entry e : p.cells())
    if (e.is_symbol()) {
      max_symbol = any ? std::max(max_symbol, e.value()) : e.value();
      any = true;
    }
  std::vector<std::size_t> occurrences;
  if (!any) {
    r.violations.push_back({Condition::C2, {}, {}, {}, {}});
  } else {
    for (Symbol s = 0; s <= max_symbol; ++s) {
      std::size_t n = 0;
      for (Entry e : p.cells()) n += e.is_symbol() && e.value() == s;
      if (n == 0)
        r.violations.push_back({Condition::C2, {}, {}, s, {}});
      else
        occurrences.push_back(n);
    }
  }
  r.S = occurrences.size();

  for (std::size_t a = 0; a < F * K; ++a)
    for (std::size_t b = a + 1; b < F * K; ++b) {
      const std::size_t i1 = a / K, j1 = a % K, i2 = b / K, j2 = b % K;
      const Entry x = p(i1, j1), y = p(i2, j2);
      if (!x.is_symbol() || x != y) continue;
      const Violation base{Condition::C3a, {}, {}, x.value(), {{i1, j1}, {i2, j2}}};
      if (i1 == i2 || j1 == j2) {
        r.violations.push_back(base);
      } else if (!(p(i1, j2).is_star() && p(i2, j1).is_star())) {
        Violation v = base;
        v.condition = Condition::C3b;
        r.violations.push_back(v);
      }
    }

  auto star_set = [&](std::size_t j) {
    std::vector<bool> s(F);
    for (std::size_t i = 0; i < F; ++i) s[i] = p(i, j).is_star();
    return s;
  };
  auto is_interval = [&](const std::vector<bool>& s) {
    const std::size_t z = static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
    if (z == 0 || z == F) return true;
    for (std::size_t first = 0; first < F; ++first) {
      std::vector<bool> want(F, false);
      for (std::size_t d = 0; d < z; ++d) want[(first + d) % F] = true;
      if (want == s) return true;
    }
    return false;
  };
  bool all_intervals = true;
  for (std::size_t j = 0; j < K; ++j)
    if (!is_interval(star_set(j))) {
      all_intervals = false;
      r.violations.push_back({Condition::cyclicity, j, {}, {}, {}});
    }
  if (all_intervals) {
    for (std::size_t t = 1; t < F && !r.cyclic_t; ++t) {
      bool ok = true;
      for (std::size_t j = 1; j < K && ok; ++j) {
        const auto prev = star_set(j - 1), cur = star_set(j);
        for (std::size_t i = 0; i < F && ok; ++i) ok = cur[i] == prev[(i + F - t) % F];
      }
      if (ok) r.cyclic_t = t;
    }
    if (!r.cyclic_t && K >= 2) r.violations.push_back({Condition::cyclicity, {}, {}, {}, {}});
  }

  detail::finish_report(r, occurrences);
  return r;
}

}  // namespace mcc

#endif  // MCC_VALIDATE_HPP

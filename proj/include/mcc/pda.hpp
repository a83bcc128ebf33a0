#ifndef MCC_PDA_HPP
#define MCC_PDA_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mcc/errors.hpp"

namespace mcc {

using Symbol = std::uint64_t;

/// One cell of a placement delivery array: either a star or a non-negative
/// integer symbol.
class Entry {
public:
  constexpr Entry() noexcept = default;

  static constexpr Entry star() noexcept { return Entry{}; }
  static constexpr Entry symbol(Symbol s) noexcept { return Entry{s}; }

  constexpr bool is_star() const noexcept { return value_ == kStar; }
  constexpr bool is_symbol() const noexcept { return value_ != kStar; }
  /// Only meaningful when is_symbol().
  constexpr Symbol value() const noexcept { return value_; }

  constexpr Entry operator+(Symbol b) const noexcept {
    return is_star() ? *this : Entry{value_ + b};
  }

  friend constexpr bool operator==(Entry, Entry) noexcept = default;

private:
  static constexpr Symbol kStar = std::numeric_limits<Symbol>::max();
  constexpr explicit Entry(Symbol s) noexcept : value_(s) {}
  Symbol value_ = kStar;
};

inline constexpr Entry kStar = Entry::star();

/// Dense F x K grid of entries, rows are packets and columns are users.
class Pda {
public:
  Pda(std::size_t rows, std::size_t cols, Entry fill = Entry::star())
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw StructuralError("PDA must have at least one row and one column");
  }

  Pda(std::size_t rows, std::size_t cols, std::vector<Entry> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows == 0 || cols == 0) throw StructuralError("PDA must have at least one row and one column");
    if (cells_.size() != rows * cols) throw StructuralError("cell count does not match dimensions");
  }

  explicit Pda(const std::vector<std::vector<Entry>>& grid) {
    if (grid.empty() || grid.front().empty())
      throw StructuralError("PDA must have at least one row and one column");
    rows_ = grid.size();
    cols_ = grid.front().size();
    cells_.reserve(rows_ * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (grid[i].size() != cols_)
        throw StructuralError("row " + std::to_string(i) + " has " + std::to_string(grid[i].size()) +
                              " entries, expected " + std::to_string(cols_));
      cells_.insert(cells_.end(), grid[i].begin(), grid[i].end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Entry operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }
  Entry& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * cols_ + j]; }

  Entry at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("PDA index out of range");
    return (*this)(i, j);
  }

  std::span<const Entry> row(std::size_t i) const noexcept {
    return {cells_.data() + i * cols_, cols_};
  }
  std::span<const Entry> cells() const noexcept { return cells_; }

  friend bool operator==(const Pda&, const Pda&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> cells_;
};

/// Adds b to every symbol; stars absorb the addition.
inline Pda shift_add(const Pda& p, Symbol b) {
  Pda out = p;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) out(i, j) = p(i, j) + b;
  return out;
}

inline Pda transpose(const Pda& p) {
  Pda out(p.cols(), p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) out(j, i) = p(i, j);
  return out;
}

/// Places the parts side by side, left to right.
inline Pda concat_columns(std::span<const Pda> parts) {
  if (parts.empty()) throw StructuralError("concat_columns needs at least one part");
  const std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const Pda& part : parts) {
    if (part.rows() != rows)
      throw StructuralError("concat_columns: row count " + std::to_string(part.rows()) +
                            " does not match " + std::to_string(rows));
    cols += part.cols();
  }
  Pda out(rows, cols);
  std::size_t offset = 0;
  for (const Pda& part : parts) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < part.cols(); ++j) out(i, offset + j) = part(i, j);
    offset += part.cols();
  }
  return out;
}

inline Pda concat_columns(std::initializer_list<Pda> parts) {
  return concat_columns(std::span<const Pda>(parts.begin(), parts.size()));
}

// ---------------------------------------------------------------------------
// Text format: first line "F K", then F lines of K tokens ('*' or a decimal
// integer). Output uses single spaces and no trailing whitespace.

inline void write_pda(std::ostream& os, const Pda& p) {
  os << p.rows() << ' ' << p.cols() << '\n';
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      if (j) os << ' ';
      const Entry e = p(i, j);
      if (e.is_star())
        os << '*';
      else
        os << e.value();
    }
    os << '\n';
  }
}

inline std::string to_text(const Pda& p) {
  std::ostringstream os;
  write_pda(os, p);
  return os.str();
}

namespace detail {

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::size_t parse_count(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError(std::string("invalid ") + what + " '" + tok + "'");
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::out_of_range&) {
    throw FormatError(std::string(what) + " out of range '" + tok + "'");
  }
}

}  // namespace detail

inline Pda read_pda(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  do {
    if (!std::getline(is, line)) throw FormatError("missing header line");
    ++lineno;
  } while (detail::blank(line));

  std::istringstream header(line);
  std::string f_tok, k_tok, extra;
  if (!(header >> f_tok >> k_tok) || (header >> extra))
    throw FormatError("header must be exactly two integers 'F K'");
  const std::size_t rows = detail::parse_count(f_tok, "row count");
  const std::size_t cols = detail::parse_count(k_tok, "column count");
  if (rows == 0 || cols == 0) throw FormatError("row and column counts must be positive");

  std::vector<Entry> cells;
  cells.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(is, line))
      throw FormatError("expected " + std::to_string(rows) + " rows, found " + std::to_string(i));
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::size_t n = 0;
    while (ls >> tok) {
      if (++n > cols) break;
      if (tok == "*")
        cells.push_back(Entry::star());
      else
        cells.push_back(Entry::symbol(detail::parse_count(tok, "symbol")));
    }
    if (n != cols)
      throw FormatError("line " + std::to_string(lineno) + ": expected " + std::to_string(cols) +
                        " tokens, found " + (n > cols ? "more" : std::to_string(n)));
  }
  while (std::getline(is, line)) {
    ++lineno;
    if (!detail::blank(line))
      throw FormatError("line " + std::to_string(lineno) + ": unexpected content after last row");
  }
  return Pda(rows, cols, std::move(cells));
}

inline Pda from_text(const std::string& text) {
  std::istringstream is(text);
  return read_pda(is);
}

}  // namespace mcc

#endif  // MCC_PDA_HPP

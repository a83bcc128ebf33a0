#ifndef MCC_COMPARE_HPP
#define MCC_COMPARE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <iterator>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mcc/params.hpp"

namespace mcc {

enum class Scheme { New, NT, RK, SPE, NK, LowerBound };

inline constexpr Scheme kAllSchemes[] = {Scheme::New, Scheme::NT, Scheme::RK,
                                         Scheme::SPE, Scheme::NK, Scheme::LowerBound};

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::New: return "New";
    case Scheme::NT: return "NT";
    case Scheme::RK: return "RK";
    case Scheme::SPE: return "SPE";
    case Scheme::NK: return "NK";
    case Scheme::LowerBound: return "LowerBound";
  }
  return "?";
}

struct SchemeRow {
  Scheme scheme = Scheme::New;
  std::optional<Rational> rate;
  std::optional<Rational> gain;
  std::optional<BigInt> subpacketization;
  bool applicable = false;
  std::string reason;

  static SchemeRow not_applicable(Scheme s, std::string why) { return {s, {}, {}, {}, false, std::move(why)}; }
};

inline BigInt binomial(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

namespace detail {
inline long long sll(std::size_t v) { return static_cast<long long>(v); }
}  // namespace detail

// --- this scheme -----------------------------------------------------------

inline Rational rate_new(std::size_t K, std::size_t k, std::size_t L) {
  const SchemeParams p = check_params(K, k, L, K, TrivialPolicy::accept);
  if (p.trivial) return 0;
  return Rational(p.S_total, p.F);
}

inline std::optional<Rational> gain_new(std::size_t K, std::size_t k, std::size_t L) {
  const SchemeParams p = check_params(K, k, L, K, TrivialPolicy::accept);
  if (p.trivial) return std::nullopt;
  return Rational(p.g);
}

// --- RK --------------------------------------------------------------------

/// (K - kL)^2 / K for k <= floor(K/L), 0 at k = ceil(K/L), otherwise outside
/// the published domain.
inline std::optional<Rational> rate_rk(std::size_t K, std::size_t k, std::size_t L) {
  if (k <= K / L) {
    const long long gap = detail::sll(K) - detail::sll(k * L);
    return Rational(gap * gap, detail::sll(K));
  }
  if (k == (K + L - 1) / L) return Rational(0);
  return std::nullopt;
}

inline std::optional<Rational> gain_rk(std::size_t K, std::size_t k, std::size_t L) {
  if (k * L >= K) return std::nullopt;
  return Rational(K, K - k * L);
}

/// (K/k) * C(K - kL + k - 1, k - 1); the NK scheme uses the same level.
inline std::optional<BigInt> subpacketization_rk(std::size_t K, std::size_t k, std::size_t L) {
  if (k * L >= K || K % k != 0) return std::nullopt;
  return BigInt(K / k) * binomial(detail::sll(K - k * L + k - 1), detail::sll(k - 1));
}

// --- NT --------------------------------------------------------------------

inline Rational rate_nt(std::size_t K, std::size_t k, std::size_t L) {
  if (k * L >= K) return 0;
  return Rational(K - k * L, k + 1);
}

inline Rational gain_nt(std::size_t k) { return Rational(k + 1); }

inline std::optional<BigInt> subpacketization_nt(std::size_t K, std::size_t k, std::size_t L) {
  if (k * L >= K) return std::nullopt;
  return BigInt(K) * binomial(detail::sll(K - k * L + k), detail::sll(k));
}

// --- NK --------------------------------------------------------------------

/// All vectors of `parts` non-negative integers summing to n, in
/// reverse-lexicographic order starting from (n, 0, ..., 0).
class WeakCompositions {
public:
  WeakCompositions(std::size_t n, std::size_t parts) : n_(n), parts_(parts) {
    if (parts == 0) throw std::invalid_argument("weak compositions need at least one part");
  }

  class iterator {
  public:
    using value_type = std::vector<std::size_t>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(std::size_t n, std::size_t parts) : current_(parts, 0), done_(false) { current_[0] = n; }

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }

    iterator& operator++() {
      // Move one unit out of the rightmost non-final positive slot and pile
      // everything to its right into the next slot.
      const std::size_t last = current_.size() - 1;
      std::size_t i = last;
      while (i-- > 0)
        if (current_[i] > 0) break;
      if (i == static_cast<std::size_t>(-1) || current_.size() == 1) {
        done_ = true;
        return *this;
      }
      std::size_t tail = 0;
      for (std::size_t j = i + 1; j <= last; ++j) tail += std::exchange(current_[j], 0);
      --current_[i];
      current_[i + 1] = tail + 1;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

  private:
    std::vector<std::size_t> current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, parts_); }
  iterator end() const { return iterator(); }

  /// C(n + parts - 1, parts - 1)
  BigInt count() const { return binomial(detail::sll(n_ + parts_ - 1), detail::sll(parts_ - 1)); }

private:
  std::size_t n_;
  std::size_t parts_;
};

inline WeakCompositions weak_compositions(std::size_t n, std::size_t parts) { return {n, parts}; }

/// Sum over weak (k+1)-compositions b of K - kL - 1 of
/// min{2(K - kL) + k - 1 - max(b), K}.
inline BigInt rate_nk_numerator(std::size_t K, std::size_t k, std::size_t L) {
  if (k * L >= K) throw ParamError(ParamErrorKind::trivial_regime, "NK rate needs K - kL - 1 >= 0");
  const long long base = 2 * (detail::sll(K) - detail::sll(k * L)) + detail::sll(k) - 1;
  BigInt total = 0;
  for (const auto& b : weak_compositions(K - k * L - 1, k + 1)) {
    const long long largest = detail::sll(*std::max_element(b.begin(), b.end()));
    total += std::min(base - largest, detail::sll(K));
  }
  return total;
}

inline Rational rate_nk(std::size_t K, std::size_t k, std::size_t L) {
  const BigInt num = rate_nk_numerator(K, k, L);
  const auto f = subpacketization_rk(K, k, L);
  if (!f) throw ParamError(ParamErrorKind::k_not_dividing_K, "NK sub-packetization needs k | K");
  return Rational(num, *f * BigInt(k + 1));
}

/// Coding gain as uncoded load over achieved load.
inline std::optional<Rational> gain_nk(std::size_t K, std::size_t k, std::size_t L) {
  if (k * L >= K) return std::nullopt;
  return Rational(K - k * L) / rate_nk(K, k, L);
}

// --- lower bound and SPE ---------------------------------------------------

/// Piecewise bound with breakpoints at gamma = 1/K and 2/K; stated for
/// L >= K/2 only.
inline std::optional<Rational> rate_lb(std::size_t K, std::size_t L, const Rational& gamma) {
  if (2 * L < K || gamma < 0) return std::nullopt;
  const Rational c(detail::sll((K - std::min(L, K)) * (K - std::min(L, K) + 1)), detail::sll(2 * K));
  const Rational Kg = gamma * detail::sll(K);
  if (Kg <= 1) return Rational(detail::sll(K)) - (Rational(detail::sll(K)) - c) * Kg;
  if (Kg <= 2) return c * (2 - Kg);
  return Rational(0);
}

inline SchemeRow spe_row(std::size_t K, std::size_t k, std::size_t L) {
  if (k != 2) return SchemeRow::not_applicable(Scheme::SPE, "defined for k = 2 only");
  if (2 * L >= K + 2) return SchemeRow::not_applicable(Scheme::SPE, "K - 2L + 2 <= 0");
  if (2 * L >= K) return SchemeRow::not_applicable(Scheme::SPE, "trivial regime");
  SchemeRow row{Scheme::SPE, {}, {}, {}, true,
                "rate depends on X1 X2 S of the SPE construction; coding gain between 3 and 4"};
  row.subpacketization = BigInt(K) * BigInt(K - 2 * L + 2) / 4;
  return row;
}

inline SchemeRow spe_row(std::size_t K, std::size_t L) { return spe_row(K, 2, L); }

// --- gain predicates-------------------------------------------------------------

struct GainPredicates {
  bool beats_nt = false;  // L > K(k-1)/(k(k+1)) + 1
  bool geq_rk = false;    // 2K/(K-kL+k) >= K/(K-kL)
};

inline Rational nt_threshold(std::size_t K, std::size_t k) {
  return Rational(detail::sll(K * (k - 1)), detail::sll(k * (k + 1))) + 1;
}

inline GainPredicates gain_predicates(std::size_t K, std::size_t k, std::size_t L) {
  const SchemeParams p = check_params(K, k, L, K);
  GainPredicates out;
  out.beats_nt = Rational(detail::sll(L)) > nt_threshold(K, k);
  out.geq_rk = Rational(p.g) >= *gain_rk(K, k, L);
  return out;
}

// --- comparison table ------------------------------------------------------

/// One row per scheme for a parameter point accepted by check_params
/// (trivial regime included).
inline std::vector<SchemeRow> compare(std::size_t K, std::size_t k, std::size_t L) {
  const SchemeParams p = check_params(K, k, L, K, TrivialPolicy::accept);
  std::vector<SchemeRow> rows;

  SchemeRow fresh{Scheme::New, rate_new(K, k, L), gain_new(K, k, L), {}, true, {}};
  if (p.trivial)
    fresh.reason = "trivial regime";
  else
    fresh.subpacketization = BigInt(K);
  rows.push_back(fresh);

  SchemeRow nt{Scheme::NT, rate_nt(K, k, L), {}, subpacketization_nt(K, k, L), true, {}};
  if (p.trivial)
    nt.reason = "trivial regime";
  else
    nt.gain = gain_nt(k);
  rows.push_back(nt);

  if (auto r = rate_rk(K, k, L))
    rows.push_back({Scheme::RK, r, gain_rk(K, k, L), subpacketization_rk(K, k, L), true,
                    p.trivial ? "trivial regime" : ""});
  else
    rows.push_back(SchemeRow::not_applicable(Scheme::RK, "k > ceil(K/L)"));

  rows.push_back(spe_row(K, k, L));

  if (p.trivial)
    rows.push_back(SchemeRow::not_applicable(Scheme::NK, "trivial regime"));
  else
    rows.push_back({Scheme::NK, rate_nk(K, k, L), gain_nk(K, k, L), subpacketization_rk(K, k, L), true, {}});

  if (auto r = rate_lb(K, L, p.gamma()))
    rows.push_back({Scheme::LowerBound, r, {}, {}, true, {}});
  else
    rows.push_back(SchemeRow::not_applicable(Scheme::LowerBound, "bound stated for L >= K/2 only"));
  return rows;
}

inline const SchemeRow& row_for(const std::vector<SchemeRow>& rows, Scheme s) {
  for (const SchemeRow& r : rows)
    if (r.scheme == s) return r;
  throw std::out_of_range("scheme missing from comparison");
}

struct SweepPoint {
  std::size_t k = 0;
  std::size_t L = 0;
  bool trivial = false;
  std::vector<SchemeRow> rows;
};

struct SweepTable {
  std::size_t K = 0;
  std::vector<SweepPoint> points;
};

/// Every (k, L) with k | K and 1 <= L <= K that check_params accepts,
/// trivial-regime points included.
inline SweepTable sweep(std::size_t K) {
  SweepTable table{K, {}};
  for (std::size_t k = 1; k <= K; ++k) {
    if (K % k != 0) continue;
    for (std::size_t L = 1; L <= K; ++L) {
      try {
        const SchemeParams p = check_params(K, k, L, K, TrivialPolicy::accept);
        table.points.push_back({k, L, p.trivial, compare(K, k, L)});
      } catch (const ParamError&) {
      }
    }
  }
  return table;
}

inline std::string format_number(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", r.convert_to<double>());
  return buf;
}

inline void write_csv(std::ostream& os, const SweepTable& table) {
  os << "K,k,L,gamma,scheme,rate,gain,subpacketization,applicable,reason\n";
  for (const SweepPoint& pt : table.points) {
    const std::string gamma = format_number(Rational(detail::sll(pt.k), detail::sll(table.K)));
    for (const SchemeRow& row : pt.rows) {
      os << table.K << ',' << pt.k << ',' << pt.L << ',' << gamma << ',' << to_string(row.scheme) << ','
         << (row.rate ? format_number(*row.rate) : "") << ',' << (row.gain ? format_number(*row.gain) : "") << ','
         << (row.subpacketization ? row.subpacketization->str() : "") << ','
         << (row.applicable ? "true" : "false") << ',' << row.reason << '\n';
    }
  }
}

}  // namespace mcc

#endif  // MCC_COMPARE_HPP

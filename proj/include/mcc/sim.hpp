#ifndef MCC_SIM_HPP
#define MCC_SIM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mcc/construct.hpp"
#include "mcc/errors.hpp"
#include "mcc/params.hpp"
#include "mcc/pda.hpp"
#include "mcc/validate.hpp"

namespace mcc {

using Bytes = std::vector<std::uint8_t>;

inline void xor_into(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src) {
  for (std::size_t b = 0; b < dst.size(); ++b) dst[b] ^= src[b];
}

/// N files, each split into F equal sub-files of subfile_size bytes.
class Library {
public:
  Library(std::size_t files, std::size_t subfiles, std::size_t subfile_size)
      : N_(files), F_(subfiles), size_(subfile_size), data_(files * subfiles * subfile_size, 0) {
    if (files == 0 || subfiles == 0 || subfile_size == 0)
      throw StructuralError("library dimensions must be positive");
  }

  /// Fills every payload from a seeded 64-bit Mersenne twister.
  static Library random(std::size_t files, std::size_t subfiles, std::size_t subfile_size,
                        std::uint64_t seed) {
    Library lib(files, subfiles, subfile_size);
    std::mt19937_64 rng(seed);
    for (auto& b : lib.data_) b = static_cast<std::uint8_t>(rng());
    return lib;
  }

  std::size_t N() const noexcept { return N_; }
  std::size_t F() const noexcept { return F_; }
  std::size_t subfile_size() const noexcept { return size_; }

  std::span<const std::uint8_t> subfile(std::size_t n, std::size_t i) const {
    if (n >= N_ || i >= F_) throw std::out_of_range("sub-file index out of range");
    return {data_.data() + (n * F_ + i) * size_, size_};
  }
  std::span<std::uint8_t> subfile(std::size_t n, std::size_t i) {
    if (n >= N_ || i >= F_) throw std::out_of_range("sub-file index out of range");
    return {data_.data() + (n * F_ + i) * size_, size_};
  }

  /// The whole file n, sub-files in order.
  Bytes file(std::size_t n) const {
    const auto first = subfile(n, 0);
    return Bytes(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(F_ * size_));
  }

private:
  std::size_t N_, F_, size_;
  Bytes data_;
};

struct DemandVector {
  std::vector<std::size_t> d;

  DemandVector() = default;
  DemandVector(std::vector<std::size_t> demands, std::size_t files) : d(std::move(demands)) {
    for (std::size_t n : d)
      if (n >= files)
        throw std::invalid_argument("demand " + std::to_string(n) + " is not a file index below " +
                                    std::to_string(files));
  }

  static DemandVector random(std::size_t users, std::size_t files, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, files - 1);
    std::vector<std::size_t> d(users);
    for (auto& x : d) x = pick(rng);
    return DemandVector(std::move(d), files);
  }

  std::size_t size() const noexcept { return d.size(); }
  std::size_t operator[](std::size_t user) const { return d.at(user); }
};

/// Sub-file indices visible to user alpha through its L consecutive caches:
/// (k*alpha + i) mod K for i in [0, min(kL, K)), in that order.
inline std::vector<std::size_t> accessible(std::size_t alpha, const SchemeParams& params) {
  std::vector<std::size_t> out;
  const std::size_t n = params.accessible_count();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back((params.k * alpha + i) % params.K);
  return out;
}

/// Cache placement: cache alpha stores sub-files (k*alpha + j) mod K,
/// j in [0, k), of every file.
struct CacheNetwork {
  SchemeParams params;
  std::vector<std::vector<std::size_t>> cache_contents;

  std::vector<std::size_t> accessible(std::size_t alpha) const { return mcc::accessible(alpha, params); }
};

inline CacheNetwork place(const SchemeParams& params, const Library& library) {
  if (library.F() != params.K)
    throw StructuralError("library has " + std::to_string(library.F()) + " sub-files per file, expected K = " +
                          std::to_string(params.K));
  CacheNetwork net{params, {}};
  net.cache_contents.resize(params.K);
  for (std::size_t alpha = 0; alpha < params.K; ++alpha)
    for (std::size_t j = 0; j < params.k; ++j)
      net.cache_contents[alpha].push_back((params.k * alpha + j) % params.K);
  return net;
}

struct Operand {
  std::size_t user = 0;
  std::size_t subfile = 0;
  friend auto operator<=>(const Operand&, const Operand&) = default;
};

/// One broadcast symbol: the XOR of W_{d_j, i} over every (i, j) holding s.
struct Transmission {
  Symbol s = 0;
  Bytes payload;
  std::vector<Operand> operands;  // ordered by user
};

inline bool has_symbols(const Pda& pda) {
  return std::any_of(pda.cells().begin(), pda.cells().end(), [](Entry e) { return e.is_symbol(); });
}

/// Server side of the scheme: one transmission per symbol, ascending. An
/// array without symbols (trivial regime) yields no transmissions.
inline std::vector<Transmission> deliver(const Pda& pda, const Library& library, const DemandVector& d) {
  if (pda.cols() != d.size())
    throw StructuralError("demand vector length " + std::to_string(d.size()) + " does not match K = " +
                          std::to_string(pda.cols()));
  if (pda.rows() != library.F())
    throw StructuralError("PDA has " + std::to_string(pda.rows()) + " rows but files have " +
                          std::to_string(library.F()) + " sub-files");
  if (!has_symbols(pda)) return {};
  const ValidationReport report = validate(pda);
  if (!report.is_pda) throw InvalidPdaError("refusing to deliver with an array that is not a PDA");

  std::vector<Transmission> out(report.S);
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s].s = s;
    out[s].payload.assign(library.subfile_size(), 0);
  }
  for (std::size_t j = 0; j < pda.cols(); ++j)
    for (std::size_t i = 0; i < pda.rows(); ++i) {
      const Entry e = pda(i, j);
      if (e.is_star()) continue;
      Transmission& t = out[e.value()];
      t.operands.push_back({j, i});
      xor_into(t.payload, library.subfile(d[j], i));
    }
  return out;
}

/// Records which (file, sub-file) pairs a decoder read from cache.
struct AccessTrace {
  std::vector<std::pair<std::size_t, std::size_t>> reads;
};

/// Read-only window onto the library restricted to one user's accessible
/// sub-files. Any other read is a decode failure.
class UserCacheView {
public:
  UserCacheView(const Library& library, const CacheNetwork& net, std::size_t alpha, AccessTrace* trace = nullptr)
      : library_(library), alpha_(alpha), visible_(net.params.K, false), trace_(trace) {
    for (std::size_t i : net.accessible(alpha)) visible_[i] = true;
  }

  bool visible(std::size_t subfile) const { return subfile < visible_.size() && visible_[subfile]; }

  std::span<const std::uint8_t> read(std::size_t file, std::size_t subfile, std::optional<std::size_t> symbol) const {
    if (!visible(subfile))
      throw DecodeError(symbol, alpha_,
                        "user " + std::to_string(alpha_) + " cannot see sub-file " + std::to_string(subfile) +
                            (symbol ? " needed for symbol " + std::to_string(*symbol) : std::string()));
    if (trace_) trace_->reads.emplace_back(file, subfile);
    return library_.subfile(file, subfile);
  }

private:
  const Library& library_;
  std::size_t alpha_;
  std::vector<bool> visible_;
  AccessTrace* trace_;
};

/// Recovers every sub-file of W_{d_alpha}: starred rows straight from the
/// accessible caches, the rest by cancelling the other operands out of the
/// matching transmission.
inline std::vector<Bytes> decode(std::size_t alpha, std::span<const Transmission> transmissions, const Pda& pda,
                                 const CacheNetwork& net, const Library& library, const DemandVector& d,
                                 AccessTrace* trace = nullptr) {
  if (alpha >= pda.cols()) throw std::out_of_range("user index out of range");
  const UserCacheView view(library, net, alpha, trace);
  const std::size_t want = d[alpha];

  std::map<Symbol, const Transmission*> by_symbol;
  for (const Transmission& t : transmissions) by_symbol[t.s] = &t;

  std::vector<Bytes> out(pda.rows());
  for (std::size_t i = 0; i < pda.rows(); ++i) {
    const Entry e = pda(i, alpha);
    if (e.is_star()) {
      const auto src = view.read(want, i, std::nullopt);
      out[i].assign(src.begin(), src.end());
      continue;
    }
    const std::size_t s = e.value();
    const auto it = by_symbol.find(s);
    if (it == by_symbol.end())
      throw DecodeError(s, alpha, "transmission for symbol " + std::to_string(s) + " is missing");
    const Transmission& t = *it->second;
    out[i] = t.payload;
    for (const Operand& op : t.operands) {
      if (op.user == alpha && op.subfile == i) continue;
      xor_into(out[i], view.read(d[op.user], op.subfile, s));
    }
  }
  return out;
}

struct SimReport {
  std::size_t K = 0, k = 0, L = 0, N = 0;
  std::size_t subfile_size = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> demands;
  std::size_t transmissions = 0;
  Rational rate_measured;                            // transmissions / F, in files
  std::map<std::size_t, std::size_t> gain_histogram;  // beneficiaries -> transmissions
  std::vector<bool> decode_ok;
  std::vector<std::string> decode_errors;  // empty string when ok
  std::size_t bytes_sent = 0;

  bool all_decoded() const { return std::all_of(decode_ok.begin(), decode_ok.end(), [](bool b) { return b; }); }
};

/// End to end run: construct, random library and demands from seed, place,
/// deliver, decode every user and compare against the library. Demands, when
/// given, override the random ones.
inline SimReport simulate(std::size_t K, std::size_t k, std::size_t L, std::size_t N, std::size_t subfile_size,
                          std::uint64_t seed, std::optional<std::vector<std::size_t>> demands = std::nullopt) {
  const SchemeParams params = check_params(K, k, L, N, TrivialPolicy::accept);
  const Pda pda = params.trivial ? Pda(K, K) : construct(params);
  const Library library = Library::random(N, K, subfile_size, seed);
  const DemandVector d = demands ? DemandVector(std::move(*demands), N)
                                 : DemandVector::random(K, N, seed ^ 0x9e3779b97f4a7c15ULL);
  if (d.size() != K)
    throw std::invalid_argument("expected " + std::to_string(K) + " demands, got " + std::to_string(d.size()));

  const CacheNetwork net = place(params, library);
  const std::vector<Transmission> tx = deliver(pda, library, d);

  SimReport r;
  r.K = K;
  r.k = k;
  r.L = L;
  r.N = N;
  r.subfile_size = subfile_size;
  r.seed = seed;
  r.demands = d.d;
  r.transmissions = tx.size();
  r.rate_measured = Rational(tx.size(), params.F);
  r.bytes_sent = tx.size() * subfile_size;
  for (const Transmission& t : tx) ++r.gain_histogram[t.operands.size()];

  r.decode_ok.assign(K, false);
  r.decode_errors.assign(K, {});
  for (std::size_t alpha = 0; alpha < K; ++alpha) {
    try {
      const std::vector<Bytes> parts = decode(alpha, tx, pda, net, library, d);
      Bytes joined;
      joined.reserve(K * subfile_size);
      for (const Bytes& part : parts) joined.insert(joined.end(), part.begin(), part.end());
      r.decode_ok[alpha] = joined == library.file(d[alpha]);
      if (!r.decode_ok[alpha]) r.decode_errors[alpha] = "decoded bytes differ from the requested file";
    } catch (const DecodeError& e) {
      r.decode_errors[alpha] = e.what();
    }
  }
  return r;
}

}  // namespace mcc

#endif  // MCC_SIM_HPP

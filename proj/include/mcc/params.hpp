#ifndef MCC_PARAMS_HPP
#define MCC_PARAMS_HPP

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "mcc/errors.hpp"

namespace mcc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class TrivialPolicy { reject, accept };

/// Validated multi-access configuration: K users and caches, each cache
/// holding k of the K sub-files of every file, each user reading L
/// consecutive caches, N files.
///
/// In the trivial regime (kL >= K) only K, k, L, N and the placement are
/// meaningful; every construction quantity below is zero.
struct SchemeParams {
  std::size_t K = 0;
  std::size_t k = 0;
  std::size_t L = 0;
  std::size_t N = 0;

  bool trivial = false;
  bool demands_may_repeat = false;  // N < K

  std::size_t m = 0;          // block count K / (K - kL + k)
  std::size_t A_dim = 0;      // (K - kL) / k + 1
  std::size_t S1 = 0;         // symbols in A
  std::size_t S1_tilde = 0;   // symbols per column part, k * S1
  std::size_t g = 0;          // occurrences per symbol
  std::size_t S_total = 0;
  std::size_t Z = 0;          // stars per column, kL
  std::size_t F = 0;          // sub-packetization, K

  Rational gamma() const { return Rational(k, K); }
  /// Sub-files visible to a user, capped at K.
  std::size_t accessible_count() const { return k * L < K ? k * L : K; }
};

/// Validates (K, k, L, N) for the cyclic construction and fills in the
/// derived quantities. Throws ParamError naming the failed condition.
inline SchemeParams check_params(std::size_t K, std::size_t k, std::size_t L, std::size_t N,
                                 TrivialPolicy policy = TrivialPolicy::reject) {
  auto fail = [](ParamErrorKind kind, const std::string& msg) -> void { throw ParamError(kind, msg); };
  if (K == 0 || k == 0 || L == 0 || N == 0)
    fail(ParamErrorKind::not_positive, "K, k, L and N must be positive");
  if (k > K || K % k != 0)
    fail(ParamErrorKind::k_not_dividing_K,
         "k = " + std::to_string(k) + " does not divide K = " + std::to_string(K));

  SchemeParams p;
  p.K = K;
  p.k = k;
  p.L = L;
  p.N = N;
  p.demands_may_repeat = N < K;
  p.F = K;

  if (k * L >= K) {
    if (policy == TrivialPolicy::reject)
      fail(ParamErrorKind::trivial_regime,
           "kL = " + std::to_string(k * L) + " >= K = " + std::to_string(K) +
               ", every user sees all sub-files and the rate is 0");
    p.trivial = true;
    p.Z = K;
    return p;
  }

  const std::size_t block = K - k * L + k;
  if (K % block != 0)
    fail(ParamErrorKind::block_not_dividing_K,
         "K - kL + k = " + std::to_string(block) + " does not divide K = " + std::to_string(K));
  p.m = K / block;
  if (p.m < 2)
    fail(ParamErrorKind::degenerate_block_count,
         "K / (K - kL + k) = 1, the block layout needs at least two blocks");

  const std::size_t gap = K - k * L;
  p.A_dim = gap / k + 1;
  // k | K gives k | block and k | gap; the checks below can only fire on a bug.
  if (gap % k != 0 || (gap * block) % (2 * k * k) != 0 || (2 * K) % block != 0)
    throw std::logic_error("derived quantities are not integral");
  p.S1 = gap * block / (2 * k * k);
  p.S1_tilde = k * p.S1;
  p.S_total = gap * block / 2;
  p.g = 2 * K / block;
  p.Z = k * L;
  return p;
}

}  // namespace mcc

#endif  // MCC_PARAMS_HPP

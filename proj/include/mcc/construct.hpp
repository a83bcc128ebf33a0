#ifndef MCC_CONSTRUCT_HPP
#define MCC_CONSTRUCT_HPP

#include <cstddef>
#include <vector>

#include "mcc/params.hpp"
#include "mcc/pda.hpp"

namespace mcc {

/// Upper-triangular seed block of side A_dim. Row 0 holds 0, 1, ... after the
/// diagonal star; each later row continues the numbering column by column so
/// every symbol in [0, S1) appears exactly once.
inline Pda build_A(const SchemeParams& params) {
  const std::size_t n = params.A_dim;
  const std::size_t last = n - 1;  // (K - kL) / k
  Pda a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      a(i, j) = i == 0 ? Entry::symbol(j - 1) : a(i - 1, j) + (last - i);
  return a;
}

/// Block-circulant (K/k) x (K/k) array with m blocks per side: A on the block
/// diagonal, A^T one block to the right (wrapping to the bottom-left), stars
/// everywhere else.
inline Pda build_P1(const Pda& A, const SchemeParams& params) {
  const std::size_t d = A.rows();
  const std::size_t m = params.m;
  const Pda At = transpose(A);
  Pda p1(m * d, m * d);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      const Pda* block = r == c ? &A : (c == (r + 1) % m ? &At : nullptr);
      if (!block) continue;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p1(r * d + i, c * d + j) = (*block)(i, j);
    }
  return p1;
}

/// Stretches P1 to K rows: row i copies row i/k of P1 when k | i, otherwise
/// it repeats the previous row with every symbol raised by S1.
inline Pda expand_rows(const Pda& P1, const SchemeParams& params) {
  const std::size_t k = params.k;
  Pda out(P1.rows() * k, P1.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = i % k == 0 ? P1(i / k, j) : out(i - 1, j) + params.S1;
  return out;
}

/// The K x K k-cyclic PDA: k copies of the expanded array side by side, the
/// t-th copy offset by t * S1_tilde.
inline Pda construct(const SchemeParams& params) {
  const Pda expanded = expand_rows(build_P1(build_A(params), params), params);
  std::vector<Pda> parts;
  parts.reserve(params.k);
  for (std::size_t t = 0; t < params.k; ++t) parts.push_back(shift_add(expanded, t * params.S1_tilde));
  return concat_columns(parts);
}

inline Pda construct(std::size_t K, std::size_t k, std::size_t L) {
  return construct(check_params(K, k, L, K));
}

}  // namespace mcc

#endif  // MCC_CONSTRUCT_HPP

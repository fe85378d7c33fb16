#pragma once

#include <random>

#include "superlie/superalg.hpp"

namespace superlie::testing {

inline FieldElem small(std::mt19937& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  return FieldElem(d(rng));
}

inline FMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  FMatrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A(i, j) = small(rng);
  return A;
}

inline FMatrix random_invertible(std::mt19937& rng, std::size_t k) {
  for (;;) {
    FMatrix A = random_matrix(rng, k, k);
    if (rank(A) == k) return A;
  }
}

inline FMatrix random_graded(std::mt19937& rng, std::size_t m, std::size_t n) {
  return block_diag(random_invertible(rng, m), random_invertible(rng, n));
}

}  // namespace superlie::testing

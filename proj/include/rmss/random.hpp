#pragma once

#include "rmss/rank_code.hpp"

#include <cstdint>
#include <random>

namespace rmss {

/// Deterministic draws for randomized suites. Bounded draws use plain modulo
/// on mt19937_64 output so that results match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }
  Elem element(const FiniteField& f) { return static_cast<Elem>(below(f.order())); }

 private:
  std::mt19937_64 gen_;
};

Mat random_matrix(Rng& rng, const FiniteField& f, std::size_t rows, std::size_t cols);
/// Span of k random generators; the dimension may fall below k.
RankMetricCode random_code(Rng& rng, const FiniteField& f, std::size_t n, std::size_t m, std::size_t k);
Subspace random_subspace(Rng& rng, const FiniteField& f, std::size_t n, std::size_t dim);
/// A random W with V + W = F_q^n direct.
Subspace random_complement(Rng& rng, const Subspace& v);
Mat random_invertible(Rng& rng, const FiniteField& f, std::size_t n);

}  // namespace rmss

#include "rmss/random.hpp"

namespace rmss {

Mat random_matrix(Rng& rng, const FiniteField& f, std::size_t rows, std::size_t cols) {
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.element(f);
  return m;
}

RankMetricCode random_code(Rng& rng, const FiniteField& f, std::size_t n, std::size_t m, std::size_t k) {
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_matrix(rng, f, n, m));
  if (gens.empty()) return RankMetricCode::zero(f, n, m);
  return RankMetricCode::from_basis(gens);
}

Subspace random_subspace(Rng& rng, const FiniteField& f, std::size_t n, std::size_t dim) {
  for (;;) {
    const Mat g = random_matrix(rng, f, dim, n);
    if (rank(g) == dim) return Subspace::from_rows(g);
  }
}

Subspace random_complement(Rng& rng, const Subspace& v) {
  const std::size_t want = v.ambient_dim() - v.dim();
  for (;;) {
    const Subspace w = random_subspace(rng, v.field(), v.ambient_dim(), want);
    if (intersect(v, w).dim() == 0) return w;
  }
}

Mat random_invertible(Rng& rng, const FiniteField& f, std::size_t n) {
  for (;;) {
    Mat m = random_matrix(rng, f, n, n);
    if (rank(m) == n) return m;
  }
}

}  // namespace rmss

#pragma once

// Brute-force oracles for prime fields. They share no code with the library's
// elimination routines: vectors are enumerated, spans are closed by brute
// force, and arithmetic is integer mod p.

#include "rmss/field.hpp"
#include "rmss/matrix.hpp"
#include "rmss/rank_code.hpp"
#include "rmss/subspace.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using VecSet = std::set<Vec>;

inline std::vector<Vec> all_vectors(int p, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline int dot(const Vec& a, const Vec& b, int p) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return static_cast<int>(s % p);
}

inline Vec axpy(const Vec& x, int a, const Vec& y, int p) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + a * y[i]) % p;
  return r;
}

/// Every vector in the span of `gens`, by repeated closure.
inline VecSet span(const std::vector<Vec>& gens, int p, std::size_t n) {
  VecSet s{Vec(n, 0)};
  for (const auto& g : gens) {
    VecSet next;
    for (const auto& v : s)
      for (int a = 0; a < p; ++a) next.insert(axpy(v, a, g, p));
    s = std::move(next);
  }
  return s;
}

inline std::vector<Vec> rows_of(const rmss::Mat& m) {
  std::vector<Vec> out;
  for (const auto& r : m.to_ints()) out.emplace_back(r.begin(), r.end());
  return out;
}

inline VecSet vectors_of(const rmss::Subspace& v) {
  return span(rows_of(v.basis()), static_cast<int>(v.field().order()), v.ambient_dim());
}

/// log_p |S| for a set known to have p-power size.
inline std::size_t log_size(std::size_t size, int p) {
  std::size_t d = 0;
  while (size > 1) {
    size /= static_cast<std::size_t>(p);
    ++d;
  }
  return d;
}

inline std::size_t matrix_rank(const rmss::Mat& m) {
  const int p = static_cast<int>(m.field().order());
  return log_size(span(rows_of(m), p, m.cols()).size(), p);
}

inline VecSet orthocomplement(const rmss::Subspace& v) {
  const int p = static_cast<int>(v.field().order());
  const auto basis = rows_of(v.basis());
  VecSet out;
  for (const auto& w : all_vectors(p, v.ambient_dim())) {
    bool ok = true;
    for (const auto& b : basis) ok = ok && dot(b, w, p) == 0;
    if (ok) out.insert(w);
  }
  return out;
}

/// Number of distinct subspaces of dimension k, found by spanning every
/// k-tuple of vectors and de-duplicating the resulting vector sets.
inline std::size_t count_subspaces(int p, std::size_t n, std::size_t k) {
  const auto vs = all_vectors(p, n);
  std::set<VecSet> seen;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Vec> gens;
    for (auto i : idx) gens.push_back(vs[i]);
    auto s = span(gens, p, n);
    if (log_size(s.size(), p) == k) seen.insert(std::move(s));
    std::size_t i = 0;
    while (i < k && ++idx[i] == vs.size()) idx[i++] = 0;
    if (i == k) break;
  }
  return seen.size();
}

/// All codewords of C as integer matrices (row-major), by combining generators.
inline std::vector<std::vector<Vec>> codewords(const rmss::RankMetricCode& c) {
  const int p = static_cast<int>(c.field().order());
  std::vector<std::vector<Vec>> out;
  const auto coeffs = all_vectors(p, c.dim());
  for (const auto& a : coeffs) {
    std::vector<Vec> x(c.n(), Vec(c.m(), 0));
    for (std::size_t j = 0; j < c.dim(); ++j) {
      const auto g = rows_of(c.basis()[j]);
      for (std::size_t r = 0; r < c.n(); ++r) x[r] = axpy(x[r], a[j], g[r], p);
    }
    out.push_back(std::move(x));
  }
  return out;
}

/// dim C(V): codewords whose every column lies in V.
inline std::size_t shortened_dim(const rmss::RankMetricCode& c, const rmss::Subspace& v) {
  const int p = static_cast<int>(c.field().order());
  const auto inside = vectors_of(v);
  std::size_t count = 0;
  for (const auto& x : codewords(c)) {
    bool ok = true;
    for (std::size_t col = 0; ok && col < c.m(); ++col) {
      Vec column(c.n());
      for (std::size_t r = 0; r < c.n(); ++r) column[r] = x[r][col];
      ok = inside.count(column) != 0;
    }
    count += ok;
  }
  return log_size(count, p);
}

/// (dim C - dim C(V^perp)) / m as a numerator over m.
inline std::int64_t rank_numerator(const rmss::RankMetricCode& c, const rmss::Subspace& v) {
  return static_cast<std::int64_t>(c.dim()) - static_cast<std::int64_t>(shortened_dim(c, rmss::orthocomplement(v)));
}

/// G X with integer arithmetic.
inline std::vector<Vec> times(const std::vector<Vec>& g, const std::vector<Vec>& x, int p) {
  std::vector<Vec> out;
  for (const auto& row : g) {
    Vec r(x.empty() ? 0 : x[0].size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) r = axpy(r, row[i], x[i], p);
    out.push_back(std::move(r));
  }
  return out;
}

/// Entropy in bits of the tuple (G_1 X, ..., G_l X) for X uniform in C.
inline double projection_entropy(const rmss::RankMetricCode& c, const std::vector<rmss::Subspace>& vs) {
  const int p = static_cast<int>(c.field().order());
  std::map<std::vector<std::vector<Vec>>, std::size_t> counts;
  const auto words = codewords(c);
  for (const auto& x : words) {
    std::vector<std::vector<Vec>> key;
    for (const auto& v : vs) key.push_back(times(rows_of(v.basis()), x, p));
    ++counts[key];
  }
  double h = 0;
  for (const auto& [k, n] : counts) {
    const double pr = static_cast<double>(n) / static_cast<double>(words.size());
    h -= pr * std::log2(pr);
  }
  return h;
}

/// Number of invertible n x n matrices over F_p by rank of every matrix.
inline std::size_t count_invertible(int p, std::size_t n) {
  std::size_t count = 0;
  for (const auto& flat : all_vectors(p, n * n)) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < n; ++r) rows.emplace_back(flat.begin() + r * n, flat.begin() + (r + 1) * n);
    if (span(rows, p, n).size() == static_cast<std::size_t>(std::pow(p, n))) ++count;
  }
  return count;
}

}  // namespace oracle

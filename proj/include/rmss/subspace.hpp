#pragma once

#include "rmss/matrix.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace rmss {

/// A subspace V of F_q^n, held as its unique reduced row-echelon generator
/// matrix without zero rows. That matrix doubles as the public generator G_V
/// used by the secret-sharing engine.
class Subspace {
 public:
  /// Row space of `m`; ambient dimension is m.cols().
  static Subspace from_rows(const Mat& m);
  static Subspace zero(const FiniteField& f, std::size_t n);
  static Subspace full(const FiniteField& f, std::size_t n);
  /// Convenience: span of integer row vectors of length n.
  static Subspace span(const FiniteField& f, std::size_t n, const std::vector<std::vector<long long>>& rows);

  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const FiniteField& field() const { return basis_.field(); }

  /// True when w is a subspace of *this.
  bool contains(const Subspace& w) const;
  bool contains_vector(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Canonical lattice order: ambient dimension, then dimension, then
  /// lexicographic on the canonical basis entries.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(Mat basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& v) const noexcept;
};

Subspace sum(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);
/// True when w <= v.
inline bool contains(const Subspace& v, const Subspace& w) { return v.contains(w); }

/// Symmetric non-degenerate bilinear form <x, y> = x G y^T on F_q^n.
class BilinearForm {
 public:
  /// Throws InputError if `gram` is not square, symmetric and invertible.
  explicit BilinearForm(Mat gram);
  static BilinearForm standard(const FiniteField& f, std::size_t n);

  const Mat& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }
  bool is_standard() const;

 private:
  Mat gram_;
};

/// V^perp under the standard dot product.
Subspace orthocomplement(const Subspace& v);
Subspace orthocomplement(const Subspace& v, const BilinearForm& form);
/// True when Z cap Z^perp = 0 under `form`.
bool is_nondegenerate_on(const BilinearForm& form, const Subspace& z);

/// Concrete chart for E/Z with E = F_q^n. The complement is spanned by the
/// standard basis vectors at the non-pivot columns of Z's canonical basis, and
/// quotient coordinates are the entries at those columns after reducing
/// modulo Z.
class QuotientMap {
 public:
  explicit QuotientMap(Subspace kernel);

  const Subspace& kernel() const { return kernel_; }
  const Subspace& complement() const { return complement_; }
  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  std::size_t quotient_dim() const { return complement_.dim(); }
  /// Rows are the complement's standard basis vectors; maps quotient
  /// coordinates back to a representative in E.
  const Mat& section() const { return complement_.basis(); }

  std::vector<Elem> forward_vector(std::span<const Elem> x) const;
  /// pi(V) in quotient coordinates, for any V <= E.
  Subspace forward(const Subspace& v) const;
  /// pi^{-1}(V) <= E for V <= E/Z.
  Subspace backward(const Subspace& v) const;
  /// Matrix of pi on row vectors (n x (n - dim Z)).
  Mat matrix() const;

 private:
  Subspace kernel_;
  Subspace complement_;
};

QuotientMap quotient_setup(std::size_t ambient_dim, const Subspace& z);

/// Image of a subspace of F_q^d under the chart F_q^d -> F_q^N whose rows are
/// the (linearly independent) rows of `chart`.
Subspace embed(const Subspace& local, const Mat& chart);
/// Coordinates of v <= rowspace(chart) with respect to the chart rows.
/// Throws InputError when v is not inside the chart's row space.
Subspace localize(const Subspace& v, const Mat& chart);
/// Image of V under the linear map x -> x A (A square, invertible).
Subspace apply(const Subspace& v, const Mat& a);

}  // namespace rmss

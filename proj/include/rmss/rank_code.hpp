#pragma once

#include "rmss/limits.hpp"
#include "rmss/matrix.hpp"
#include "rmss/rational.hpp"
#include "rmss/subspace.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rmss {

class QPolymatroid;

/// An F_q-linear rank-metric code C <= F_q^{n x m}.
///
/// `basis()` keeps the independent generators in the order given (dependent
/// ones are dropped). Equality compares the RREF of the flattened k x nm
/// generator matrix, so it does not depend on generator order.
class RankMetricCode {
 public:
  /// Throws InputError on an empty generator list without shape, mismatched
  /// shapes or fields, or an empty ambient (n = 0 or m = 0).
  static RankMetricCode from_basis(const std::vector<Mat>& generators);
  /// The zero code in F_q^{n x m}.
  static RankMetricCode zero(const FiniteField& f, std::size_t n, std::size_t m);
  /// All of F_q^{n x m}.
  static RankMetricCode full(const FiniteField& f, std::size_t n, std::size_t m);

  const FiniteField& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Mat>& basis() const { return basis_; }
  /// k x nm, in RREF.
  const Mat& canonical() const { return canonical_; }
  /// k x nm, rows are the flattened basis matrices.
  Mat generator() const;

  /// sum_i coeffs[i] * basis[i].
  Mat codeword(std::span<const Elem> coeffs) const;
  /// Calls `visit` with every codeword, coefficient vectors in lexicographic
  /// order. Throws LimitExceeded when q^k exceeds limits.max_codewords.
  void for_each_codeword(const std::function<void(std::span<const Elem>, const Mat&)>& visit,
                         const Limits& limits = {}) const;
  bool contains(const Mat& x) const;

  friend bool operator==(const RankMetricCode& a, const RankMetricCode& b);

 private:
  RankMetricCode(FiniteField f, std::size_t n, std::size_t m, std::vector<Mat> basis);
  FiniteField field_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Mat> basis_;
  Mat canonical_;
};

inline RankMetricCode code_from_basis(const std::vector<Mat>& mats) { return RankMetricCode::from_basis(mats); }

/// C^perp under the trace form tr(X Y^T).
RankMetricCode dual_code(const RankMetricCode& c);

/// The shortening C(V) = {X in C : colsp(X) <= V}.
RankMetricCode shorten(const RankMetricCode& c, const Subspace& v);

/// min rank over nonzero codewords by exhaustive scan.
/// Throws InputError for the zero code, LimitExceeded beyond the guard.
std::size_t min_rank_distance(const RankMetricCode& c, const Limits& limits = {});

struct SingletonReport {
  std::size_t min_distance;
  std::size_t bound;
  bool is_mrd;
};

/// bound = max(m,n) * (min(m,n) - d_rk + 1), MRD iff dim C equals it.
SingletonReport singleton_check(const RankMetricCode& c, const Limits& limits = {});

/// Gabidulin code: q-degree < k linearized polynomials over F_{q^m}
/// evaluated at 1, a, ..., a^{n-1} (a a root of the F_{q^m} modulus), each
/// value expanded in the basis 1, a, ..., a^{m-1} as one matrix row.
/// dim over F_q is k*m and d_rk = n - k + 1. Requires 1 <= k <= n <= m.
RankMetricCode gabidulin(std::size_t n, std::size_t k, const FiniteField& f, std::size_t m = 0,
                         const Limits& limits = {});

/// rho_C(V) = (dim C - dim C(V^perp)) / m.
Rational induced_rank(const RankMetricCode& c, const Subspace& v);

/// The q-polymatroid (F_q^n, rho_C).
QPolymatroid induced_qpolymatroid(const RankMetricCode& c);

}  // namespace rmss

#include "rmss/rank_code.hpp"

#include "poly.hpp"
#include "rmss/errors.hpp"
#include "rmss/qpolymatroid.hpp"

#include <algorithm>
#include <limits>

namespace rmss {

namespace {

std::uint64_t codeword_count(const FiniteField& f, std::size_t k) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > std::numeric_limits<std::uint64_t>::max() / f.order()) return std::numeric_limits<std::uint64_t>::max();
    count *= f.order();
  }
  return count;
}

}  // namespace

RankMetricCode::RankMetricCode(FiniteField f, std::size_t n, std::size_t m, std::vector<Mat> basis)
    : field_(f), n_(n), m_(m), basis_(std::move(basis)), canonical_(f, 0, n * m) {
  canonical_ = rref(generator()).reduced;
}

RankMetricCode RankMetricCode::from_basis(const std::vector<Mat>& generators) {
  if (generators.empty()) throw InputError("code_from_basis: no generators (use RankMetricCode::zero)");
  const Mat& first = generators.front();
  const std::size_t n = first.rows();
  const std::size_t m = first.cols();
  if (n == 0 || m == 0) throw InputError("code_from_basis: empty ambient space");
  std::vector<Mat> kept;
  Mat flat(first.field(), 0, n * m);
  for (const Mat& g : generators) {
    if (!(g.field() == first.field())) throw InputError("code_from_basis: generators over different fields");
    if (g.rows() != n || g.cols() != m) throw InputError("code_from_basis: generators of different shapes");
    Mat grown = flat.vstack(g.flatten());
    if (rank(grown) > kept.size()) {
      kept.push_back(g);
      flat = std::move(grown);
    }
  }
  return RankMetricCode(first.field(), n, m, std::move(kept));
}

RankMetricCode RankMetricCode::zero(const FiniteField& f, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw InputError("zero code: empty ambient space");
  return RankMetricCode(f, n, m, {});
}

RankMetricCode RankMetricCode::full(const FiniteField& f, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw InputError("full code: empty ambient space");
  std::vector<Mat> basis;
  for (std::size_t i = 0; i < n * m; ++i) {
    Mat e(f, n, m);
    e(i / m, i % m) = 1;
    basis.push_back(std::move(e));
  }
  return RankMetricCode(f, n, m, std::move(basis));
}

Mat RankMetricCode::generator() const {
  Mat g(field_, basis_.size(), n_ * m_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    std::copy(basis_[i].entries().begin(), basis_[i].entries().end(), g.row(i).begin());
  return g;
}

Mat RankMetricCode::codeword(std::span<const Elem> coeffs) const {
  if (coeffs.size() != basis_.size()) throw InputError("codeword: coefficient count differs from dim C");
  Mat x(field_, n_, m_);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) x = x + coeffs[i] * basis_[i];
  return x;
}

void RankMetricCode::for_each_codeword(const std::function<void(std::span<const Elem>, const Mat&)>& visit,
                                       const Limits& limits) const {
  const std::uint64_t count = codeword_count(field_, dim());
  if (count > limits.max_codewords)
    throw LimitExceeded("scanning " + std::to_string(count) + " codewords exceeds the guard of " +
                        std::to_string(limits.max_codewords));
  std::vector<Elem> coeffs(dim(), 0);
  const unsigned q = field_.order();
  while (true) {
    visit(coeffs, codeword(coeffs));
    std::size_t i = coeffs.size();
    while (i > 0) {
      if (coeffs[i - 1] + 1u < q) {
        ++coeffs[i - 1];
        break;
      }
      coeffs[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

bool RankMetricCode::contains(const Mat& x) const {
  if (!(x.field() == field_) || x.rows() != n_ || x.cols() != m_) return false;
  return rank(canonical_.vstack(x.flatten())) == dim();
}

bool operator==(const RankMetricCode& a, const RankMetricCode& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.canonical_ == b.canonical_;
}

RankMetricCode dual_code(const RankMetricCode& c) {
  // tr(X Y^T) is the dot product of the flattened matrices.
  const Mat kernel = null_space(c.generator());
  std::vector<Mat> basis;
  for (std::size_t r = 0; r < kernel.rows(); ++r) basis.push_back(Mat::unflatten(kernel.row(r), c.field(), c.n(), c.m()));
  if (basis.empty()) return RankMetricCode::zero(c.field(), c.n(), c.m());
  return RankMetricCode::from_basis(basis);
}

RankMetricCode shorten(const RankMetricCode& c, const Subspace& v) {
  if (v.ambient_dim() != c.n() || !(v.field() == c.field())) throw InputError("shorten: V is not a subspace of F_q^n");
  if (c.dim() == 0) return c;
  // colsp(X) <= V  <=>  h X = 0 for every h in V^perp.
  const Mat h = orthocomplement(v).basis();
  Mat constraints(c.field(), c.dim(), h.rows() * c.m());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Mat hx = h * c.basis()[i];
    std::copy(hx.entries().begin(), hx.entries().end(), constraints.row(i).begin());
  }
  const Mat coeffs = null_space(constraints.transpose());
  if (coeffs.rows() == 0) return RankMetricCode::zero(c.field(), c.n(), c.m());
  std::vector<Mat> basis;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) basis.push_back(c.codeword(coeffs.row(r)));
  return RankMetricCode::from_basis(basis);
}

std::size_t min_rank_distance(const RankMetricCode& c, const Limits& limits) {
  if (c.dim() == 0) throw InputError("min_rank_distance: the zero code has no nonzero codeword");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  c.for_each_codeword(
      [&](std::span<const Elem> coeffs, const Mat& x) {
        if (std::all_of(coeffs.begin(), coeffs.end(), [](Elem e) { return e == 0; })) return;
        best = std::min(best, rank(x));
      },
      limits);
  return best;
}

SingletonReport singleton_check(const RankMetricCode& c, const Limits& limits) {
  const std::size_t d = min_rank_distance(c, limits);
  const std::size_t lo = std::min(c.m(), c.n());
  const std::size_t hi = std::max(c.m(), c.n());
  const std::size_t bound = hi * (lo - d + 1);
  return {d, bound, c.dim() == bound};
}

namespace {

// F_{q^m} as F_q[x]/(g); elements are coefficient vectors of length m.
class ExtensionField {
 public:
  ExtensionField(FiniteField base, std::size_t m, const Limits& limits)
      : base_(std::move(base)), m_(m), modulus_(detail::least_irreducible(base_, static_cast<unsigned>(m), limits.max_enum)) {}

  detail::Poly one() const {
    detail::Poly e(m_, 0);
    e[0] = 1;
    return e;
  }
  // The class of x. For m = 1 this is the root of the linear modulus.
  detail::Poly generator() const { return reduce({0, 1}); }

  detail::Poly mul(const detail::Poly& a, const detail::Poly& b) const { return reduce(detail::poly_mul(base_, a, b)); }

  detail::Poly pow(detail::Poly a, std::uint64_t e) const {
    detail::Poly r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

 private:
  detail::Poly reduce(detail::Poly a) const {
    a = detail::poly_mod(base_, std::move(a), modulus_);
    a.resize(m_, 0);
    return a;
  }
  FiniteField base_;
  std::size_t m_;
  detail::Poly modulus_;
};

}  // namespace

RankMetricCode gabidulin(std::size_t n, std::size_t k, const FiniteField& f, std::size_t m, const Limits& limits) {
  if (m == 0) m = n;
  if (k == 0 || k > n || n > m) throw InputError("gabidulin: requires 1 <= k <= n <= m");
  const ExtensionField ext(f, m, limits);
  const detail::Poly alpha = ext.generator();
  std::vector<detail::Poly> points;
  for (std::size_t j = 0; j < n; ++j) points.push_back(ext.pow(alpha, j));

  std::vector<Mat> generators;
  for (std::size_t i = 0; i < k; ++i) {
    // g^{q^i} for each evaluation point g
    std::vector<detail::Poly> frob = points;
    for (auto& g : frob)
      for (std::size_t s = 0; s < i; ++s) g = ext.pow(g, f.order());
    for (std::size_t t = 0; t < m; ++t) {
      const detail::Poly coeff = ext.pow(alpha, t);
      Mat x(f, n, m);
      for (std::size_t j = 0; j < n; ++j) {
        const detail::Poly value = ext.mul(coeff, frob[j]);
        std::copy(value.begin(), value.end(), x.row(j).begin());
      }
      generators.push_back(std::move(x));
    }
  }
  return RankMetricCode::from_basis(generators);
}

Rational induced_rank(const RankMetricCode& c, const Subspace& v) {
  if (v.ambient_dim() != c.n() || !(v.field() == c.field())) throw InputError("induced_rank: V is not a subspace of F_q^n");
  const RankMetricCode shortened = shorten(c, orthocomplement(v));
  return Rational(static_cast<std::int64_t>(c.dim() - shortened.dim()), static_cast<std::int64_t>(c.m()));
}

QPolymatroid induced_qpolymatroid(const RankMetricCode& c) {
  return QPolymatroid(c.field(), c.n(), [c](const Subspace& v) { return induced_rank(c, v); });
}

}  // namespace rmss

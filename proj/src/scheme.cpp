#include "rmss/scheme.hpp"

#include "rmss/errors.hpp"
#include "rmss/lattice.hpp"

#include <cmath>
#include <limits>

namespace rmss {

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Row i is the flattening of h * basis[i].
Mat coalition_matrix(const RankMetricCode& c, const Mat& h) {
  if (h.cols() != c.n()) throw InputError("generator width does not match the code's n");
  Mat out(c.field(), c.dim(), h.rows() * c.m());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Mat prod = h * c.basis()[i];
    const auto& e = prod.entries();
    for (std::size_t j = 0; j < e.size(); ++j) out(i, j) = e[j];
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) throw LimitExceeded("q^e exceeds 64 bits");
    r *= q;
  }
  return r;
}

void require_complementary(const Subspace& p0, const Subspace& p, std::size_t n) {
  if (p0.ambient_dim() != n || p.ambient_dim() != n) throw InputError("dealer and player spaces must live in F_q^n");
  if (p0.dim() + p.dim() != n || intersect(p0, p).dim() != 0)
    throw InputError("dealer and player spaces are not complementary");
}

// Visits every vector of F_q^k in lexicographic order.
template <class Fn>
void for_each_vector(const FiniteField& f, std::size_t k, const Limits& limits, Fn&& fn) {
  const std::uint64_t total = checked_pow(f.order(), k);
  if (total > limits.max_codewords) throw LimitExceeded("q^k = " + std::to_string(total) + " exceeds max-codewords");
  std::vector<Elem> a(k, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    fn(static_cast<const std::vector<Elem>&>(a));
    for (std::size_t i = k; i-- > 0;) {
      if (++a[i] < f.order()) break;
      a[i] = 0;
    }
  }
}

// Reduces coefficient vectors modulo the row space of a matrix in RREF.
struct CosetReducer {
  Mat basis;
  std::vector<std::size_t> pivots;

  explicit CosetReducer(const Mat& kernel) : basis(kernel), pivots(rref(kernel).pivots) {}

  void reduce(std::vector<Elem>& a) const {
    const auto& f = basis.field();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Elem s = a[pivots[i]];
      if (s == 0) continue;
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = f.sub(a[j], f.mul(s, basis(i, j)));
    }
  }
};

CosetReducer reducer_for(const RankMetricCode& c, const Subspace& v) {
  if (v.ambient_dim() != c.n()) throw InputError("subspace does not live in F_q^n");
  return CosetReducer(null_space(coalition_matrix(c, v.basis()).transpose()));
}

}  // namespace

SchemeInstance deal(const RankMetricCode& c, const Subspace& p0, const Subspace& p, const Mat& secret,
                    std::uint64_t seed) {
  require_complementary(p0, p, c.n());
  const Mat a = coalition_matrix(c, p0.basis());
  if (rank(a) == 0) throw InputError("degenerate dealer: C(P0^perp) = C");
  if (secret.rows() != p0.dim() || secret.cols() != c.m())
    throw InputError("secret must be a dim(P0) x m matrix");
  const auto x0 = solve_left(a, secret.flatten());
  if (!x0) throw InputError("secret is not in G_{P0} C");

  const Mat kernel = null_space(a.transpose());
  const std::uint64_t q = c.field().order();
  const std::uint64_t count = checked_pow(q, kernel.rows());
  std::uint64_t index = (seed % count + splitmix64(seed / count) % count) % count;

  const auto& f = c.field();
  std::vector<Elem> coeffs(x0->row(0).begin(), x0->row(0).end());
  for (std::size_t j = 0; j < kernel.rows(); ++j, index /= q) {
    const Elem d = static_cast<Elem>(index % q);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = f.add(coeffs[i], f.mul(d, kernel(j, i)));
  }
  const Mat x = c.codeword(coeffs);
  return SchemeInstance{c, p0, p, x, p0.basis() * x, seed};
}

Share share(const SchemeInstance& inst, const Subspace& v) {
  if (v.ambient_dim() != inst.code.n() || !inst.players.contains(v))
    throw InputError("coalition is not inside the player space");
  return Share{v, v.basis() * inst.dealt};
}

std::uint64_t OmegaSet::size() const { return checked_pow(offset.field().order(), directions.dim()); }

bool OmegaSet::contains(const Mat& s) const {
  if (s.rows() != rows || s.cols() != cols) return false;
  return directions.contains_vector((s - offset).flatten().row(0));
}

std::set<Mat> OmegaSet::elements(const Limits& limits) const {
  std::set<Mat> out;
  const auto& f = offset.field();
  const Mat& b = directions.basis();
  for_each_vector(f, b.rows(), Limits{limits.max_enum, limits.max_gl, limits.max_enum}, [&](const std::vector<Elem>& a) {
    Mat v = offset.flatten();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < v.cols(); ++j) v(0, j) = f.add(v(0, j), f.mul(a[i], b(i, j)));
    out.insert(Mat::unflatten(v.row(0), f, rows, cols));
  });
  return out;
}

OmegaSet omega(const RankMetricCode& c, const Subspace& p0, const Mat& h, const Mat& value) {
  if (p0.ambient_dim() != c.n()) throw InputError("dealer space does not live in F_q^n");
  if (value.rows() != h.rows() || value.cols() != c.m()) throw InputError("share value has the wrong shape");
  const Mat b = coalition_matrix(c, h);
  const auto y0 = solve_left(b, value.flatten());
  if (!y0) throw InputError("inconsistent share: no codeword matches");
  const Mat a = coalition_matrix(c, p0.basis());
  const Mat kernel = null_space(b.transpose());
  const Mat offset = *y0 * a;
  return OmegaSet{Mat::unflatten(offset.row(0), c.field(), p0.dim(), c.m()), Subspace::from_rows(kernel * a),
                  p0.dim(), c.m()};
}

OmegaSet omega(const RankMetricCode& c, const Subspace& p0, const Subspace& v, const Mat& value) {
  return omega(c, p0, v.basis(), value);
}

std::set<Mat> omega_scan(const RankMetricCode& c, const Subspace& p0, const Mat& h, const Mat& value,
                         const Limits& limits) {
  std::set<Mat> out;
  c.for_each_codeword(
      [&](std::span<const Elem>, const Mat& y) {
        if (h * y == value) out.insert(p0.basis() * y);
      },
      limits);
  return out;
}

Reconstruction reconstruct(const RankMetricCode& c, const Subspace& p0, const Mat& h, const Mat& value) {
  const auto om = omega(c, p0, h, value);
  Reconstruction r;
  r.candidates = om.size();
  if (r.candidates == 1) r.secret = om.offset;
  return r;
}

Reconstruction reconstruct(const RankMetricCode& c, const Subspace& p0, const Subspace& v, const Mat& value) {
  return reconstruct(c, p0, v.basis(), value);
}

Rational guess_probability(const RankMetricCode& c, const Subspace& p0, const Subspace& v) {
  const std::size_t below = shorten(c, orthocomplement(v)).dim();
  const std::size_t both = shorten(c, orthocomplement(sum(p0, v))).dim();
  return Rational(1, static_cast<std::int64_t>(checked_pow(c.field().order(), below - both)));
}

std::uint64_t player_count(std::size_t dim_p, std::uint64_t q) { return gaussian_binomial(dim_p, 1, q); }

Rational CosetVariable::probability(const std::vector<Elem>& outcome) const {
  auto it = counts.find(outcome);
  if (it == counts.end()) return 0;
  return Rational(static_cast<std::int64_t>(it->second), static_cast<std::int64_t>(total));
}

CosetVariable coset_variable(const RankMetricCode& c, const Subspace& v, const Limits& limits) {
  const auto red = reducer_for(c, v);
  CosetVariable z{v, 0, {}};
  for_each_vector(c.field(), c.dim(), limits, [&](const std::vector<Elem>& a) {
    auto r = a;
    red.reduce(r);
    ++z.counts[r];
    ++z.total;
  });
  return z;
}

namespace {

template <class Map>
double entropy_of(const Map& counts, std::uint64_t total) {
  long double h = 0;
  for (const auto& [k, n] : counts) {
    const long double p = static_cast<long double>(n) / static_cast<long double>(total);
    h -= p * std::log2(p);
  }
  return static_cast<double>(h);
}

}  // namespace

double entropy(const CosetVariable& z) { return entropy_of(z.counts, z.total); }

double joint_entropy(const RankMetricCode& c, const std::vector<Subspace>& vs, const Limits& limits) {
  std::vector<CosetReducer> reds;
  for (const auto& v : vs) reds.push_back(reducer_for(c, v));
  std::map<std::vector<Elem>, std::uint64_t> counts;
  std::uint64_t total = 0;
  for_each_vector(c.field(), c.dim(), limits, [&](const std::vector<Elem>& a) {
    std::vector<Elem> key;
    key.reserve(a.size() * reds.size());
    for (const auto& red : reds) {
      auto r = a;
      red.reduce(r);
      key.insert(key.end(), r.begin(), r.end());
    }
    ++counts[key];
    ++total;
  });
  return entropy_of(counts, total);
}

double conditional_entropy(const RankMetricCode& c, const Subspace& w, const Subspace& v, const Limits& limits) {
  return joint_entropy(c, {w, v}, limits) - entropy(coset_variable(c, v, limits));
}

}  // namespace rmss

#include "rmss/subspace.hpp"

#include "rmss/errors.hpp"

#include <algorithm>

namespace rmss {

namespace {

void require_compatible(const Subspace& v, const Subspace& w, const char* op) {
  if (v.ambient_dim() != w.ambient_dim() || !(v.field() == w.field()))
    throw InputError(std::string(op) + ": subspaces live in different ambient spaces");
}

}  // namespace

Subspace Subspace::from_rows(const Mat& m) {
  RowEchelon e = rref(m);
  const std::size_t r = e.rank();
  return Subspace(e.reduced.take_rows(r), std::move(e.pivots));
}

Subspace Subspace::zero(const FiniteField& f, std::size_t n) { return Subspace(Mat(f, 0, n), {}); }

Subspace Subspace::full(const FiniteField& f, std::size_t n) {
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  return Subspace(Mat::identity(f, n), std::move(piv));
}

Subspace Subspace::span(const FiniteField& f, std::size_t n, const std::vector<std::vector<long long>>& rows) {
  return from_rows(Mat::from_rows(f, n, rows));
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw InputError("contains_vector: length mismatch");
  const FiniteField& f = field();
  std::vector<Elem> x(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = x[pivots_[i]];
    if (c == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.sub(x[j], f.mul(c, row[j]));
  }
  return std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& w) const {
  require_compatible(*this, w, "contains");
  if (w.dim() > dim()) return false;
  for (std::size_t r = 0; r < w.dim(); ++r)
    if (!contains_vector(w.basis_.row(r))) return false;
  return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  const auto& x = a.basis_.entries();
  const auto& y = b.basis_.entries();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::size_t SubspaceHash::operator()(const Subspace& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ v.ambient_dim();
  for (Elem e : v.basis().entries()) h = (h ^ e) * 0x100000001b3ull;
  return h ^ (v.dim() << 1);
}

Subspace sum(const Subspace& v, const Subspace& w) {
  require_compatible(v, w, "sum");
  return Subspace::from_rows(v.basis().vstack(w.basis()));
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  require_compatible(v, w, "intersect");
  if (v.contains(w)) return w;
  if (w.contains(v)) return v;
  // Coefficients a with a B_V in W: a B_V H^T = 0 for H a basis of W^perp.
  const Mat h = orthocomplement(w).basis();
  const Mat constraint = v.basis() * h.transpose();
  const Mat coeffs = null_space(constraint.transpose());
  return Subspace::from_rows(coeffs * v.basis());
}

BilinearForm::BilinearForm(Mat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InputError("bilinear form: Gram matrix is not square");
  if (!(gram_ == gram_.transpose())) throw InputError("bilinear form: Gram matrix is not symmetric");
  if (rank(gram_) != gram_.rows()) throw InputError("bilinear form: Gram matrix is singular");
}

BilinearForm BilinearForm::standard(const FiniteField& f, std::size_t n) { return BilinearForm(Mat::identity(f, n)); }

bool BilinearForm::is_standard() const { return gram_ == Mat::identity(gram_.field(), gram_.rows()); }

Subspace orthocomplement(const Subspace& v) {
  // {w : B_V w^T = 0}
  return Subspace::from_rows(null_space(v.basis()));
}

Subspace orthocomplement(const Subspace& v, const BilinearForm& form) {
  if (form.dim() != v.ambient_dim()) throw InputError("orthocomplement: form dimension mismatch");
  return Subspace::from_rows(null_space(v.basis() * form.gram()));
}

bool is_nondegenerate_on(const BilinearForm& form, const Subspace& z) {
  const Mat restricted = z.basis() * form.gram() * z.basis().transpose();
  return rank(restricted) == z.dim();
}

QuotientMap::QuotientMap(Subspace kernel) : kernel_(std::move(kernel)), complement_(Subspace::zero(kernel_.field(), kernel_.ambient_dim())) {
  const std::size_t n = kernel_.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : kernel_.pivots()) is_pivot[p] = true;
  std::vector<std::vector<long long>> rows;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) {
      std::vector<long long> e(n, 0);
      e[c] = 1;
      rows.push_back(std::move(e));
    }
  complement_ = Subspace::span(kernel_.field(), n, rows);
}

QuotientMap quotient_setup(std::size_t ambient_dim, const Subspace& z) {
  if (z.ambient_dim() != ambient_dim) throw InputError("quotient_setup: Z is not a subspace of the ambient space");
  return QuotientMap(z);
}

std::vector<Elem> QuotientMap::forward_vector(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw InputError("quotient: vector length mismatch");
  const FiniteField& f = kernel_.field();
  std::vector<Elem> x(v.begin(), v.end());
  const auto& piv = kernel_.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i) {
    const Elem c = x[piv[i]];
    if (c == 0) continue;
    auto row = kernel_.basis().row(i);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.sub(x[j], f.mul(c, row[j]));
  }
  std::vector<Elem> out;
  out.reserve(quotient_dim());
  for (auto p : complement_.pivots()) out.push_back(x[p]);
  return out;
}

Subspace QuotientMap::forward(const Subspace& v) const {
  if (v.ambient_dim() != ambient_dim()) throw InputError("quotient: subspace ambient mismatch");
  Mat img(kernel_.field(), v.dim(), quotient_dim());
  for (std::size_t r = 0; r < v.dim(); ++r) {
    const auto y = forward_vector(v.basis().row(r));
    std::copy(y.begin(), y.end(), img.row(r).begin());
  }
  return Subspace::from_rows(img);
}

Subspace QuotientMap::backward(const Subspace& v) const {
  if (v.ambient_dim() != quotient_dim()) throw InputError("quotient: subspace is not in E/Z");
  return sum(kernel_, Subspace::from_rows(v.basis() * section()));
}

Mat QuotientMap::matrix() const {
  const std::size_t n = ambient_dim();
  Mat m(kernel_.field(), n, quotient_dim());
  std::vector<Elem> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    const auto y = forward_vector(e);
    std::copy(y.begin(), y.end(), m.row(i).begin());
  }
  return m;
}

Subspace embed(const Subspace& local, const Mat& chart) {
  if (local.ambient_dim() != chart.rows()) throw InputError("embed: chart has the wrong number of rows");
  return Subspace::from_rows(local.basis() * chart);
}

Subspace localize(const Subspace& v, const Mat& chart) {
  if (v.ambient_dim() != chart.cols()) throw InputError("localize: ambient mismatch");
  auto coords = solve_left(chart, v.basis());
  if (!coords) throw InputError("localize: subspace is not inside the chart's span");
  return Subspace::from_rows(*coords);
}

Subspace apply(const Subspace& v, const Mat& a) {
  if (a.rows() != v.ambient_dim() || a.cols() != v.ambient_dim()) throw InputError("apply: map has the wrong shape");
  return Subspace::from_rows(v.basis() * a);
}

}  // namespace rmss

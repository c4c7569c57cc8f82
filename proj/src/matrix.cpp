#include "rmss/matrix.hpp"

#include "rmss/errors.hpp"

#include <algorithm>

namespace rmss {

namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) throw InputError("matrices over different fields");
}

}  // namespace

Mat::Mat(FiniteField f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::from_rows(FiniteField f, std::size_t cols, const std::vector<std::vector<long long>>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw InputError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

Mat Mat::identity(FiniteField f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::vstack(const Mat& below) const {
  require_same_field(*this, below);
  if (below.cols_ != cols_) throw InputError("vstack: column counts differ");
  Mat out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Mat Mat::take_rows(std::size_t count) const {
  Mat out(field_, std::min(count, rows_), cols_);
  std::copy_n(data_.begin(), out.data_.size(), out.data_.begin());
  return out;
}

Mat Mat::flatten() const {
  Mat out(field_, 1, rows_ * cols_);
  out.data_ = data_;
  return out;
}

Mat Mat::unflatten(std::span<const Elem> flat, FiniteField f, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw InputError("unflatten: size mismatch");
  Mat out(std::move(f), rows, cols);
  std::copy(flat.begin(), flat.end(), out.data_.begin());
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::vector<std::vector<long long>> Mat::to_ints() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_) throw InputError("matrix product: inner dimensions differ");
  const FiniteField& f = a.field_;
  Mat out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: shapes differ");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: shapes differ");
  Mat out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

Mat operator*(Elem s, const Mat& a) {
  Mat out = a;
  for (auto& x : out.data_) x = a.field_.mul(s, x);
  return out;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
}

std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
}

RowEchelon rref(const Mat& m) {
  const FiniteField& f = m.field();
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && r(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r(sel, c), r(lead, c));
    const Elem s = f.inv(r(lead, col));
    for (std::size_t c = col; c < r.cols(); ++c) r(lead, c) = f.mul(s, r(lead, c));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, col) == 0) continue;
      const Elem factor = r(i, col);
      for (std::size_t c = col; c < r.cols(); ++c) r(i, c) = f.sub(r(i, c), f.mul(factor, r(lead, c)));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat null_space(const Mat& m) {
  const FiniteField& f = m.field();
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Mat basis(f, free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis(i, fc) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(i, e.pivots[r]) = f.neg(e.reduced(r, fc));
  }
  return rref(basis).reduced;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw InputError("solve_left: column counts differ");
  const FiniteField& f = a.field();
  // x a = b  <=>  a^T x^T = b^T; solve each row of b against [a^T | b_row^T].
  const Mat at = a.transpose();
  Mat x(f, b.rows(), a.rows());
  for (std::size_t br = 0; br < b.rows(); ++br) {
    Mat aug(f, at.rows(), at.cols() + 1);
    for (std::size_t i = 0; i < at.rows(); ++i) {
      for (std::size_t j = 0; j < at.cols(); ++j) aug(i, j) = at(i, j);
      aug(i, at.cols()) = b(br, i);
    }
    const RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == at.cols()) return std::nullopt;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x(br, e.pivots[r]) = e.reduced(r, at.cols());
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Mat aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace rmss

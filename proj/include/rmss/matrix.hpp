#pragma once

#include "rmss/field.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rmss {

/// Dense row-major matrix over a FiniteField.
class Mat {
 public:
  /// Zero matrix.
  Mat(FiniteField f, std::size_t rows, std::size_t cols);
  /// Entries given as integer representatives; `cols` is required so that
  /// empty row lists still carry a width.
  static Mat from_rows(FiniteField f, std::size_t cols, const std::vector<std::vector<long long>>& rows);
  static Mat identity(FiniteField f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FiniteField& field() const { return field_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& entries() const { return data_; }

  Mat transpose() const;
  Mat vstack(const Mat& below) const;
  Mat take_rows(std::size_t count) const;
  /// A 1 x (rows*cols) matrix holding the entries in row-major order.
  Mat flatten() const;
  /// Inverse of flatten for a single row.
  static Mat unflatten(std::span<const Elem> flat, FiniteField f, std::size_t rows, std::size_t cols);
  bool is_zero() const;

  std::vector<std::vector<long long>> to_ints() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(Elem s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);
  /// Orders by shape, then lexicographically by entries. Fields must agree.
  friend std::strong_ordering operator<=>(const Mat& a, const Mat& b);

 private:
  FiniteField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RowEchelon {
  /// Same shape as the input; nonzero rows first.
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by Gauss-Jordan elimination with the leftmost
/// available pivot in each column. Deterministic.
RowEchelon rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Rows form the canonical (RREF) basis of {x : m x^T = 0}.
Mat null_space(const Mat& m);

/// Solves x * a = b for x (b.rows() x a.rows()); nullopt when inconsistent.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

}  // namespace rmss

#pragma once

#include "rmss/field.hpp"
#include "rmss/matrix.hpp"
#include "rmss/subspace.hpp"

#include <initializer_list>
#include <vector>

namespace th {

inline rmss::FiniteField f2() { return rmss::FiniteField::make(2); }
inline rmss::FiniteField f3() { return rmss::FiniteField::make(3); }

inline rmss::Subspace sp(const rmss::FiniteField& f, std::size_t n, std::vector<std::vector<long long>> rows) {
  return rmss::Subspace::span(f, n, rows);
}

/// Standard basis vector e_i (1-based) of F_q^n.
inline std::vector<long long> e(std::size_t n, std::initializer_list<std::size_t> ones) {
  std::vector<long long> v(n, 0);
  for (auto i : ones) v[i - 1] = 1;
  return v;
}

inline rmss::Mat mat(const rmss::FiniteField& f, std::size_t cols, std::vector<std::vector<long long>> rows) {
  return rmss::Mat::from_rows(f, cols, rows);
}

}  // namespace th

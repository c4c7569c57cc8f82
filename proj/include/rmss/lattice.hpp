#pragma once

#include "rmss/limits.hpp"
#include "rmss/subspace.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace rmss {

/// Number of k-dimensional subspaces of F_q^n. Throws LimitExceeded if the
/// value does not fit in 64 bits.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);
/// Total number of subspaces of F_q^n.
std::uint64_t subspace_count(std::uint64_t n, std::uint64_t q);
/// |GL(n, q)|, saturating at UINT64_MAX.
std::uint64_t gl_order(std::uint64_t n, std::uint64_t q);

/// All subspaces of F_q^n (or only those of dimension k) exactly once, in
/// canonical lattice order: by dimension, then lexicographically by the
/// canonical basis entries.
std::vector<Subspace> enumerate_subspaces(const FiniteField& f, std::size_t n, std::optional<std::size_t> k = std::nullopt,
                                          const Limits& limits = {});

/// Every invertible n x n matrix, in lexicographic order of row-major entries.
std::vector<Mat> enumerate_gl(const FiniteField& f, std::size_t n, const Limits& limits = {});

/// An enumerated L(F_q^n) with constant-time index lookup. Instances are
/// cached per (field, n) and shared.
class Lattice {
 public:
  static std::shared_ptr<const Lattice> of(const FiniteField& f, std::size_t n, const Limits& limits = {});

  const FiniteField& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  const std::vector<Subspace>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Subspace& operator[](std::size_t i) const { return members_[i]; }
  std::size_t index_of(const Subspace& v) const;
  /// Indices of all members W <= v, in canonical order.
  std::vector<std::size_t> below(const Subspace& v) const;
  /// Indices of all members W >= v, in canonical order.
  std::vector<std::size_t> above(const Subspace& v) const;

  Lattice(FiniteField f, std::size_t n, std::vector<Subspace> members);

 private:
  FiniteField field_;
  std::size_t n_;
  std::vector<Subspace> members_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
};

}  // namespace rmss

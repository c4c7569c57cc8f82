#pragma once

#include "rmss/limits.hpp"
#include "rmss/rank_code.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace rmss {

/// splitmix64 finalizer applied to x + 0x9e3779b97f4a7c15.
std::uint64_t splitmix64(std::uint64_t x);

struct SchemeInstance {
  RankMetricCode code;
  Subspace dealer;
  Subspace players;
  Mat dealt;   // X, n x m
  Mat secret;  // G_{P0} X
  std::uint64_t seed = 0;
};

/// X = X0 + sum_j d_j K_j where X0 is the particular solution returned by
/// elimination, K_j is the canonical basis of {Z in C : G_{P0} Z = 0} in
/// coefficient space, and d_j is the j-th base-q digit (least significant
/// first) of (seed + splitmix64(seed / N)) mod N, N = q^{#K}. Every block of
/// N consecutive seeds hits every solution exactly once.
SchemeInstance deal(const RankMetricCode& c, const Subspace& p0, const Subspace& p, const Mat& secret,
                    std::uint64_t seed);

struct Share {
  Subspace holder;
  Mat value;  // G_V X
};

/// Throws InputError unless V <= P.
Share share(const SchemeInstance& inst, const Subspace& v);

/// An affine set offset + span(directions) of dim P0 x m matrices.
struct OmegaSet {
  Mat offset;
  Subspace directions;  // in F_q^{rows*cols}, row-major flattening
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::uint64_t size() const;
  bool contains(const Mat& s) const;
  std::set<Mat> elements(const Limits& limits = {}) const;
};

/// {G_{P0} Y : Y in C, H Y = value} by linear solving; H is any generator of
/// the coalition (rows need not be independent). Throws InputError when no
/// codeword matches.
OmegaSet omega(const RankMetricCode& c, const Subspace& p0, const Mat& h, const Mat& value);
OmegaSet omega(const RankMetricCode& c, const Subspace& p0, const Subspace& v, const Mat& value);
/// The same set by scanning every codeword.
std::set<Mat> omega_scan(const RankMetricCode& c, const Subspace& p0, const Mat& h, const Mat& value,
                         const Limits& limits = {});

struct Reconstruction {
  std::optional<Mat> secret;
  std::uint64_t candidates = 0;
};

Reconstruction reconstruct(const RankMetricCode& c, const Subspace& p0, const Mat& h, const Mat& value);
Reconstruction reconstruct(const RankMetricCode& c, const Subspace& p0, const Subspace& v, const Mat& value);

/// q^{-m rho(P0|V)}.
Rational guess_probability(const RankMetricCode& c, const Subspace& p0, const Subspace& v);

/// Number of 1-dim subspaces of an (dim_p)-dim space over F_q.
std::uint64_t player_count(std::size_t dim_p, std::uint64_t q);

/// Z_V: a uniform codeword reduced modulo C(V^perp). Outcomes are canonical
/// coset representatives in coefficient space.
struct CosetVariable {
  Subspace conditioning;
  std::uint64_t total = 0;
  std::map<std::vector<Elem>, std::uint64_t> counts;
  Rational probability(const std::vector<Elem>& outcome) const;
};

CosetVariable coset_variable(const RankMetricCode& c, const Subspace& v, const Limits& limits = {});

/// Shannon entropy in bits.
double entropy(const CosetVariable& z);
/// H(Z_{V1}, ..., Z_{Vl}) from the joint table.
double joint_entropy(const RankMetricCode& c, const std::vector<Subspace>& vs, const Limits& limits = {});
/// H(Z_W | Z_V) = H(Z_W, Z_V) - H(Z_V).
double conditional_entropy(const RankMetricCode& c, const Subspace& w, const Subspace& v, const Limits& limits = {});

}  // namespace rmss

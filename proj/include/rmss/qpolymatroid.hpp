#pragma once

#include "rmss/lattice.hpp"
#include "rmss/limits.hpp"
#include "rmss/rational.hpp"
#include "rmss/subspace.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rmss {

/// A q-polymatroid (F_q^n, rho) given by an exact rank oracle.
///
/// The oracle is memoized; copies share the memo. Concurrent rank queries are
/// safe. Axioms are not checked on construction; see check_axioms.
class QPolymatroid {
 public:
  using RankFn = std::function<Rational(const Subspace&)>;

  QPolymatroid(FiniteField f, std::size_t n, RankFn rank);
  /// Rank table over the enumerated lattice; unlisted subspaces are an error.
  static QPolymatroid from_table(FiniteField f, std::size_t n, const std::vector<std::pair<Subspace, Rational>>& table);

  const FiniteField& field() const;
  std::size_t ambient_dim() const;
  /// Throws InputError when v does not live in F_q^n.
  Rational rank(const Subspace& v) const;
  Rational rank_of_ambient() const { return rank(Subspace::full(field(), ambient_dim())); }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

struct AxiomReport {
  bool r1 = true;
  bool r2 = true;
  bool r3 = true;
  /// First failing axiom ("R1", "R2" or "R3") and its counterexample in
  /// canonical lattice order. For R1 both entries are the offending V.
  std::string failed_axiom;
  std::optional<std::pair<Subspace, Subspace>> counterexample;
  bool ok() const { return r1 && r2 && r3; }
};

/// Exhaustive check of boundedness, monotonicity and submodularity.
AxiomReport check_axioms(const QPolymatroid& m, const Limits& limits = {});

/// rho(V | W) = rho(V + W) - rho(W).
Rational conditional_rank(const QPolymatroid& m, const Subspace& v, const Subspace& w);

/// rho*(V) = dim V - rho(E) + rho(V^perp) under the standard dot product.
QPolymatroid dual(const QPolymatroid& m);

/// M|_Z, re-coordinatized through Z's canonical basis: the result lives on
/// F_q^{dim Z} and rank(V) = m.rank(embed(V, Z.basis())).
QPolymatroid restrict_to(const QPolymatroid& m, const Subspace& z);

/// M/Z on E/Z in the coordinates of QuotientMap(Z).
QPolymatroid contract(const QPolymatroid& m, const Subspace& z);

/// rho'(V) = rho(V A^{-1}), the image of M under x -> x A.
QPolymatroid image(const QPolymatroid& m, const Mat& a);

/// (subspace, rank) for every member of L(F_q^n), canonical order.
std::vector<std::pair<Subspace, Rational>> rank_table(const QPolymatroid& m, const Limits& limits = {});

bool is_qmatroid(const QPolymatroid& m, const Limits& limits = {});

/// rho(V) = dim V. Throws InputError unless m is a q-matroid.
std::vector<Subspace> independent_spaces(const QPolymatroid& m, const Limits& limits = {});
/// Dependent spaces all of whose proper subspaces are independent.
std::vector<Subspace> circuits(const QPolymatroid& m, const Limits& limits = {});
/// Independent spaces not properly contained in an independent space.
std::vector<Subspace> bases(const QPolymatroid& m, const Limits& limits = {});

/// A phi in GL(n, q) with rho2(V phi) = rho1(V) for all V, as a matrix acting
/// on row vectors. The identity is tried first, then GL in enumeration order. nullopt when none exists or the
/// ambient dimensions or fields differ.
std::optional<Mat> equivalent(const QPolymatroid& m1, const QPolymatroid& m2, const Limits& limits = {});

/// "equivalent" when a witness was found. Otherwise "inequivalent" over a
/// prime field and "not found within searched family" for e > 1, where
/// semilinear maps are not searched.
std::string equivalence_verdict(const std::optional<Mat>& witness, const FiniteField& f);

}  // namespace rmss

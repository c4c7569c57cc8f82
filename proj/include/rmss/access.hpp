#pragma once

#include "rmss/lattice.hpp"
#include "rmss/limits.hpp"
#include "rmss/subspace.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rmss {

enum class FamilyKind { monotone, antimonotone, plain };

std::string to_string(FamilyKind k);

/// An explicit set of subspaces of F_q^n, kept in canonical lattice order.
struct SubspaceFamily {
  FiniteField field;
  std::size_t ambient_dim = 0;
  FamilyKind kind = FamilyKind::plain;
  std::set<Subspace> members;

  bool contains(const Subspace& v) const { return members.count(v) != 0; }
  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  std::vector<Subspace> sorted() const { return {members.begin(), members.end()}; }
};

/// Closure check for the declared kind. Plain families always pass.
bool family_check(const SubspaceFamily& h, const Limits& limits = {});

SubspaceFamily upward_closure(const FiniteField& f, std::size_t n, const std::vector<Subspace>& generators,
                              const Limits& limits = {});
SubspaceFamily downward_closure(const FiniteField& f, std::size_t n, const std::vector<Subspace>& generators,
                                const Limits& limits = {});

/// L(E) minus H; kind flips between monotone and antimonotone.
SubspaceFamily family_complement(const SubspaceFamily& h, const Limits& limits = {});
/// {V : V^perp in H} under `form`; kind flips.
SubspaceFamily family_dual(const SubspaceFamily& h, const BilinearForm& form);
SubspaceFamily family_dual(const SubspaceFamily& h);
/// H cap L(Z), in the coordinates of Z's canonical basis.
SubspaceFamily family_restrict(const SubspaceFamily& h, const Subspace& z);
/// {V <= E/Z : pi^{-1}(V) in H}, in QuotientMap(Z) coordinates.
SubspaceFamily family_contract(const SubspaceFamily& h, const Subspace& z, const Limits& limits = {});
/// {V A : V in H} for invertible A.
SubspaceFamily family_image(const SubspaceFamily& h, const Mat& a);

/// An access structure (Gamma, A) on L(P).
///
/// Families are held in local coordinates F_q^d, d = dim P. `chart` has d
/// independent rows giving the ambient representative of each local basis
/// vector; for a player space P <= F_q^N these are P's canonical basis rows.
/// After a contraction the rows are representatives of the quotient basis.
class AccessStructure {
 public:
  /// Throws InputError when the families overlap, fail their closure
  /// property or do not live in F_q^d.
  AccessStructure(Mat chart, SubspaceFamily gamma, SubspaceFamily alpha, const Limits& limits = {});

  const Mat& chart() const { return chart_; }
  Subspace player_space() const { return Subspace::from_rows(chart_); }
  std::size_t local_dim() const { return chart_.rows(); }
  const FiniteField& field() const { return chart_.field(); }
  const SubspaceFamily& gamma() const { return gamma_; }
  const SubspaceFamily& alpha() const { return alpha_; }
  bool is_degenerate() const { return gamma_.empty() || alpha_.empty(); }
  /// Ambient representative rows of a local subspace.
  Subspace to_ambient(const Subspace& local) const { return embed(local, chart_); }

 private:
  Mat chart_;
  SubspaceFamily gamma_;
  SubspaceFamily alpha_;
};

/// Structure on the standard chart F_q^d (identity).
AccessStructure make_access(SubspaceFamily gamma, SubspaceFamily alpha, const Limits& limits = {});

std::vector<Subspace> gamma_min(const AccessStructure& s);
std::vector<Subspace> alpha_max(const AccessStructure& s);
bool is_perfect(const AccessStructure& s, const Limits& limits = {});
/// Least dim V - dim W over W <= V, V in Gamma, W in A; nullopt when no such
/// pair exists.
std::optional<std::size_t> min_gap(const AccessStructure& s);
/// k with Gamma = {V : dim V >= k}; nullopt otherwise (including Gamma empty).
std::optional<std::size_t> is_threshold(const AccessStructure& s, const Limits& limits = {});

/// (A*, Gamma*) with both families dualized under the same local form.
AccessStructure access_dual(const AccessStructure& s, const BilinearForm& form, const Limits& limits = {});
AccessStructure access_dual(const AccessStructure& s, const Limits& limits = {});
/// Z is a local subspace of F_q^d.
AccessStructure access_restrict(const AccessStructure& s, const Subspace& z, const Limits& limits = {});
AccessStructure access_contract(const AccessStructure& s, const Subspace& z, const Limits& limits = {});

/// An f in GL(d, q) with f(Gamma1) = Gamma2 and f(A1) = A2, trying the
/// identity first. Only F_q-linear maps are searched.
std::optional<Mat> access_equivalent(const AccessStructure& s1, const AccessStructure& s2, const Limits& limits = {});

/// Witness data for (S/Z)* ~ S*|_{Z^perp} and (S|_{Z^perp})* ~ S*/Z, all in
/// the local coordinates of S.
struct MinorsDualityReport {
  Subspace z;
  /// Gram matrix of the form on E; identity unless the standard form is
  /// degenerate on Z.
  Mat gram;
  bool standard_form = true;
  /// Matrix of phi: E/Z -> Z^perp, rows are images of the quotient basis in E.
  Mat phi;
  /// sigma(V) for every V <= E/Z, in the coordinates of Z^perp's canonical basis.
  std::vector<std::pair<Subspace, Subspace>> sigma_table;

  bool bijective = false;
  bool mutually_inverse = false;
  bool monotone = false;
  bool linear = false;
  bool contraction_gamma = false;  // sigma((Gamma/Z)*) = Gamma*|_{Z^perp}
  bool contraction_alpha = false;  // sigma((A/Z)*) = A*|_{Z^perp}
  bool restriction_gamma = false;  // tau((Gamma|_{Z^perp})*) = Gamma*/Z
  bool restriction_alpha = false;  // tau((A|_{Z^perp})*) = A*/Z

  bool ok() const {
    return bijective && mutually_inverse && monotone && linear && contraction_gamma && contraction_alpha &&
           restriction_gamma && restriction_alpha;
  }
};

MinorsDualityReport minors_duality_check(const AccessStructure& s, const Subspace& z, const Limits& limits = {});

/// A symmetric invertible form on F_q^n with Z cap Z^perp = 0: the standard
/// form when that already holds, otherwise the form making Z's canonical basis
/// and the complementary standard vectors orthonormal.
BilinearForm splitting_form(const Subspace& z);

}  // namespace rmss

#pragma once

#include "rmss/access.hpp"
#include "rmss/qpolymatroid.hpp"
#include "rmss/rank_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmss {

/// S_{P0,P}(M): Gamma = {V <= P : rho(P0|V) = 0}, A = {W <= P : rho(P0|W) = rho(P0)}.
/// P0 and P are subspaces of M's ground space; the access structure uses P's
/// canonical basis as its chart.
struct Port {
  QPolymatroid polymatroid;
  Subspace dealer;
  Subspace players;
  AccessStructure access;
};

/// Throws InputError unless P0 + P = E is direct and rho(P0) > 0.
Port build_port(const QPolymatroid& m, const Subspace& p0, const Subspace& p, const Limits& limits = {});

enum class PortClass { generalized_qpolymatroid, generalized_qmatroid, qpolymatroid, qmatroid };
std::string to_string(PortClass c);
PortClass classify(const Port& port, const Limits& limits = {});

/// max over 1-dim p <= P of rho(p), over rho(P0).
Rational information_ratio(const Port& port, const Limits& limits = {});

/// sigma(S) >= 1/g(S); nullopt when the gap is undefined.
std::optional<bool> ratio_gap_bound_check(const Port& port, const Limits& limits = {});

/// S|_Z = S_{P0,Z}(M|_{P0+Z}) for a local Z <= P, compared as ambient subspaces.
bool port_restriction_check(const Port& port, const Subspace& z, const Limits& limits = {});

struct ContractionReport {
  bool gamma_equal = false;
  bool alpha_equal = false;
  bool ok() const { return gamma_equal && alpha_equal; }
};

/// S/Z = S_{pi(P0),pi(P)}(M/Z) for a local Z <= P outside Gamma, compared by
/// ambient preimages, family by family. Throws InputError when Z is in Gamma.
/// The privacy families agree exactly when rho(P0 | Z) = rho(P0), i.e. Z in A.
ContractionReport port_contraction_check(const Port& port, const Subspace& z, const Limits& limits = {});

struct PortDualityReport {
  /// Local-coordinate matrix of f: L(P) -> L(P0^perp), V -> (V^{perp_P} + P0)^perp.
  Mat witness;
  bool bijective = false;
  bool gamma_mapped = false;
  bool alpha_mapped = false;
  bool linear = false;
  /// Set for a degenerate S, where the correspondence is outside its
  /// hypothesis. Then only `degenerate_consistent` is reported: the dual side
  /// has a rank-zero dealer or is degenerate as well.
  bool degenerate = false;
  bool degenerate_consistent = false;
  bool ok() const {
    return degenerate ? degenerate_consistent : bijective && gamma_mapped && alpha_mapped && linear;
  }
};

/// S* ~ S_{P^perp, P0^perp}(M*). Throws InputError unless rho(P0) = dim P0.
PortDualityReport port_duality_check(const Port& port, const Limits& limits = {});

struct QMatroidGammaMinReport {
  bool perfect = false;
  /// Gamma_min = {V : V basis of M|_{V+P0}, W+P0 independent for all W < V}.
  bool characterization = false;
  /// Every V <= P with V+P0 a circuit lies in Gamma_min.
  bool circuit_sufficiency = false;
  /// Members of Gamma_min whose sum with P0 is not a circuit (local coordinates).
  std::vector<Subspace> non_circuit_members;
  bool ok() const { return perfect && characterization && circuit_sufficiency; }
};

/// Throws InputError unless the port is a q-matroid port.
QMatroidGammaMinReport qmatroid_gamma_min_check(const Port& port, const Limits& limits = {});

struct MrdThresholdReport {
  Rational threshold;     // k/m
  std::size_t cutoff = 0;  // ceil(k/m)
  bool rank_formula = false;  // rho(V) = min{dim V, k/m} on all of L(E)
  bool gamma_matches = false;  // Gamma = {V <= P : dim V >= cutoff}
  bool ok() const { return rank_formula && gamma_matches; }
};

/// Throws InputError when C is not MRD.
MrdThresholdReport mrd_threshold_check(const RankMetricCode& c, const Subspace& p0, const Subspace& p,
                                       const Limits& limits = {});

}  // namespace rmss

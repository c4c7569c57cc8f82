#include "rmss/port.hpp"

#include "rmss/errors.hpp"

#include <algorithm>
#include <set>

namespace rmss {

namespace {

std::set<Subspace> ambient_members(const SubspaceFamily& h, const Mat& chart) {
  std::set<Subspace> out;
  for (const auto& v : h.members) out.insert(embed(v, chart));
  return out;
}

}  // namespace

Port build_port(const QPolymatroid& m, const Subspace& p0, const Subspace& p, const Limits& limits) {
  const std::size_t n = m.ambient_dim();
  if (p0.ambient_dim() != n || p.ambient_dim() != n) throw InputError("dealer and player spaces must live in F_q^n");
  if (p0.dim() + p.dim() != n || intersect(p0, p).dim() != 0)
    throw InputError("dealer and player spaces are not complementary (P0 + P must be a direct sum equal to E)");
  const Rational r0 = m.rank(p0);
  if (r0 <= Rational(0)) throw InputError("dealer space has rank zero");

  const Mat& chart = p.basis();
  SubspaceFamily gamma{m.field(), p.dim(), FamilyKind::monotone, {}};
  SubspaceFamily alpha{m.field(), p.dim(), FamilyKind::antimonotone, {}};
  for (const auto& v : Lattice::of(m.field(), p.dim(), limits)->members()) {
    const Subspace va = embed(v, chart);
    const Rational cond = conditional_rank(m, p0, va);
    if (cond == Rational(0)) gamma.members.insert(v);
    if (cond == r0) alpha.members.insert(v);
  }
  return Port{m, p0, p, AccessStructure(chart, std::move(gamma), std::move(alpha), limits)};
}

std::string to_string(PortClass c) {
  switch (c) {
    case PortClass::generalized_qpolymatroid: return "generalized q-polymatroid port";
    case PortClass::generalized_qmatroid: return "generalized q-matroid port";
    case PortClass::qpolymatroid: return "q-polymatroid port";
    case PortClass::qmatroid: return "q-matroid port";
  }
  return "";
}

PortClass classify(const Port& port, const Limits& limits) {
  const bool qm = is_qmatroid(port.polymatroid, limits);
  const bool single = port.dealer.dim() == 1;
  if (qm) return single ? PortClass::qmatroid : PortClass::generalized_qmatroid;
  return single ? PortClass::qpolymatroid : PortClass::generalized_qpolymatroid;
}

Rational information_ratio(const Port& port, const Limits& limits) {
  Rational best = 0;
  for (const auto& p : enumerate_subspaces(port.polymatroid.field(), port.players.dim(), 1, limits))
    best = std::max(best, port.polymatroid.rank(embed(p, port.players.basis())));
  return best / port.polymatroid.rank(port.dealer);
}

std::optional<bool> ratio_gap_bound_check(const Port& port, const Limits& limits) {
  const auto g = min_gap(port.access);
  if (!g) return std::nullopt;
  return information_ratio(port, limits) * Rational(static_cast<std::int64_t>(*g)) >= Rational(1);
}

bool port_restriction_check(const Port& port, const Subspace& z, const Limits& limits) {
  const auto lhs = access_restrict(port.access, z, limits);

  const Subspace za = embed(z, port.players.basis());
  const Subspace w = sum(port.dealer, za);
  const Mat& wc = w.basis();
  const auto rhs = build_port(restrict_to(port.polymatroid, w), localize(port.dealer, wc), localize(za, wc), limits);
  const Mat rhs_chart = rhs.access.chart() * wc;

  return ambient_members(lhs.gamma(), lhs.chart()) == ambient_members(rhs.access.gamma(), rhs_chart) &&
         ambient_members(lhs.alpha(), lhs.chart()) == ambient_members(rhs.access.alpha(), rhs_chart);
}

ContractionReport port_contraction_check(const Port& port, const Subspace& z, const Limits& limits) {
  if (port.access.gamma().contains(z)) throw InputError("contraction requires Z outside the reconstructing family");
  const auto lhs = access_contract(port.access, z, limits);
  const QuotientMap local_q(z);
  const Mat& pc = port.players.basis();

  const Subspace za = embed(z, pc);
  const QuotientMap q(za);
  const auto rhs = build_port(contract(port.polymatroid, za), q.forward(port.dealer), q.forward(port.players), limits);

  auto lhs_pre = [&](const SubspaceFamily& h) {
    std::set<Subspace> out;
    for (const auto& v : h.members) out.insert(embed(local_q.backward(v), pc));
    return out;
  };
  auto rhs_pre = [&](const SubspaceFamily& h) {
    std::set<Subspace> out;
    for (const auto& v : h.members) out.insert(q.backward(embed(v, rhs.access.chart())));
    return out;
  };
  return ContractionReport{lhs_pre(lhs.gamma()) == rhs_pre(rhs.access.gamma()),
                           lhs_pre(lhs.alpha()) == rhs_pre(rhs.access.alpha())};
}

PortDualityReport port_duality_check(const Port& port, const Limits& limits) {
  const auto& m = port.polymatroid;
  if (m.rank(port.dealer) != Rational(static_cast<std::int64_t>(port.dealer.dim())))
    throw InputError("port duality requires rho(P0) = dim P0");
  const auto m_star = dual(m);
  const Subspace dealer_star = orthocomplement(port.players);
  const Subspace players_star = orthocomplement(port.dealer);
  const Mat& r = port.players.basis();
  const Mat& k = players_star.basis();
  const auto lmap = inverse(k * r.transpose());
  if (!lmap) throw Error("port duality: coordinate map is singular");

  PortDualityReport rep{*lmap};
  if (port.access.is_degenerate()) {
    rep.degenerate = true;
    rep.degenerate_consistent =
        m_star.rank(dealer_star) == Rational(0) || build_port(m_star, dealer_star, players_star, limits).access.is_degenerate();
    return rep;
  }

  const auto s_star = access_dual(port.access, limits);
  const auto rhs = build_port(m_star, dealer_star, players_star, limits);
  auto f = [&](const Subspace& v) {
    const Subspace u = sum(embed(orthocomplement(v), r), port.dealer);
    return localize(orthocomplement(u), k);
  };

  std::set<Subspace> image;
  bool linear = true;
  for (const auto& v : Lattice::of(m.field(), port.players.dim(), limits)->members()) {
    const Subspace fv = f(v);
    image.insert(fv);
    if (!(fv == apply(v, *lmap))) linear = false;
  }
  rep.linear = linear;
  rep.bijective = image.size() == Lattice::of(m.field(), port.players.dim(), limits)->size();

  auto mapped = [&](const SubspaceFamily& h) {
    std::set<Subspace> out;
    for (const auto& v : h.members) out.insert(f(v));
    return out;
  };
  rep.gamma_mapped = mapped(s_star.gamma()) == rhs.access.gamma().members;
  rep.alpha_mapped = mapped(s_star.alpha()) == rhs.access.alpha().members;
  return rep;
}

QMatroidGammaMinReport qmatroid_gamma_min_check(const Port& port, const Limits& limits) {
  if (classify(port, limits) != PortClass::qmatroid) throw InputError("not a q-matroid port");
  const auto& m = port.polymatroid;
  const Mat& r = port.players.basis();
  const auto lat = Lattice::of(m.field(), port.players.dim(), limits);

  auto rank_dim = [&](const Subspace& v) { return Rational(static_cast<std::int64_t>(v.dim())); };
  auto indep = [&](const Subspace& v) { return m.rank(v) == rank_dim(v); };

  QMatroidGammaMinReport rep;
  rep.perfect = is_perfect(port.access, limits);

  const auto gmin_vec = gamma_min(port.access);
  const std::set<Subspace> gmin(gmin_vec.begin(), gmin_vec.end());
  std::set<Subspace> characterized;
  for (const auto& v : lat->members()) {
    const Subspace va = embed(v, r);
    const Subspace vp = sum(va, port.dealer);
    if (!indep(va) || m.rank(vp) != m.rank(va)) continue;
    bool lower = true;
    for (auto i : lat->below(v)) {
      const auto& w = (*lat)[i];
      if (w.dim() < v.dim() && !indep(sum(embed(w, r), port.dealer))) {
        lower = false;
        break;
      }
    }
    if (lower) characterized.insert(v);
  }
  rep.characterization = characterized == gmin;

  const auto circ_vec = circuits(m, limits);
  const std::set<Subspace> circ(circ_vec.begin(), circ_vec.end());
  rep.circuit_sufficiency = true;
  for (const auto& v : lat->members())
    if (circ.count(sum(embed(v, r), port.dealer)) && !gmin.count(v)) rep.circuit_sufficiency = false;
  for (const auto& v : gmin_vec)
    if (!circ.count(sum(embed(v, r), port.dealer))) rep.non_circuit_members.push_back(v);
  return rep;
}

MrdThresholdReport mrd_threshold_check(const RankMetricCode& c, const Subspace& p0, const Subspace& p,
                                       const Limits& limits) {
  if (!singleton_check(c, limits).is_mrd) throw InputError("code is not MRD");
  const auto m = induced_qpolymatroid(c);
  MrdThresholdReport rep;
  rep.threshold = Rational(static_cast<std::int64_t>(c.dim()), static_cast<std::int64_t>(c.m()));
  rep.cutoff = (c.dim() + c.m() - 1) / c.m();

  rep.rank_formula = true;
  for (const auto& v : Lattice::of(c.field(), c.n(), limits)->members())
    if (m.rank(v) != std::min(Rational(static_cast<std::int64_t>(v.dim())), rep.threshold)) {
      rep.rank_formula = false;
      break;
    }

  const auto port = build_port(m, p0, p, limits);
  rep.gamma_matches = true;
  for (const auto& v : Lattice::of(c.field(), p.dim(), limits)->members())
    if ((v.dim() >= rep.cutoff) != port.access.gamma().contains(v)) rep.gamma_matches = false;
  return rep;
}

}  // namespace rmss

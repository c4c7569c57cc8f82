#include "rmss/access.hpp"

#include "rmss/errors.hpp"

#include <algorithm>

namespace rmss {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::monotone: return "monotone";
    case FamilyKind::antimonotone: return "antimonotone";
    case FamilyKind::plain: return "plain";
  }
  return "plain";
}

namespace {

FamilyKind flipped(FamilyKind k) {
  if (k == FamilyKind::monotone) return FamilyKind::antimonotone;
  if (k == FamilyKind::antimonotone) return FamilyKind::monotone;
  return FamilyKind::plain;
}

SubspaceFamily empty_like(const SubspaceFamily& h, std::size_t n, FamilyKind kind) {
  return SubspaceFamily{h.field, n, kind, {}};
}

void require_member_space(const SubspaceFamily& h) {
  for (const auto& v : h.members)
    if (v.ambient_dim() != h.ambient_dim || !(v.field() == h.field))
      throw InputError("family member does not live in the family's ambient space");
}

}  // namespace

bool family_check(const SubspaceFamily& h, const Limits& limits) {
  require_member_space(h);
  if (h.kind == FamilyKind::plain) return true;
  const auto lat = Lattice::of(h.field, h.ambient_dim, limits);
  for (const auto& v : h.members) {
    const auto related = h.kind == FamilyKind::monotone ? lat->above(v) : lat->below(v);
    for (auto i : related)
      if (!h.contains((*lat)[i])) return false;
  }
  return true;
}

SubspaceFamily upward_closure(const FiniteField& f, std::size_t n, const std::vector<Subspace>& generators,
                              const Limits& limits) {
  const auto lat = Lattice::of(f, n, limits);
  SubspaceFamily out{f, n, FamilyKind::monotone, {}};
  for (const auto& g : generators)
    for (auto i : lat->above(g)) out.members.insert((*lat)[i]);
  return out;
}

SubspaceFamily downward_closure(const FiniteField& f, std::size_t n, const std::vector<Subspace>& generators,
                                const Limits& limits) {
  const auto lat = Lattice::of(f, n, limits);
  SubspaceFamily out{f, n, FamilyKind::antimonotone, {}};
  for (const auto& g : generators)
    for (auto i : lat->below(g)) out.members.insert((*lat)[i]);
  return out;
}

SubspaceFamily family_complement(const SubspaceFamily& h, const Limits& limits) {
  auto out = empty_like(h, h.ambient_dim, flipped(h.kind));
  for (const auto& v : Lattice::of(h.field, h.ambient_dim, limits)->members())
    if (!h.contains(v)) out.members.insert(v);
  return out;
}

SubspaceFamily family_dual(const SubspaceFamily& h, const BilinearForm& form) {
  if (form.dim() != h.ambient_dim) throw InputError("family_dual: form dimension mismatch");
  auto out = empty_like(h, h.ambient_dim, flipped(h.kind));
  // V^perp in H  <=>  V = W^perp for some W in H.
  for (const auto& w : h.members) out.members.insert(orthocomplement(w, form));
  return out;
}

SubspaceFamily family_dual(const SubspaceFamily& h) {
  return family_dual(h, BilinearForm::standard(h.field, h.ambient_dim));
}

SubspaceFamily family_restrict(const SubspaceFamily& h, const Subspace& z) {
  if (z.ambient_dim() != h.ambient_dim) throw InputError("family_restrict: Z outside the ambient space");
  auto out = empty_like(h, z.dim(), h.kind);
  for (const auto& v : h.members)
    if (z.contains(v)) out.members.insert(localize(v, z.basis()));
  return out;
}

SubspaceFamily family_contract(const SubspaceFamily& h, const Subspace& z, const Limits& limits) {
  if (z.ambient_dim() != h.ambient_dim) throw InputError("family_contract: Z outside the ambient space");
  const QuotientMap q(z);
  auto out = empty_like(h, q.quotient_dim(), h.kind);
  for (const auto& v : Lattice::of(h.field, q.quotient_dim(), limits)->members())
    if (h.contains(q.backward(v))) out.members.insert(v);
  return out;
}

SubspaceFamily family_image(const SubspaceFamily& h, const Mat& a) {
  auto out = empty_like(h, h.ambient_dim, h.kind);
  for (const auto& v : h.members) out.members.insert(apply(v, a));
  return out;
}

AccessStructure::AccessStructure(Mat chart, SubspaceFamily gamma, SubspaceFamily alpha, const Limits& limits)
    : chart_(std::move(chart)), gamma_(std::move(gamma)), alpha_(std::move(alpha)) {
  const std::size_t d = chart_.rows();
  if (rank(chart_) != d) throw InputError("access structure chart rows are dependent");
  if (gamma_.ambient_dim != d || alpha_.ambient_dim != d)
    throw InputError("access structure families do not live in the player space");
  gamma_.kind = FamilyKind::monotone;
  alpha_.kind = FamilyKind::antimonotone;
  if (!family_check(gamma_, limits)) throw InputError("reconstructing family is not monotone");
  if (!family_check(alpha_, limits)) throw InputError("privacy family is not anti-monotone");
  for (const auto& v : gamma_.members)
    if (alpha_.contains(v)) throw InputError("reconstructing and privacy families overlap");
}

AccessStructure make_access(SubspaceFamily gamma, SubspaceFamily alpha, const Limits& limits) {
  Mat chart = Mat::identity(gamma.field, gamma.ambient_dim);
  return AccessStructure(std::move(chart), std::move(gamma), std::move(alpha), limits);
}

std::vector<Subspace> gamma_min(const AccessStructure& s) {
  std::vector<Subspace> out;
  const auto& g = s.gamma().members;
  for (const auto& v : g) {
    const bool minimal = std::none_of(g.begin(), g.end(), [&](const Subspace& w) {
      return w.dim() < v.dim() && v.contains(w);
    });
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<Subspace> alpha_max(const AccessStructure& s) {
  std::vector<Subspace> out;
  const auto& a = s.alpha().members;
  for (const auto& v : a) {
    const bool maximal = std::none_of(a.begin(), a.end(), [&](const Subspace& w) {
      return w.dim() > v.dim() && w.contains(v);
    });
    if (maximal) out.push_back(v);
  }
  return out;
}

bool is_perfect(const AccessStructure& s, const Limits& limits) {
  const auto lat = Lattice::of(s.field(), s.local_dim(), limits);
  return s.gamma().size() + s.alpha().size() == lat->size();
}

std::optional<std::size_t> min_gap(const AccessStructure& s) {
  std::optional<std::size_t> best;
  for (const auto& v : s.gamma().members)
    for (const auto& w : s.alpha().members)
      if (w.dim() <= v.dim() && v.contains(w)) {
        const std::size_t g = v.dim() - w.dim();
        if (!best || g < *best) best = g;
      }
  return best;
}

std::optional<std::size_t> is_threshold(const AccessStructure& s, const Limits& limits) {
  if (s.gamma().empty()) return std::nullopt;
  std::size_t k = s.local_dim();
  for (const auto& v : s.gamma().members) k = std::min(k, v.dim());
  for (const auto& v : Lattice::of(s.field(), s.local_dim(), limits)->members())
    if ((v.dim() >= k) != s.gamma().contains(v)) return std::nullopt;
  return k;
}

AccessStructure access_dual(const AccessStructure& s, const BilinearForm& form, const Limits& limits) {
  return AccessStructure(s.chart(), family_dual(s.alpha(), form), family_dual(s.gamma(), form), limits);
}

AccessStructure access_dual(const AccessStructure& s, const Limits& limits) {
  return access_dual(s, BilinearForm::standard(s.field(), s.local_dim()), limits);
}

AccessStructure access_restrict(const AccessStructure& s, const Subspace& z, const Limits& limits) {
  return AccessStructure(z.basis() * s.chart(), family_restrict(s.gamma(), z), family_restrict(s.alpha(), z), limits);
}

AccessStructure access_contract(const AccessStructure& s, const Subspace& z, const Limits& limits) {
  const QuotientMap q(z);
  return AccessStructure(q.section() * s.chart(), family_contract(s.gamma(), z, limits),
                         family_contract(s.alpha(), z, limits), limits);
}

std::optional<Mat> access_equivalent(const AccessStructure& s1, const AccessStructure& s2, const Limits& limits) {
  if (s1.local_dim() != s2.local_dim() || !(s1.field() == s2.field())) return std::nullopt;
  if (s1.gamma().size() != s2.gamma().size() || s1.alpha().size() != s2.alpha().size()) return std::nullopt;
  auto maps_onto = [](const SubspaceFamily& from, const SubspaceFamily& to, const Mat& a) {
    return std::all_of(from.members.begin(), from.members.end(),
                       [&](const Subspace& v) { return to.contains(apply(v, a)); });
  };
  const Mat id = Mat::identity(s1.field(), s1.local_dim());
  if (maps_onto(s1.gamma(), s2.gamma(), id) && maps_onto(s1.alpha(), s2.alpha(), id)) return id;
  for (const Mat& a : enumerate_gl(s1.field(), s1.local_dim(), limits))
    if (maps_onto(s1.gamma(), s2.gamma(), a) && maps_onto(s1.alpha(), s2.alpha(), a)) return a;
  return std::nullopt;
}

BilinearForm splitting_form(const Subspace& z) {
  const auto& f = z.field();
  const std::size_t n = z.ambient_dim();
  auto standard = BilinearForm::standard(f, n);
  if (is_nondegenerate_on(standard, z)) return standard;
  // Rows of t are an orthonormal basis for x G y^T with G = t^{-1} t^{-T}.
  Mat t = z.basis();
  std::vector<bool> pivot(n, false);
  for (auto p : z.pivots()) pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) {
      Mat e(f, 1, n);
      e(0, j) = 1;
      t = t.vstack(e);
    }
  const Mat ti = *inverse(t);
  return BilinearForm(ti * ti.transpose());
}

MinorsDualityReport minors_duality_check(const AccessStructure& s, const Subspace& z, const Limits& limits) {
  const auto& f = s.field();
  const std::size_t d = s.local_dim();
  if (z.ambient_dim() != d) throw InputError("minors_duality_check: Z is not a subspace of the player space");

  const BilinearForm form = splitting_form(z);
  const Mat& g = form.gram();
  const Subspace zp = orthocomplement(z, form);
  const Mat& r = zp.basis();
  const QuotientMap q(z);

  // phi(u) is the Z^perp component of the representative of u.
  const Mat t = z.basis().vstack(r);
  const Mat ti = *inverse(t);
  Mat phi(f, q.quotient_dim(), d);
  {
    const Mat coords = q.section() * ti;
    for (std::size_t i = 0; i < q.quotient_dim(); ++i) {
      Mat c(f, 1, r.rows());
      for (std::size_t j = 0; j < r.rows(); ++j) c(0, j) = coords(i, z.dim() + j);
      const Mat img = c * r;
      for (std::size_t j = 0; j < d; ++j) phi(i, j) = img(0, j);
    }
  }
  const BilinearForm form_q(phi * g * phi.transpose());
  const BilinearForm form_zp(r * g * r.transpose());

  MinorsDualityReport rep{z, g, form.is_standard(), phi, {}};

  auto sigma = [&](const Subspace& v) {
    return localize(orthocomplement(q.backward(orthocomplement(v, form_q)), form), r);
  };
  auto tau = [&](const Subspace& w) {
    return orthocomplement(q.forward(orthocomplement(sum(embed(w, r), z), form)), form_q);
  };

  const auto quot = Lattice::of(f, q.quotient_dim(), limits);
  const auto zlat = Lattice::of(f, zp.dim(), limits);
  std::vector<Subspace> sig;
  sig.reserve(quot->size());
  bool linear = true;
  for (const auto& v : quot->members()) {
    sig.push_back(sigma(v));
    rep.sigma_table.emplace_back(v, sig.back());
    if (!(localize(Subspace::from_rows(v.basis() * phi), r) == sig.back())) linear = false;
  }
  rep.linear = linear;

  std::set<Subspace> image(sig.begin(), sig.end());
  rep.bijective = quot->size() == zlat->size() && image.size() == zlat->size();

  bool inverse_ok = true;
  for (std::size_t i = 0; i < quot->size() && inverse_ok; ++i) inverse_ok = tau(sig[i]) == (*quot)[i];
  for (const auto& w : zlat->members())
    if (!inverse_ok || !(sigma(tau(w)) == w)) {
      inverse_ok = false;
      break;
    }
  rep.mutually_inverse = inverse_ok;

  bool mono = true;
  for (std::size_t i = 0; i < quot->size() && mono; ++i)
    for (std::size_t j = 0; j < quot->size(); ++j)
      if ((*quot)[j].contains((*quot)[i]) != sig[j].contains(sig[i])) {
        mono = false;
        break;
      }
  rep.monotone = mono;

  auto mapped = [](const SubspaceFamily& h, const auto& fn) {
    std::set<Subspace> out;
    for (const auto& v : h.members) out.insert(fn(v));
    return out;
  };

  const auto gamma_star = family_dual(s.gamma(), form);
  const auto alpha_star = family_dual(s.alpha(), form);

  // (S/Z)* versus S*|_{Z^perp} through sigma.
  rep.contraction_gamma =
      mapped(family_dual(family_contract(s.gamma(), z, limits), form_q), sigma) == family_restrict(gamma_star, zp).members;
  rep.contraction_alpha =
      mapped(family_dual(family_contract(s.alpha(), z, limits), form_q), sigma) == family_restrict(alpha_star, zp).members;

  // (S|_{Z^perp})* versus S*/Z through tau.
  rep.restriction_gamma =
      mapped(family_dual(family_restrict(s.gamma(), zp), form_zp), tau) == family_contract(gamma_star, z, limits).members;
  rep.restriction_alpha =
      mapped(family_dual(family_restrict(s.alpha(), zp), form_zp), tau) == family_contract(alpha_star, z, limits).members;
  return rep;
}

}  // namespace rmss

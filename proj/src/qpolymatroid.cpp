#include "rmss/qpolymatroid.hpp"

#include "rmss/errors.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace rmss {

struct QPolymatroid::State {
  State(FiniteField f, std::size_t n_, RankFn r) : field(std::move(f)), n(n_), fn(std::move(r)) {}
  FiniteField field;
  std::size_t n;
  RankFn fn;
  std::mutex mu;
  std::unordered_map<Subspace, Rational, SubspaceHash> memo;
};

QPolymatroid::QPolymatroid(FiniteField f, std::size_t n, RankFn rank)
    : state_(std::make_shared<State>(std::move(f), n, std::move(rank))) {}

QPolymatroid QPolymatroid::from_table(FiniteField f, std::size_t n,
                                      const std::vector<std::pair<Subspace, Rational>>& table) {
  auto map = std::make_shared<std::unordered_map<Subspace, Rational, SubspaceHash>>();
  for (const auto& [v, r] : table) {
    if (v.ambient_dim() != n) throw InputError("rank table entry outside F_q^n");
    (*map)[v] = r;
  }
  return QPolymatroid(std::move(f), n, [map](const Subspace& v) {
    auto it = map->find(v);
    if (it == map->end()) throw InputError("rank table has no entry for a queried subspace");
    return it->second;
  });
}

const FiniteField& QPolymatroid::field() const { return state_->field; }
std::size_t QPolymatroid::ambient_dim() const { return state_->n; }

Rational QPolymatroid::rank(const Subspace& v) const {
  if (v.ambient_dim() != state_->n || !(v.field() == state_->field))
    throw InputError("rank: subspace does not live in the polymatroid's ambient space");
  {
    std::lock_guard lock(state_->mu);
    if (auto it = state_->memo.find(v); it != state_->memo.end()) return it->second;
  }
  // Evaluated outside the lock so that oracles may query other polymatroids.
  const Rational r = state_->fn(v);
  std::lock_guard lock(state_->mu);
  state_->memo.emplace(v, r);
  return r;
}

std::vector<std::pair<Subspace, Rational>> rank_table(const QPolymatroid& m, const Limits& limits) {
  const auto lat = Lattice::of(m.field(), m.ambient_dim(), limits);
  std::vector<std::pair<Subspace, Rational>> out;
  out.reserve(lat->size());
  for (const auto& v : lat->members()) out.emplace_back(v, m.rank(v));
  return out;
}

AxiomReport check_axioms(const QPolymatroid& m, const Limits& limits) {
  const auto lat = Lattice::of(m.field(), m.ambient_dim(), limits);
  const auto& members = lat->members();
  std::vector<Rational> rho;
  rho.reserve(members.size());
  for (const auto& v : members) rho.push_back(m.rank(v));

  AxiomReport report;
  auto record = [&](const char* axiom, const Subspace& a, const Subspace& b) {
    if (!report.counterexample) {
      report.failed_axiom = axiom;
      report.counterexample.emplace(a, b);
    }
  };

  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto dim = static_cast<std::int64_t>(members[i].dim());
    if (rho[i] < Rational(0) || rho[i] > dim) {
      report.r1 = false;
      record("R1", members[i], members[i]);
      break;
    }
  }
  for (std::size_t i = 0; i < members.size() && report.r2; ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (members[i].dim() > members[j].dim() || !members[j].contains(members[i])) continue;
      if (rho[i] > rho[j]) {
        report.r2 = false;
        record("R2", members[i], members[j]);
        break;
      }
    }
  for (std::size_t i = 0; i < members.size() && report.r3; ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto& v = members[i];
      const auto& w = members[j];
      if (v.contains(w) || w.contains(v)) continue;  // holds with equality
      const Rational lhs = rho[lat->index_of(sum(v, w))] + rho[lat->index_of(intersect(v, w))];
      if (lhs > rho[i] + rho[j]) {
        report.r3 = false;
        record("R3", v, w);
        break;
      }
    }
  return report;
}

Rational conditional_rank(const QPolymatroid& m, const Subspace& v, const Subspace& w) {
  return m.rank(sum(v, w)) - m.rank(w);
}

QPolymatroid dual(const QPolymatroid& m) {
  return QPolymatroid(m.field(), m.ambient_dim(), [m](const Subspace& v) {
    return Rational(static_cast<std::int64_t>(v.dim())) - m.rank_of_ambient() + m.rank(orthocomplement(v));
  });
}

QPolymatroid restrict_to(const QPolymatroid& m, const Subspace& z) {
  if (z.ambient_dim() != m.ambient_dim() || !(z.field() == m.field()))
    throw InputError("restrict: Z is not a subspace of the ambient space");
  const Mat chart = z.basis();
  return QPolymatroid(m.field(), z.dim(), [m, chart](const Subspace& v) { return m.rank(embed(v, chart)); });
}

QPolymatroid contract(const QPolymatroid& m, const Subspace& z) {
  if (z.ambient_dim() != m.ambient_dim() || !(z.field() == m.field()))
    throw InputError("contract: Z is not a subspace of the ambient space");
  auto qm = std::make_shared<const QuotientMap>(z);
  const Rational rz = m.rank(z);
  return QPolymatroid(m.field(), qm->quotient_dim(), [m, qm, rz](const Subspace& v) { return m.rank(qm->backward(v)) - rz; });
}

QPolymatroid image(const QPolymatroid& m, const Mat& a) {
  auto inv = inverse(a);
  if (!inv || a.rows() != m.ambient_dim()) throw InputError("image: map is not an automorphism of F_q^n");
  return QPolymatroid(m.field(), m.ambient_dim(), [m, ainv = *inv](const Subspace& v) { return m.rank(apply(v, ainv)); });
}

bool is_qmatroid(const QPolymatroid& m, const Limits& limits) {
  for (const auto& [v, r] : rank_table(m, limits))
    if (!is_integral(r) || r < Rational(0)) return false;
  return true;
}

namespace {

void require_qmatroid(const QPolymatroid& m, const Limits& limits) {
  if (!is_qmatroid(m, limits)) throw InputError("operation requires a q-matroid (integer ranks)");
}

bool independent(const QPolymatroid& m, const Subspace& v) {
  return m.rank(v) == Rational(static_cast<std::int64_t>(v.dim()));
}

}  // namespace

std::vector<Subspace> independent_spaces(const QPolymatroid& m, const Limits& limits) {
  require_qmatroid(m, limits);
  std::vector<Subspace> out;
  for (const auto& v : Lattice::of(m.field(), m.ambient_dim(), limits)->members())
    if (independent(m, v)) out.push_back(v);
  return out;
}

std::vector<Subspace> circuits(const QPolymatroid& m, const Limits& limits) {
  require_qmatroid(m, limits);
  const auto lat = Lattice::of(m.field(), m.ambient_dim(), limits);
  std::vector<Subspace> out;
  for (const auto& v : lat->members()) {
    if (independent(m, v)) continue;
    bool minimal = true;
    for (auto i : lat->below(v)) {
      const auto& w = (*lat)[i];
      if (w.dim() < v.dim() && !independent(m, w)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(v);
  }
  return out;
}

std::vector<Subspace> bases(const QPolymatroid& m, const Limits& limits) {
  require_qmatroid(m, limits);
  const auto lat = Lattice::of(m.field(), m.ambient_dim(), limits);
  std::vector<Subspace> out;
  for (const auto& v : lat->members()) {
    if (!independent(m, v)) continue;
    bool maximal = true;
    for (auto i : lat->above(v)) {
      const auto& w = (*lat)[i];
      if (w.dim() > v.dim() && independent(m, w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(v);
  }
  return out;
}

std::optional<Mat> equivalent(const QPolymatroid& m1, const QPolymatroid& m2, const Limits& limits) {
  if (m1.ambient_dim() != m2.ambient_dim() || !(m1.field() == m2.field())) return std::nullopt;
  const auto lat = Lattice::of(m1.field(), m1.ambient_dim(), limits);
  const auto t1 = rank_table(m1, limits);
  const auto t2 = rank_table(m2, limits);
  // Rank multisets per dimension must agree before any search.
  auto profile = [](const std::vector<std::pair<Subspace, Rational>>& t) {
    std::vector<std::pair<std::size_t, Rational>> p;
    for (const auto& [v, r] : t) p.emplace_back(v.dim(), r);
    std::sort(p.begin(), p.end());
    return p;
  };
  if (profile(t1) != profile(t2)) return std::nullopt;

  auto witnesses = [&](const Mat& phi) {
    for (std::size_t i = 0; i < t1.size(); ++i)
      if (t2[lat->index_of(apply(t1[i].first, phi))].second != t1[i].second) return false;
    return true;
  };
  const Mat id = Mat::identity(m1.field(), m1.ambient_dim());
  if (witnesses(id)) return id;
  for (const Mat& phi : enumerate_gl(m1.field(), m1.ambient_dim(), limits))
    if (witnesses(phi)) return phi;
  return std::nullopt;
}

std::string equivalence_verdict(const std::optional<Mat>& witness, const FiniteField& f) {
  if (witness) return "equivalent";
  return f.degree() > 1 ? "not found within searched family" : "inequivalent";
}

}  // namespace rmss

#include "rmss/verify.hpp"

#include "rmss/errors.hpp"
#include "rmss/fixtures.hpp"
#include "rmss/port.hpp"
#include "rmss/random.hpp"
#include "rmss/scheme.hpp"

#include <cmath>
#include <map>
#include <set>

namespace rmss {

namespace {

std::string rows_text(const Subspace& v) {
  std::string s = "<";
  for (std::size_t r = 0; r < v.dim(); ++r) {
    if (r) s += ", ";
    for (std::size_t c = 0; c < v.ambient_dim(); ++c) s += std::to_string(v.basis()(r, c));
  }
  return s + ">";
}

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}
  void check(const std::string& name, bool ok, std::string detail = {}) {
    out_.push_back({suite_, name, ok, ok ? std::string{} : std::move(detail)});
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string axiom_detail(const AxiomReport& r) {
  if (r.ok()) return {};
  return r.failed_axiom + " fails at V = " + rows_text(r.counterexample->first) +
         ", W = " + rows_text(r.counterexample->second);
}

bool same_ranks(const QPolymatroid& a, const QPolymatroid& b, const Limits& limits, std::string& detail) {
  for (const auto& v : Lattice::of(a.field(), a.ambient_dim(), limits)->members())
    if (a.rank(v) != b.rank(v)) {
      detail = "ranks differ at " + rows_text(v) + ": " + to_string(a.rank(v)) + " vs " + to_string(b.rank(v));
      return false;
    }
  return true;
}

void polymatroid_checks(Recorder& rec, const std::string& tag, const RankMetricCode& c, Rng& rng,
                        const Limits& limits) {
  const auto m = induced_qpolymatroid(c);
  const auto ax = check_axioms(m, limits);
  rec.check(tag + ".axioms", ax.ok(), axiom_detail(ax));
  const auto md = dual(m);
  const auto dax = check_axioms(md, limits);
  rec.check(tag + ".dual_axioms", dax.ok(), axiom_detail(dax));
  std::string detail;
  rec.check(tag + ".double_dual", same_ranks(dual(md), m, limits, detail), detail);
  rec.check(tag + ".code_dual", same_ranks(induced_qpolymatroid(dual_code(c)), md, limits, detail), detail);

  const Subspace z = random_subspace(rng, c.field(), c.n(), rng.below(c.n() + 1));
  const auto rax = check_axioms(restrict_to(m, z), limits);
  rec.check(tag + ".restriction_axioms", rax.ok(), axiom_detail(rax));
  const auto cax = check_axioms(contract(m, z), limits);
  rec.check(tag + ".contraction_axioms", cax.ok(), axiom_detail(cax));

  bool cond_ok = true;
  const auto lat = Lattice::of(c.field(), c.n(), limits);
  for (const auto& v : lat->members())
    for (const auto& w : lat->members()) {
      const Rational cr = conditional_rank(m, v, w);
      if (cr < Rational(0) || cr > m.rank(v) || ((cr == Rational(0)) != (m.rank(sum(v, w)) == m.rank(w)))) {
        cond_ok = false;
        detail = "conditional rank out of range at " + rows_text(v) + " | " + rows_text(w);
      }
    }
  rec.check(tag + ".conditional_rank", cond_ok, detail);
}

void axioms_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("axioms", out);
  Rng rng(o.seed);
  polymatroid_checks(rec, "example1", fixtures::example1().code, rng, o.limits);
  polymatroid_checks(rec, "example3", fixtures::example3().code, rng, o.limits);
  for (unsigned t = 0; t < o.trials; ++t) {
    const auto f = field_make(t % 2 == 0 ? 2 : 3);
    const std::size_t n = f.order() == 2 ? 2 + rng.below(3) : 2 + rng.below(2);
    const std::size_t m = 1 + rng.below(3);
    const std::size_t k = 1 + rng.below(n * m);
    polymatroid_checks(rec, "random" + std::to_string(t), random_code(rng, f, n, m, k), rng, o.limits);
  }
  if (o.corrupt_rank) {
    const auto base = induced_qpolymatroid(fixtures::example1().code);
    auto table = rank_table(base, o.limits);
    // The first 1-dim space gets rank 2 > dim.
    for (auto& [v, r] : table)
      if (v.dim() == 1) {
        r = Rational(2);
        break;
      }
    const auto bad = QPolymatroid::from_table(base.field(), base.ambient_dim(), table);
    const auto ax = check_axioms(bad, o.limits);
    rec.check("corrupted.axioms", ax.ok(), axiom_detail(ax));
  }
}

std::set<Subspace> as_set(const std::vector<Subspace>& v) { return {v.begin(), v.end()}; }

std::set<Subspace> ambient(const SubspaceFamily& h, const Mat& chart) {
  std::set<Subspace> out;
  for (const auto& v : h.members) out.insert(embed(v, chart));
  return out;
}

std::set<Subspace> span_set(const std::vector<std::vector<std::vector<long long>>>& spaces) {
  const auto f = field_make(2);
  std::set<Subspace> out;
  for (const auto& rows : spaces) out.insert(Subspace::span(f, 4, rows));
  return out;
}

void example_goldens(Recorder& rec, const Limits& limits) {
  const auto e1 = fixtures::example1();
  const auto p1 = build_port(induced_qpolymatroid(e1.code), e1.dealer, e1.players, limits);
  const auto& s1 = p1.access;
  std::set<Subspace> gmin;
  for (const auto& v : gamma_min(s1)) gmin.insert(s1.to_ambient(v));
  rec.check("example2.alpha", ambient(s1.alpha(), s1.chart()) == span_set({{}}));
  rec.check("example2.gamma_min", gmin == span_set({{{0, 1, 0, 0}, {0, 0, 1, 0}},
                                                    {{0, 1, 0, 1}, {0, 0, 1, 1}},
                                                    {{0, 1, 0, 1}, {0, 0, 1, 0}},
                                                    {{0, 1, 0, 0}, {0, 0, 1, 1}},
                                                    {{0, 0, 0, 1}}}));
  std::set<Subspace> gap;
  for (const auto& v : Lattice::of(s1.field(), s1.local_dim(), limits)->members())
    if (!s1.gamma().contains(v) && !s1.alpha().contains(v)) gap.insert(s1.to_ambient(v));
  rec.check("example2.undecided", gap == span_set({{{0, 0, 1, 0}}, {{0, 1, 0, 1}}, {{0, 0, 1, 1}},
                                                   {{0, 1, 0, 0}}, {{0, 1, 1, 0}}, {{0, 1, 1, 1}}}));
  rec.check("example2.class", classify(p1, limits) == PortClass::qpolymatroid);

  const auto e3 = fixtures::example3();
  const auto m3 = induced_qpolymatroid(e3.code);
  const auto p3 = build_port(m3, e3.dealer, e3.players, limits);
  rec.check("example3.class", classify(p3, limits) == PortClass::qmatroid);
  rec.check("example3.perfect", is_perfect(p3.access, limits));
  std::set<Subspace> gmin3;
  for (const auto& v : gamma_min(p3.access)) gmin3.insert(p3.access.to_ambient(v));
  rec.check("example3.gamma_min", gmin3 == span_set({{{0, 1, 0, 1}}, {{0, 1, 1, 0}}, {{0, 0, 1, 1}}}));
  rec.check("example3.circuits", as_set(circuits(m3, limits)) ==
                                     span_set({{{1, 0, 0, 0}, {0, 1, 1, 0}},
                                               {{0, 1, 0, 1}, {0, 0, 1, 1}},
                                               {{1, 0, 0, 0}, {0, 1, 0, 1}},
                                               {{1, 1, 0, 1}, {0, 0, 1, 1}},
                                               {{1, 0, 1, 1}}}));
  const auto f2 = field_make(2);
  const Subspace v34 = Subspace::span(f2, 4, {{0, 0, 1, 1}});
  const auto circ = as_set(circuits(m3, limits));
  rec.check("example3.non_circuit_member", gmin3.count(v34) && !circ.count(sum(v34, e3.dealer)));
}

std::string z_text(const Subspace& z) { return " at Z = " + rows_text(z); }

void port_checks(Recorder& rec, const std::string& tag, const Port& port, Rng& rng, const Limits& limits) {
  const auto& m = port.polymatroid;
  const auto& s = port.access;
  const Mat& chart = port.players.basis();
  const auto lat = Lattice::of(m.field(), port.players.dim(), limits);

  bool criterion = true;
  for (const auto& v : lat->members()) {
    const Subspace va = embed(v, chart);
    const bool recon = m.rank(va) == m.rank(sum(va, port.dealer));
    const bool priv = conditional_rank(m, port.dealer, va) == m.rank(port.dealer);
    if (recon != s.gamma().contains(v) || priv != s.alpha().contains(v)) criterion = false;
  }
  rec.check(tag + ".valid", family_check(s.gamma(), limits) && family_check(s.alpha(), limits));
  rec.check(tag + ".criteria", criterion);

  if (auto gap = ratio_gap_bound_check(port, limits)) rec.check(tag + ".ratio_gap", *gap);

  std::string fail_r, fail_cg, fail_ca, fail_t;
  for (const auto& z : lat->members()) {
    if (fail_r.empty() && !port_restriction_check(port, z, limits)) fail_r = z_text(s.to_ambient(z));
    if (!s.gamma().contains(z)) {
      const auto cr = port_contraction_check(port, z, limits);
      if (fail_cg.empty() && !cr.gamma_equal) fail_cg = z_text(s.to_ambient(z));
      if (fail_ca.empty() && !cr.alpha_equal) fail_ca = z_text(s.to_ambient(z));
    }
    if (fail_t.empty() && !minors_duality_check(s, z, limits).ok()) fail_t = z_text(s.to_ambient(z));
  }
  rec.check(tag + ".restriction", fail_r.empty(), "restriction identity fails" + fail_r);
  rec.check(tag + ".contraction_gamma", fail_cg.empty(), "reconstructing families differ" + fail_cg);
  rec.check(tag + ".contraction_alpha", fail_ca.empty(), "privacy families differ" + fail_ca);
  rec.check(tag + ".minors_duality", fail_t.empty(), "minor/dual equivalence fails" + fail_t);

  if (!s.is_degenerate() && m.rank(port.dealer) == Rational(static_cast<std::int64_t>(port.dealer.dim())))
    rec.check(tag + ".duality", port_duality_check(port, limits).ok());

  if (classify(port, limits) == PortClass::qmatroid) {
    const auto r = qmatroid_gamma_min_check(port, limits);
    rec.check(tag + ".qmatroid_perfect", r.perfect);
    rec.check(tag + ".gamma_min_characterization", r.characterization);
    rec.check(tag + ".circuit_sufficiency", r.circuit_sufficiency);
  }

  // Ports of equivalent polymatroids are equivalent under the same map.
  const Mat a = random_invertible(rng, m.field(), m.ambient_dim());
  const auto img = build_port(image(m, a), apply(port.dealer, a), apply(port.players, a), limits);
  auto mapped = [&](const SubspaceFamily& h) {
    std::set<Subspace> out;
    for (const auto& v : h.members) out.insert(apply(embed(v, chart), a));
    return out;
  };
  rec.check(tag + ".image_equivalence", mapped(s.gamma()) == ambient(img.access.gamma(), img.access.chart()) &&
                                            mapped(s.alpha()) == ambient(img.access.alpha(), img.access.chart()));
}

Port random_port(Rng& rng, const FiniteField& f, std::size_t n, std::size_t m, const Limits& limits) {
  for (;;) {
    const auto c = random_code(rng, f, n, m, 1 + rng.below(n * m));
    const auto mc = induced_qpolymatroid(c);
    const Subspace p0 = random_subspace(rng, f, n, 1);
    if (mc.rank(p0) == Rational(0)) continue;
    return build_port(mc, p0, random_complement(rng, p0), limits);
  }
}

void ports_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("ports", out);
  Rng rng(o.seed ^ 0x706f727473ULL);
  example_goldens(rec, o.limits);

  const auto e1 = fixtures::example1();
  port_checks(rec, "example1", build_port(induced_qpolymatroid(e1.code), e1.dealer, e1.players, o.limits), rng,
              o.limits);
  const auto e3 = fixtures::example3();
  port_checks(rec, "example3", build_port(induced_qpolymatroid(e3.code), e3.dealer, e3.players, o.limits), rng,
              o.limits);

  const auto f2 = field_make(2);
  for (unsigned t = 0; t < o.trials; ++t)
    port_checks(rec, "random_qmatroid" + std::to_string(t), random_port(rng, f2, 4, 1, o.limits), rng, o.limits);
  for (unsigned t = 0; t < o.trials; ++t)
    port_checks(rec, "random" + std::to_string(t), random_port(rng, f2, 4, 2 + rng.below(2), o.limits), rng,
                o.limits);

  const auto g = fixtures::gabidulin42();
  const auto mrd = mrd_threshold_check(g.code, g.dealer, g.players, o.limits);
  rec.check("gabidulin42.mrd_threshold", mrd.ok() && mrd.threshold == Rational(2) && mrd.cutoff == 2);
}

bool close(double a, double b) { return std::fabs(a - b) <= 1e-9; }

void entropy_suite(const VerifyOptions& o, std::vector<CheckResult>& out) {
  Recorder rec("entropy", out);
  const auto e1 = fixtures::example1();
  const auto& c = e1.code;
  const auto m = induced_qpolymatroid(c);
  const double unit = static_cast<double>(c.m()) * std::log2(static_cast<double>(c.field().order()));
  const auto lat = Lattice::of(c.field(), c.n(), o.limits);
  auto bits = [&](const Rational& r) {
    return unit * static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  };

  std::vector<double> h(lat->size());
  std::string detail;
  bool ok = true;
  for (std::size_t i = 0; i < lat->size(); ++i) {
    h[i] = entropy(coset_variable(c, (*lat)[i], o.limits));
    if (!close(h[i], bits(m.rank((*lat)[i])))) {
      ok = false;
      detail = "H(Z_V) mismatch at " + rows_text((*lat)[i]);
    }
  }
  rec.check("example1.entropy", ok, detail);

  bool joint = true;
  bool cond = true;
  for (std::size_t i = 0; i < lat->size(); ++i)
    for (std::size_t j = 0; j < lat->size(); ++j) {
      const auto& v = (*lat)[i];
      const auto& w = (*lat)[j];
      const double hj = joint_entropy(c, {w, v}, o.limits);
      if (!close(hj, h[lat->index_of(sum(v, w))])) joint = false;
      if (!close(hj - h[i], bits(conditional_rank(m, w, v)))) cond = false;
    }
  rec.check("example1.joint_entropy", joint);
  rec.check("example1.conditional_entropy", cond);

  for (const auto& [tag, inst] : {std::pair{std::string("example1"), e1}, std::pair{std::string("example3"), fixtures::example3()}}) {
    const auto mc = induced_qpolymatroid(inst.code);
    const auto port = build_port(mc, inst.dealer, inst.players, o.limits);
    const auto plat = Lattice::of(inst.code.field(), inst.players.dim(), o.limits);
    bool law = true;
    bool cross = true;
    bool consistent = true;
    const std::uint64_t q = inst.code.field().order();
    inst.code.for_each_codeword(
        [&](std::span<const Elem>, const Mat& x) {
          for (const auto& vl : plat->members()) {
            const Subspace v = embed(vl, inst.players.basis());
            const Mat value = v.basis() * x;
            const auto om = omega(inst.code, inst.dealer, v, value);
            const Rational e = conditional_rank(mc, inst.dealer, v) * static_cast<std::int64_t>(inst.code.m());
            std::uint64_t expect = 1;
            for (std::int64_t k = 0; k < e.numerator(); ++k) expect *= q;
            if (om.size() != expect) law = false;
            if (om.elements(o.limits) != omega_scan(inst.code, inst.dealer, v.basis(), value, o.limits)) cross = false;
            const bool recon = reconstruct(inst.code, inst.dealer, v, value).secret.has_value();
            if (recon != port.access.gamma().contains(vl)) consistent = false;
          }
        },
        o.limits);
    rec.check(tag + ".omega_size", law);
    rec.check(tag + ".omega_cross", cross);
    rec.check(tag + ".reconstruction_consistency", consistent);
  }

  // Every feasible X appears equally often over whole seed blocks.
  std::map<Mat, unsigned> hits;
  const std::uint64_t start = o.seed & ~std::uint64_t{63};
  for (std::uint64_t s = start; s < start + 64; ++s)
    ++hits[deal(c, e1.dealer, e1.players, fixtures::example1_secret(), s).dealt];
  bool uniform = hits.size() == 2;
  for (const auto& [x, n] : hits) uniform = uniform && n == 32;
  rec.check("example1.deal_uniform", uniform);
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  const auto& s = opts.suite;
  if (s != "all" && s != "axioms" && s != "ports" && s != "entropy")
    throw InputError("unknown suite \"" + s + "\" (expected axioms, ports, entropy or all)");
  std::vector<CheckResult> out;
  if (s == "all" || s == "axioms") axioms_suite(opts, out);
  if (s == "all" || s == "ports") ports_suite(opts, out);
  if (s == "all" || s == "entropy") entropy_suite(opts, out);
  return out;
}

}  // namespace rmss

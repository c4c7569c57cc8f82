// Command-line front end for the rank-metric secret-sharing library.
#include "rmss/errors.hpp"
#include "rmss/port.hpp"
#include "rmss/scheme.hpp"
#include "rmss/serialize.hpp"
#include "rmss/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

using namespace rmss;

namespace {

enum Exit { ok = 0, verification_failed = 1, input_error = 2, guard_exceeded = 3 };

struct Global {
  std::uint64_t seed = 0;
  std::uint64_t max_enum = Limits{}.max_enum;
  std::uint64_t max_codewords = Limits{}.max_codewords;
  std::string format = "json";

  Limits limits() const {
    Limits l;
    l.max_enum = max_enum;
    l.max_codewords = max_codewords;
    return l;
  }
  bool json() const { return format == "json"; }
};

std::string rows_text(const Mat& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + std::to_string(m(r, c));
  }
  return s + "]";
}

std::string span_text(const Subspace& v) { return v.dim() == 0 ? "<0>" : "<" + rows_text(v.basis()) + ">"; }

void emit(const Global& g, const Json& j, const std::string& text) {
  if (g.json()) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

struct Inputs {
  RankMetricCode code;
  std::optional<Subspace> p0;
  std::optional<Subspace> p;
};

Inputs load_inputs(const std::string& code_file, const std::string& p0_file, const std::string& p_file) {
  auto code = code_from_json(load_json(code_file));
  Inputs in{code, std::nullopt, std::nullopt};
  if (!p0_file.empty()) in.p0 = subspace_from_json(code.field(), code.n(), load_json(p0_file));
  if (!p_file.empty()) in.p = subspace_from_json(code.field(), code.n(), load_json(p_file));
  return in;
}

int cmd_analyze(const Global& g, const std::string& code_file, bool ranks) {
  const auto c = code_from_json(load_json(code_file));
  const auto lim = g.limits();
  const auto m = induced_qpolymatroid(c);
  const bool qm = is_qmatroid(m, lim);
  Json j = field_to_json(c.field());
  j["n"] = c.n();
  j["m"] = c.m();
  j["dim"] = c.dim();
  std::ostringstream t;
  t << "field: " << c.field().name() << "\nn: " << c.n() << "\nm: " << c.m() << "\ndim: " << c.dim() << "\n";
  if (c.dim() == 0) {
    j["min_rank_distance"] = nullptr;
    j["singleton_bound"] = nullptr;
    j["mrd"] = false;
    t << "min_rank_distance: undefined (zero code)\n";
  } else {
    const auto s = singleton_check(c, lim);
    j["min_rank_distance"] = s.min_distance;
    j["singleton_bound"] = s.bound;
    j["mrd"] = s.is_mrd;
    t << "min_rank_distance: " << s.min_distance << "\nsingleton_bound: " << s.bound
      << "\nmrd: " << (s.is_mrd ? "true" : "false") << "\n";
  }
  j["qmatroid"] = qm;
  t << "qmatroid: " << (qm ? "true" : "false") << "\n";
  if (ranks) {
    const auto table = rank_table(m, lim);
    j["ranks"] = rank_table_to_json(table);
    for (const auto& [v, r] : table) t << "rank " << span_text(v) << " = " << to_string(r) << "\n";
  }
  emit(g, j, t.str());
  return ok;
}

int cmd_port(const Global& g, const std::string& code_file, const std::string& p0_file, const std::string& p_file,
             bool checks, bool full) {
  const auto in = load_inputs(code_file, p0_file, p_file);
  const auto lim = g.limits();
  const auto port = build_port(induced_qpolymatroid(in.code), *in.p0, *in.p, lim);
  const auto& s = port.access;

  Json j;
  j["dealer"] = subspace_to_json(port.dealer);
  const Json aj = access_to_json(s, full);
  for (auto it = aj.begin(); it != aj.end(); ++it) j[it.key()] = it.value();
  j["classification"] = to_string(classify(port, lim));
  const Rational ratio = information_ratio(port, lim);
  j["information_ratio"] = rational_to_json(ratio);
  const auto thr = is_threshold(s, lim);
  if (thr) j["threshold"] = *thr;
  else j["threshold"] = nullptr;

  std::ostringstream t;
  t << "classification: " << j["classification"].get<std::string>() << "\n";
  t << "dealer: " << span_text(port.dealer) << "\nplayers: " << span_text(port.players) << "\n";
  for (const auto& v : gamma_min(s)) t << "gamma_min: " << span_text(s.to_ambient(v)) << "\n";
  for (const auto& v : alpha_max(s)) t << "alpha_max: " << span_text(s.to_ambient(v)) << "\n";
  t << "perfect: " << (is_perfect(s, lim) ? "true" : "false") << "\n";
  const auto gap = min_gap(s);
  t << "gap: " << (gap ? std::to_string(*gap) : "undefined") << "\n";
  t << "information_ratio: " << to_string(ratio) << "\n";
  t << "threshold: " << (thr ? std::to_string(*thr) : "none") << "\n";
  if (full) {
    for (const auto& v : s.gamma().sorted()) t << "gamma: " << span_text(s.to_ambient(v)) << "\n";
    for (const auto& v : s.alpha().sorted()) t << "alpha: " << span_text(s.to_ambient(v)) << "\n";
  }

  int code = ok;
  if (checks) {
    Json cj;
    auto put = [&](const std::string& name, std::optional<bool> passed) {
      const std::string status = !passed ? "skipped" : *passed ? "pass" : "fail";
      if (passed && !*passed) code = verification_failed;
      cj[name] = status;
      t << "check " << name << ": " << status << "\n";
    };
    put("ratio_gap", ratio_gap_bound_check(port, lim));
    const auto lat = Lattice::of(s.field(), s.local_dim(), lim);
    bool restr = true, contr_g = true, contr_a = true, minors = true;
    for (const auto& z : lat->members()) {
      restr = restr && port_restriction_check(port, z, lim);
      if (!s.gamma().contains(z)) {
        const auto cr = port_contraction_check(port, z, lim);
        contr_g = contr_g && cr.gamma_equal;
        contr_a = contr_a && cr.alpha_equal;
      }
      minors = minors && minors_duality_check(s, z, lim).ok();
    }
    put("restriction", restr);
    put("contraction_gamma", contr_g);
    put("contraction_alpha", contr_a);
    put("minors_duality", minors);
    const bool dual_ok = !s.is_degenerate() && port.polymatroid.rank(port.dealer) == Rational(static_cast<std::int64_t>(port.dealer.dim()));
    put("duality", dual_ok ? std::optional<bool>(port_duality_check(port, lim).ok()) : std::nullopt);
    const bool qmp = classify(port, lim) == PortClass::qmatroid;
    put("gamma_min_characterization",
        qmp ? std::optional<bool>(qmatroid_gamma_min_check(port, lim).ok()) : std::nullopt);
    j["checks"] = cj;
  }
  emit(g, j, t.str());
  return code;
}

int cmd_share(const Global& g, const std::string& code_file, const std::string& p0_file, const std::string& p_file,
              const std::string& secret_file) {
  const auto in = load_inputs(code_file, p0_file, p_file);
  const Json sj = load_json(secret_file);
  const Mat secret = mat_from_json(in.code.field(), sj.is_object() ? sj.at("rows") : sj, in.code.m());
  const auto inst = deal(in.code, *in.p0, *in.p, secret, g.seed);

  Json j;
  j["X"] = mat_to_json(inst.dealt);
  j["secret"] = mat_to_json(inst.secret);
  j["seed"] = inst.seed;
  std::ostringstream t;
  t << "X: " << rows_text(inst.dealt) << "\nsecret: " << rows_text(inst.secret) << "\nseed: " << inst.seed << "\n";
  Json shares = Json::array();
  for (const auto& p : enumerate_subspaces(in.code.field(), in.p->dim(), 1, g.limits())) {
    const auto sh = share(inst, embed(p, in.p->basis()));
    shares.push_back(share_to_json(sh));
    t << "share " << span_text(sh.holder) << ": " << rows_text(sh.value) << "\n";
  }
  j["shares"] = shares;
  emit(g, j, t.str());
  return ok;
}

int cmd_reconstruct(const Global& g, const std::string& code_file, const std::string& p0_file,
                    const std::string& p_file, const std::string& shares_file) {
  const auto in = load_inputs(code_file, p0_file, p_file);
  const auto [holders, values] = shares_from_json(in.code.field(), in.code.n(), in.code.m(), load_json(shares_file));
  const Subspace coalition = Subspace::from_rows(holders);
  if (in.p && !in.p->contains(coalition)) throw InputError("coalition is not inside the player space");
  const auto r = reconstruct(in.code, *in.p0, holders, values);

  Json j;
  j["coalition"] = subspace_to_json(coalition);
  j["candidates"] = r.candidates;
  j["secret"] = r.secret ? mat_to_json(*r.secret) : Json(nullptr);
  std::ostringstream t;
  t << "coalition: " << span_text(coalition) << "\n";
  if (r.secret) t << "secret: " << rows_text(*r.secret) << "\n";
  else t << r.candidates << " candidates\n";
  emit(g, j, t.str());
  return ok;
}

int cmd_entropy(const Global& g, const std::string& code_file, const std::vector<std::string>& v_files,
                const std::string& w_file) {
  const auto c = code_from_json(load_json(code_file));
  const auto lim = g.limits();
  const auto m = induced_qpolymatroid(c);
  std::vector<Subspace> vs;
  for (const auto& f : v_files) vs.push_back(subspace_from_json(c.field(), c.n(), load_json(f)));
  Subspace total = Subspace::zero(c.field(), c.n());
  for (const auto& v : vs) total = sum(total, v);
  const double unit = static_cast<double>(c.m()) * std::log2(static_cast<double>(c.field().order()));
  auto predicted = [&](const Rational& r) {
    return unit * static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  };

  Json j;
  std::ostringstream t;
  const double h = vs.size() == 1 ? entropy(coset_variable(c, vs[0], lim)) : joint_entropy(c, vs, lim);
  j["entropy"] = entropy_text(h);
  j["predicted"] = entropy_text(predicted(m.rank(total)));
  j["rank"] = rational_to_json(m.rank(total));
  t << "entropy: " << entropy_text(h) << "\npredicted: " << entropy_text(predicted(m.rank(total))) << "\n";
  if (!w_file.empty()) {
    const Subspace w = subspace_from_json(c.field(), c.n(), load_json(w_file));
    const double hc = conditional_entropy(c, w, total, lim);
    const double pc = predicted(conditional_rank(m, w, total));
    j["conditional_entropy"] = entropy_text(hc);
    j["conditional_predicted"] = entropy_text(pc);
    t << "conditional_entropy: " << entropy_text(hc) << "\nconditional_predicted: " << entropy_text(pc) << "\n";
  }
  emit(g, j, t.str());
  return ok;
}

int cmd_verify(const Global& g, const std::string& suite, unsigned trials, bool corrupt) {
  VerifyOptions o;
  o.suite = suite;
  o.trials = trials;
  o.seed = g.seed;
  o.corrupt_rank = corrupt;
  o.limits = g.limits();
  const auto results = run_verify(o);
  std::size_t failed = 0;
  Json arr = Json::array();
  std::ostringstream t;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    Json e{{"suite", r.suite}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"}};
    if (!r.detail.empty()) e["detail"] = r.detail;
    arr.push_back(e);
    t << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name;
    if (!r.detail.empty()) t << ": " << r.detail;
    t << "\n";
  }
  t << results.size() << " checks, " << failed << " failed\n";
  Json j{{"suite", suite}, {"seed", g.seed}, {"trials", trials}, {"passed", failed == 0},
         {"checks", results.size()}, {"failed", failed}, {"results", arr}};
  emit(g, j, t.str());
  return failed == 0 ? ok : verification_failed;
}

int cmd_enumerate(const Global& g, unsigned q, std::size_t n, std::optional<std::size_t> k, bool count_only) {
  Json field_spec{{"q", q}};
  const auto f = field_from_json(field_spec);
  Json j{{"q", q}, {"n", n}};
  std::ostringstream t;
  const std::uint64_t count = k ? gaussian_binomial(n, *k, q) : subspace_count(n, q);
  j["count"] = count;
  t << "count: " << count << "\n";
  if (!count_only) {
    Json arr = Json::array();
    for (const auto& v : enumerate_subspaces(f, n, k, g.limits())) {
      arr.push_back(subspace_to_json(v));
      t << span_text(v) << "\n";
    }
    j["subspaces"] = arr;
  }
  emit(g, j, t.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-metric secret sharing: codes, q-polymatroid ports, dealing and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "64-bit seed for dealing and randomized suites");
  app.add_option("--max-enum", g.max_enum, "lattice enumeration guard")->check(CLI::PositiveNumber);
  app.add_option("--max-codewords", g.max_codewords, "codeword scan guard")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string code_file, p0_file, p_file, secret_file, shares_file, w_file, suite = "all";
  std::vector<std::string> v_files;
  bool ranks = false, checks = false, full = false, corrupt = false, count_only = false;
  unsigned trials = 10, q = 2;
  std::size_t n = 0, k = 0;

  auto* analyze = app.add_subcommand("analyze", "code invariants and q-matroid flag");
  analyze->add_option("code", code_file, "code JSON file")->required();
  analyze->add_flag("--ranks", ranks, "include the full rank table");

  auto* port = app.add_subcommand("port", "access structure of the port S_{P0,P}(M_C)");
  port->add_option("code", code_file, "code JSON file")->required();
  port->add_option("--p0", p0_file, "dealer subspace file")->required();
  port->add_option("--p", p_file, "player subspace file")->required();
  port->add_flag("--checks", checks, "run the port identities");
  port->add_flag("--full", full, "list every member of Gamma and A");

  auto* sharec = app.add_subcommand("share", "deal a secret and print all player shares");
  sharec->add_option("code", code_file, "code JSON file")->required();
  sharec->add_option("--p0", p0_file, "dealer subspace file")->required();
  sharec->add_option("--p", p_file, "player subspace file")->required();
  sharec->add_option("--secret", secret_file, "secret matrix file")->required();

  auto* recon = app.add_subcommand("reconstruct", "recover the secret from coalition shares");
  recon->add_option("code", code_file, "code JSON file")->required();
  recon->add_option("--p0", p0_file, "dealer subspace file")->required();
  recon->add_option("--p", p_file, "player subspace file (optional containment check)");
  recon->add_option("--shares", shares_file, "shares file")->required();

  auto* ent = app.add_subcommand("entropy", "coset-variable entropies in bits");
  ent->add_option("code", code_file, "code JSON file")->required();
  ent->add_option("--v", v_files, "subspace file; repeat for a joint entropy")->required();
  ent->add_option("--w", w_file, "subspace file W for H(Z_W | Z_V)");

  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--suite", suite, "axioms | ports | entropy | all")
      ->check(CLI::IsMember({"axioms", "ports", "entropy", "all"}));
  ver->add_option("--trials", trials, "random instances per randomized suite");
  ver->add_flag("--corrupt-rank", corrupt, "add a check on a deliberately corrupted rank table");

  auto* en = app.add_subcommand("enumerate", "list L(F_q^n) in canonical order");
  en->add_option("--q", q, "field order")->required();
  en->add_option("--n", n, "ambient dimension")->required();
  auto* kopt = en->add_option("--k", k, "only subspaces of this dimension");
  en->add_flag("--count", count_only, "print only the count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  try {
    if (*analyze) return cmd_analyze(g, code_file, ranks);
    if (*port) return cmd_port(g, code_file, p0_file, p_file, checks, full);
    if (*sharec) return cmd_share(g, code_file, p0_file, p_file, secret_file);
    if (*recon) return cmd_reconstruct(g, code_file, p0_file, p_file, shares_file);
    if (*ent) return cmd_entropy(g, code_file, v_files, w_file);
    if (*ver) return cmd_verify(g, suite, trials, corrupt);
    if (*en) return cmd_enumerate(g, q, n, *kopt ? std::optional<std::size_t>(k) : std::nullopt, count_only);
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return guard_exceeded;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

#include "rmss/errors.hpp"
#include "rmss/fixtures.hpp"
#include "rmss/lattice.hpp"
#include "rmss/port.hpp"
#include "rmss/scheme.hpp"

#include <cmath>

using namespace rmss;
using th::e;
using th::sp;

namespace {

Mat to_mat(const FiniteField& f, const std::vector<oracle::Vec>& rows, std::size_t cols) {
  std::vector<std::vector<long long>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return Mat::from_rows(f, cols, r);
}

// Every codeword X with G_{P0} X = S.
std::set<Mat> feasible(const RankMetricCode& c, const Subspace& p0, const Mat& s) {
  std::set<Mat> out;
  const auto g = oracle::rows_of(p0.basis());
  for (const auto& x : oracle::codewords(c))
    if (to_mat(c.field(), oracle::times(g, x, 2), c.m()) == s) out.insert(to_mat(c.field(), x, c.m()));
  return out;
}

SchemeInstance example1_instance() {
  const auto ex = fixtures::example1();
  return deal(ex.code, ex.dealer, ex.players, fixtures::example1_secret(), 1);
}

}  // namespace

TEST_SUITE("scheme-engine") {
  TEST_CASE("dealing reproduces the printed codeword") {
    const auto ex = fixtures::example1();
    const auto s = fixtures::example1_secret();
    const auto sols = feasible(ex.code, ex.dealer, s);
    CHECK(sols.size() == 2);
    const auto i1 = deal(ex.code, ex.dealer, ex.players, s, 1);
    CHECK(i1.dealt == fixtures::example1_dealt());
    CHECK(i1.secret == s);
    CHECK(ex.dealer.basis() * i1.dealt == s);
    const auto i0 = deal(ex.code, ex.dealer, ex.players, s, 0);
    CHECK(sols.count(i0.dealt) == 1);
    CHECK(sols.count(i1.dealt) == 1);
    CHECK_FALSE(i0.dealt == i1.dealt);
    CHECK(deal(ex.code, ex.dealer, ex.players, s, 1).dealt == i1.dealt);
  }

  TEST_CASE("zero secret gives a homogeneous solution") {
    const auto ex = fixtures::example1();
    const Mat zero(th::f2(), 1, 6);
    for (std::uint64_t seed : {0ull, 1ull, 7ull}) {
      const auto inst = deal(ex.code, ex.dealer, ex.players, zero, seed);
      CHECK((ex.dealer.basis() * inst.dealt).is_zero());
      CHECK(ex.code.contains(inst.dealt));
    }
  }

  TEST_CASE("deal errors") {
    const auto f = th::f2();
    const auto ex = fixtures::example1();
    // |G_{P0} C| = 32 < 64, so some 1 x 6 secret is unreachable.
    std::optional<Mat> outside;
    std::set<Mat> reachable;
    for (const auto& x : oracle::codewords(ex.code)) reachable.insert(ex.dealer.basis() * to_mat(f, x, 6));
    CHECK(reachable.size() == 32);
    for (const auto& v : oracle::all_vectors(2, 6)) {
      const auto s = to_mat(f, {v}, 6);
      if (!reachable.count(s)) {
        outside = s;
        break;
      }
    }
    REQUIRE(outside);
    CHECK_THROWS_AS(deal(ex.code, ex.dealer, ex.players, *outside, 0), InputError);
    const auto c = RankMetricCode::from_basis({th::mat(f, 1, {{0}, {1}})});
    CHECK_THROWS_AS(deal(c, sp(f, 2, {e(2, {1})}), sp(f, 2, {e(2, {2})}), Mat(f, 1, 1), 0), InputError);
    CHECK_THROWS_AS(deal(ex.code, ex.dealer, ex.players, Mat(f, 1, 5), 0), InputError);
  }

  TEST_CASE("seed blocks cover every solution equally") {
    const auto ex = fixtures::example1();
    std::map<Mat, int> hits;
    for (std::uint64_t seed = 128; seed < 192; ++seed)
      ++hits[deal(ex.code, ex.dealer, ex.players, fixtures::example1_secret(), seed).dealt];
    REQUIRE(hits.size() == 2);
    for (const auto& [x, n] : hits) CHECK(n == 32);
  }

  TEST_CASE("shares") {
    const auto f = th::f2();
    const auto inst = example1_instance();
    const auto x = oracle::rows_of(fixtures::example1_dealt());
    const auto s1 = share(inst, fixtures::example1_p1());
    CHECK(s1.value == th::mat(f, 6, {{1, 0, 0, 0, 1, 0}}));
    const auto s2 = share(inst, fixtures::example1_p2());
    CHECK(s2.value == to_mat(f, oracle::times({{0, 1, 1, 0}}, x, 2), 6));
    CHECK(s2.value.is_zero());
    CHECK(share(inst, sp(f, 4, {e(4, {2, 4})})).value == th::mat(f, 6, {{1, 1, 0, 0, 0, 0}}));
    const auto s0 = share(inst, Subspace::zero(f, 4));
    CHECK(s0.value.rows() == 0);
    CHECK(s0.value.cols() == 6);
    CHECK_THROWS_AS(share(inst, inst.dealer), InputError);
  }

  TEST_CASE("omega sets") {
    const auto ex = fixtures::example1();
    const auto x = fixtures::example1_dealt();
    const auto p1 = fixtures::example1_p1();
    const auto p2 = fixtures::example1_p2();
    const std::vector<std::pair<Subspace, std::uint64_t>> cases{{p1, 2}, {p2, 4}, {sum(p1, p2), 1}};
    for (const auto& [v, size] : cases) {
      const auto om = omega(ex.code, ex.dealer, v, v.basis() * x);
      CHECK(om.size() == size);
      CHECK(om.elements() == omega_scan(ex.code, ex.dealer, v.basis(), v.basis() * x));
      CHECK(om.contains(fixtures::example1_secret()));
    }
    const auto all = omega(ex.code, ex.dealer, Subspace::zero(th::f2(), 4), Mat(th::f2(), 0, 6));
    CHECK(all.size() == 32);
    std::set<Mat> reachable;
    for (const auto& y : oracle::codewords(ex.code)) reachable.insert(p1.basis() * to_mat(th::f2(), y, 6));
    CHECK(reachable.size() == 32);
    for (const auto& v : oracle::all_vectors(2, 6)) {
      const auto value = to_mat(th::f2(), {v}, 6);
      if (reachable.count(value)) continue;
      CHECK_THROWS_AS(omega(ex.code, ex.dealer, p1, value), InputError);
      break;
    }
  }

  TEST_CASE("reconstruction") {
    const auto f = th::f2();
    const auto ex = fixtures::example1();
    const auto x = fixtures::example1_dealt();
    const auto p1 = fixtures::example1_p1();
    const auto both = sum(p1, fixtures::example1_p2());
    const auto r = reconstruct(ex.code, ex.dealer, both, both.basis() * x);
    REQUIRE(r.secret);
    CHECK(*r.secret == fixtures::example1_secret());
    CHECK(r.candidates == 1);
    const auto r1 = reconstruct(ex.code, ex.dealer, p1, p1.basis() * x);
    CHECK_FALSE(r1.secret);
    CHECK(r1.candidates == 2);
    const auto port = build_port(induced_qpolymatroid(ex.code), ex.dealer, ex.players);
    REQUIRE(port.access.gamma().contains(Subspace::full(f, 3)));
    const auto rp = reconstruct(ex.code, ex.dealer, ex.players, ex.players.basis() * x);
    REQUIRE(rp.secret);
    CHECK(*rp.secret == fixtures::example1_secret());
  }

  TEST_CASE("guessing probability") {
    const auto ex = fixtures::example1();
    const auto p1 = fixtures::example1_p1();
    CHECK(guess_probability(ex.code, ex.dealer, p1) == Rational(1, 2));
    CHECK(guess_probability(ex.code, ex.dealer, sum(p1, fixtures::example1_p2())) == Rational(1));
    CHECK(guess_probability(ex.code, ex.dealer, Subspace::zero(th::f2(), 4)) == Rational(1, 32));
  }

  TEST_CASE("player count") {
    CHECK(player_count(3, 2) == 7);
    CHECK(player_count(2, 3) == 4);
    CHECK(player_count(0, 2) == 0);
  }

  TEST_CASE("coset variables") {
    const auto f = th::f2();
    const auto c = fixtures::example1().code;
    const auto z0 = coset_variable(c, Subspace::zero(f, 4));
    CHECK(z0.counts.size() == 1);
    CHECK(z0.probability(z0.counts.begin()->first) == Rational(1));
    const auto z1 = coset_variable(c, fixtures::example1_p1());
    CHECK(z1.counts.size() == 32);
    for (const auto& [o, n] : z1.counts) CHECK(z1.probability(o) == Rational(1, 32));
    const auto ze = coset_variable(c, Subspace::full(f, 4));
    CHECK(ze.counts.size() == 64);
    Rational total(0);
    for (const auto& [o, n] : ze.counts) total += ze.probability(o);
    CHECK(total == Rational(1));
  }

  TEST_CASE("entropies") {
    const auto f = th::f2();
    const auto ex = fixtures::example1();
    const auto c = ex.code;
    const auto p1 = fixtures::example1_p1();
    const auto p2 = fixtures::example1_p2();
    CHECK(std::abs(entropy(coset_variable(c, p1)) - 5.0) < 1e-9);
    CHECK(std::abs(entropy(coset_variable(c, p2)) - 4.0) < 1e-9);
    CHECK(std::abs(entropy(coset_variable(c, Subspace::zero(f, 4)))) < 1e-9);
    CHECK(std::abs(entropy(coset_variable(c, p1)) - oracle::projection_entropy(c, {p1})) < 1e-9);

    const auto both = sum(p1, p2);
    CHECK(std::abs(joint_entropy(c, {p1, p2}) - entropy(coset_variable(c, both))) < 1e-9);
    CHECK(std::abs(joint_entropy(c, {p1, p2}) - oracle::projection_entropy(c, {p1, p2})) < 1e-9);
    CHECK(std::abs(joint_entropy(c, {p2, p2}) - entropy(coset_variable(c, p2))) < 1e-9);
    CHECK(std::abs(joint_entropy(c, {p2, Subspace::zero(f, 4)}) - entropy(coset_variable(c, p2))) < 1e-9);

    CHECK(std::abs(conditional_entropy(c, ex.dealer, both)) < 1e-9);
    CHECK(std::abs(conditional_entropy(c, p2, p2)) < 1e-9);
    CHECK(std::abs(conditional_entropy(c, ex.dealer, p1) - 1.0) < 1e-9);
  }

  TEST_CASE("splitmix64 reference values") {
    // Published outputs of the splitmix64 generator seeded with 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafull);
    CHECK(splitmix64(0x9e3779b97f4a7c15ull) == 0x6e789e6aa1b965f4ull);
  }
}

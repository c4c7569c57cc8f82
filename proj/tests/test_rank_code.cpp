#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

#include "rmss/errors.hpp"
#include "rmss/fixtures.hpp"
#include "rmss/lattice.hpp"
#include "rmss/qpolymatroid.hpp"
#include "rmss/random.hpp"
#include "rmss/rank_code.hpp"

using namespace rmss;
using th::e;
using th::sp;

namespace {

std::size_t oracle_min_rank(const RankMetricCode& c) {
  std::size_t best = SIZE_MAX;
  for (const auto& x : oracle::codewords(c)) {
    std::vector<std::vector<long long>> rows;
    bool zero = true;
    for (const auto& r : x) {
      rows.emplace_back(r.begin(), r.end());
      for (int v : r) zero = zero && v == 0;
    }
    if (zero) continue;
    best = std::min(best, oracle::matrix_rank(Mat::from_rows(c.field(), c.m(), rows)));
  }
  return best;
}

Rational oracle_rank(const RankMetricCode& c, const Subspace& v) {
  return Rational(oracle::rank_numerator(c, v), static_cast<std::int64_t>(c.m()));
}

}  // namespace

TEST_SUITE("rank-code") {
  TEST_CASE("construction from generators") {
    const auto c1 = fixtures::example1().code;
    CHECK(c1.n() == 4);
    CHECK(c1.m() == 6);
    CHECK(c1.dim() == 6);
    const auto c3 = fixtures::example3().code;
    CHECK(c3.n() == 4);
    CHECK(c3.m() == 2);
    CHECK(c3.dim() == 4);
    const auto m1 = c1.basis()[0];
    CHECK(RankMetricCode::from_basis({m1, m1}).dim() == 1);
  }

  TEST_CASE("construction errors") {
    const auto f = th::f2();
    CHECK_THROWS_AS(RankMetricCode::from_basis({}), InputError);
    CHECK_THROWS_AS(RankMetricCode::from_basis({Mat(f, 2, 2), Mat(f, 2, 3)}), InputError);
    CHECK_THROWS_AS(RankMetricCode::from_basis({Mat(f, 2, 2), Mat(th::f3(), 2, 2)}), InputError);
    CHECK_THROWS_AS(RankMetricCode::zero(f, 0, 2), InputError);
  }

  TEST_CASE("equality ignores generator order") {
    const auto c = fixtures::example3().code;
    auto g = c.basis();
    std::reverse(g.begin(), g.end());
    CHECK(RankMetricCode::from_basis(g) == c);
  }

  TEST_CASE("dual code") {
    const auto f = th::f2();
    CHECK(dual_code(RankMetricCode::zero(f, 2, 3)) == RankMetricCode::full(f, 2, 3));
    const auto c1 = fixtures::example1().code;
    const auto d = dual_code(c1);
    CHECK(d.dim() == 18);
    for (const auto& x : c1.basis())
      for (const auto& y : d.basis()) {
        const auto t = x * y.transpose();
        Elem tr = 0;
        for (std::size_t i = 0; i < t.rows(); ++i) tr = f.add(tr, t(i, i));
        CHECK(tr == 0);
      }
    CHECK(dual_code(d) == c1);
  }

  TEST_CASE("dual of an MRD code is MRD") {
    const auto g = gabidulin(4, 2, th::f2());
    const auto d = dual_code(g);
    const auto rep = singleton_check(d);
    CHECK(rep.min_distance == 4 - 3 + 2);
    CHECK(rep.is_mrd);
  }

  TEST_CASE("shortening") {
    const auto c1 = fixtures::example1().code;
    const auto f = th::f2();
    CHECK(shorten(c1, Subspace::full(f, 4)) == c1);
    CHECK(shorten(c1, Subspace::zero(f, 4)).dim() == 0);
    const auto p1perp = orthocomplement(fixtures::example1_p1());
    CHECK(shorten(c1, p1perp).dim() == 1);
    CHECK(oracle::shortened_dim(c1, p1perp) == 1);
    CHECK_FALSE(shorten(c1, orthocomplement(fixtures::example1().dealer)) == c1);
    CHECK_THROWS_AS(shorten(c1, Subspace::full(f, 3)), InputError);
  }

  TEST_CASE("minimum rank distance") {
    const auto f = th::f2();
    const auto r1 = th::mat(f, 2, {{1, 0}, {0, 0}});
    CHECK(min_rank_distance(RankMetricCode::from_basis({r1})) == 1);
    CHECK(min_rank_distance(RankMetricCode::full(f, 2, 2)) == 1);
    const auto g = gabidulin(4, 2, f);
    CHECK(min_rank_distance(g) == 3);
    CHECK(oracle_min_rank(g) == 3);
    CHECK_THROWS_AS(min_rank_distance(RankMetricCode::zero(f, 2, 2)), InputError);
    Limits tight;
    tight.max_codewords = 16;
    CHECK_THROWS_AS(min_rank_distance(g, tight), LimitExceeded);
  }

  TEST_CASE("Singleton check") {
    const auto f = th::f2();
    const auto g = singleton_check(gabidulin(4, 2, f));
    CHECK(g.bound == 8);
    CHECK(g.is_mrd);
    const auto c1 = fixtures::example1().code;
    const auto s1 = singleton_check(c1);
    CHECK(s1.min_distance == oracle_min_rank(c1));
    CHECK(c1.dim() <= s1.bound);
    const auto r1 = singleton_check(RankMetricCode::from_basis({th::mat(f, 2, {{1, 0}, {0, 0}})}));
    CHECK(r1.bound == 4);
    CHECK_FALSE(r1.is_mrd);
  }

  TEST_CASE("Gabidulin codes") {
    const auto f = th::f2();
    const auto full = gabidulin(4, 4, f);
    CHECK(full.dim() == 16);
    CHECK(min_rank_distance(full) == 1);
    const auto g42 = gabidulin(4, 2, f);
    CHECK(g42.dim() == 8);
    const auto g31 = gabidulin(3, 1, f);
    CHECK(g31.dim() == 3);
    CHECK(min_rank_distance(g31) == 3);
    CHECK(oracle_min_rank(g31) == 3);
    CHECK(singleton_check(gabidulin(2, 1, th::f3(), 3)).is_mrd);
    CHECK_THROWS_AS(gabidulin(3, 4, f), InputError);
    CHECK_THROWS_AS(gabidulin(4, 2, f, 3), InputError);
    CHECK_THROWS_AS(gabidulin(4, 0, f), InputError);
  }

  TEST_CASE("induced rank, Example 1") {
    const auto ex = fixtures::example1();
    const auto p1 = fixtures::example1_p1();
    const auto p2 = fixtures::example1_p2();
    CHECK(induced_rank(ex.code, p1) == Rational(5, 6));
    CHECK(induced_rank(ex.code, p2) == Rational(2, 3));
    CHECK(induced_rank(ex.code, Subspace::zero(th::f2(), 4)) == Rational(0));
    CHECK(induced_rank(ex.code, sum(p1, ex.dealer)) == Rational(1));
    CHECK(induced_rank(ex.code, sum(p2, ex.dealer)) == Rational(1));
    CHECK(induced_rank(ex.code, ex.dealer) == Rational(5, 6));
    CHECK_THROWS_AS(induced_rank(ex.code, Subspace::full(th::f2(), 3)), InputError);
  }

  TEST_CASE("induced rank agrees with the shortening oracle on all of L(F_2^4)") {
    for (const auto& code : {fixtures::example1().code, fixtures::example3().code}) {
      for (const auto& v : enumerate_subspaces(th::f2(), 4)) {
        const auto r = induced_rank(code, v);
        CHECK(r == oracle_rank(code, v));
        CHECK(r >= Rational(0));
        CHECK(r <= Rational(static_cast<std::int64_t>(v.dim())));
        CHECK(r <= Rational(static_cast<std::int64_t>(code.dim()), static_cast<std::int64_t>(code.m())));
        CHECK(static_cast<std::int64_t>(code.m()) % r.denominator() == 0);
      }
    }
  }

  TEST_CASE("induced q-polymatroids") {
    const auto f = th::f2();
    const auto z = induced_qpolymatroid(RankMetricCode::zero(f, 3, 2));
    for (const auto& v : enumerate_subspaces(f, 3)) CHECK(z.rank(v) == Rational(0));
    CHECK(is_qmatroid(induced_qpolymatroid(fixtures::example3().code)));
    const auto g = induced_qpolymatroid(gabidulin(4, 2, f));
    for (const auto& v : enumerate_subspaces(f, 4))
      CHECK(g.rank(v) == Rational(static_cast<std::int64_t>(std::min<std::size_t>(v.dim(), 2))));
  }

  TEST_CASE("codeword enumeration order") {
    const auto c = fixtures::example3().code;
    std::vector<std::vector<Elem>> seen;
    c.for_each_codeword([&](std::span<const Elem> a, const Mat& x) {
      seen.emplace_back(a.begin(), a.end());
      CHECK(c.contains(x));
    });
    CHECK(seen.size() == 16);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
  }
}

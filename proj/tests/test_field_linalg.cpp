#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

#include "rmss/errors.hpp"
#include "rmss/fixtures.hpp"
#include "rmss/lattice.hpp"
#include "rmss/matrix.hpp"
#include "rmss/subspace.hpp"

using namespace rmss;
using th::e;
using th::sp;

namespace {

// Carry-less product reduced modulo a binary polynomial given as a bit mask.
unsigned gf2_poly_mul(unsigned a, unsigned b, unsigned mod, unsigned deg) {
  unsigned r = 0;
  for (unsigned i = 0; i < deg; ++i)
    if (b >> i & 1u) r ^= a << i;
  for (unsigned bit = 2 * deg; bit-- > deg;)
    if (r >> bit & 1u) r ^= mod << (bit - deg);
  return r;
}

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("prime fields") {
    const auto f2 = th::f2();
    CHECK(f2.add(1, 1) == 0);
    const auto f3 = th::f3();
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.name() == "F_3");
  }

  TEST_CASE("F_4 uses x^2 + x + 1 and matches carry-less arithmetic") {
    const auto f4 = FiniteField::make(2, 2);
    CHECK(f4.order() == 4);
    CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});
    for (unsigned a = 0; a < 4; ++a)
      for (unsigned b = 0; b < 4; ++b) {
        CHECK(f4.add(static_cast<Elem>(a), static_cast<Elem>(b)) == (a ^ b));
        CHECK(f4.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == gf2_poly_mul(a, b, 0b111, 2));
      }
  }

  TEST_CASE("F_8 default modulus is x^3 + x + 1") {
    const auto f8 = FiniteField::make(2, 3);
    CHECK(f8.modulus() == std::vector<unsigned>{1, 1, 0, 1});
    for (unsigned a = 0; a < 8; ++a)
      for (unsigned b = 0; b < 8; ++b)
        CHECK(f8.mul(static_cast<Elem>(a), static_cast<Elem>(b)) == gf2_poly_mul(a, b, 0b1011, 3));
  }

  TEST_CASE("F_9 inverses") {
    const auto f9 = FiniteField::make(3, 2);
    for (unsigned a = 1; a < 9; ++a) CHECK(f9.mul(static_cast<Elem>(a), f9.inv(static_cast<Elem>(a))) == 1);
  }

  TEST_CASE("explicit modulus is accepted and normalized") {
    const auto f = FiniteField::make(2, 2, std::vector<unsigned>{1, 1, 1});
    CHECK(f == FiniteField::make(2, 2));
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FiniteField::make(4), InputError);
    CHECK_THROWS_AS(FiniteField::make(2, 0), InputError);
    CHECK_THROWS_AS(FiniteField::make(2, 9), InputError);
    CHECK_THROWS_AS(FiniteField::make(2, 2, std::vector<unsigned>{1, 0, 1}), InputError);  // (x+1)^2
    CHECK_THROWS_AS(FiniteField::make(2, 2, std::vector<unsigned>{1, 1}), InputError);
    CHECK_THROWS_AS(th::f2().inv(0), InputError);
    CHECK_THROWS_AS(th::f3().from_int(3), InputError);
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("rref of the identity") {
    const auto f = th::f2();
    const auto r = rref(Mat::identity(f, 3));
    CHECK(r.reduced == Mat::identity(f, 3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.rank() == 3);
  }

  TEST_CASE("rref of duplicate rows") {
    const auto r = rref(th::mat(th::f2(), 4, {{1, 0, 0, 1}, {1, 0, 0, 1}}));
    CHECK(r.rank() == 1);
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("dealt codeword has rank 3") {
    const auto x = fixtures::example1_dealt();
    CHECK(rank(x) == oracle::matrix_rank(x));
    CHECK(rank(x) == 3);
  }

  TEST_CASE("null space, solve and inverse") {
    const auto f = th::f3();
    const auto a = th::mat(f, 3, {{1, 2, 0}, {0, 1, 1}});
    const auto k = null_space(a);
    CHECK(k.rows() == 1);
    CHECK((a * k.transpose()).is_zero());
    const auto b = th::mat(f, 3, {{1, 0, 1}});
    const auto x = solve_left(a, b);
    REQUIRE(x);
    CHECK(*x * a == b);
    CHECK_FALSE(solve_left(a, th::mat(f, 3, {{0, 0, 1}})));
    const auto g = th::mat(f, 2, {{1, 2}, {1, 1}});
    const auto gi = inverse(g);
    REQUIRE(gi);
    CHECK(g * *gi == Mat::identity(f, 2));
    CHECK_FALSE(inverse(th::mat(f, 2, {{1, 2}, {2, 1}})));
  }

  TEST_CASE("flatten round trip") {
    const auto x = fixtures::example1_dealt();
    CHECK(Mat::unflatten(x.flatten().row(0), x.field(), 4, 6) == x);
  }
}

TEST_SUITE("subspace") {
  TEST_CASE("from rows") {
    const auto f = th::f2();
    const auto p2 = Subspace::from_rows(th::mat(f, 4, {{0, 1, 1, 0}}));
    CHECK(p2 == fixtures::example1_p2());
    CHECK(p2.dim() == 1);
    CHECK(Subspace::from_rows(Mat(f, 3, 4)).dim() == 0);
    const auto p = sp(f, 4, {e(4, {2}), e(4, {3}), e(4, {4})});
    CHECK(p.dim() == 3);
    CHECK(p == fixtures::example1().players);
  }

  TEST_CASE("sum, intersect, contains") {
    const auto p1 = fixtures::example1_p1();
    const auto p2 = fixtures::example1_p2();
    const auto s = sum(p1, p2);
    CHECK(s.dim() == 2);
    CHECK(oracle::vectors_of(s).size() == 4);
    CHECK(intersect(s, s) == s);
    CHECK(intersect(p1, p2).dim() == 0);
    CHECK(contains(fixtures::example1().players, p1));
    CHECK_FALSE(contains(p1, s));
    CHECK_THROWS_AS(sum(p1, Subspace::zero(th::f2(), 3)), InputError);
  }

  TEST_CASE("orthocomplement") {
    const auto f = th::f2();
    CHECK(orthocomplement(Subspace::full(f, 4)).dim() == 0);
    CHECK(orthocomplement(sp(f, 4, {e(4, {1})})) == sp(f, 4, {e(4, {2}), e(4, {3}), e(4, {4})}));
    const auto p0 = fixtures::example1().dealer;
    const auto perp = orthocomplement(p0);
    CHECK(perp.dim() == 3);
    CHECK(oracle::vectors_of(perp) == oracle::orthocomplement(p0));
    CHECK(perp.contains_vector(p0.basis().row(0)));  // <1001> is isotropic over F_2
  }

  TEST_CASE("quotient charts") {
    const auto f = th::f2();
    const QuotientMap q0(Subspace::zero(f, 4));
    CHECK(q0.complement() == Subspace::full(f, 4));
    CHECK(q0.section() == Mat::identity(f, 4));
    const QuotientMap q1(sp(f, 4, {e(4, {1})}));
    CHECK(q1.complement() == sp(f, 4, {e(4, {2}), e(4, {3}), e(4, {4})}));
    const QuotientMap q2(fixtures::example1().dealer);
    CHECK(q2.complement() == sp(f, 4, {e(4, {2}), e(4, {3}), e(4, {4})}));
    CHECK(quotient_setup(4, fixtures::example1().dealer).complement() == q2.complement());
  }

  TEST_CASE("charts embed and localize") {
    const auto f = th::f3();
    const auto chart = th::mat(f, 3, {{1, 2, 0}, {0, 1, 1}});
    const auto local = sp(f, 2, {{1, 1}});
    const auto amb = embed(local, chart);
    CHECK(amb == sp(f, 3, {{1, 0, 1}}));
    CHECK(localize(amb, chart) == local);
    CHECK_THROWS_AS(localize(sp(f, 3, {{0, 0, 1}}), chart), InputError);
  }
}

TEST_SUITE("lattice") {
  TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(4, 0, 2) == 1);
    CHECK(gaussian_binomial(4, 1, 2) == 15);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(4, 2, 3) == oracle::count_subspaces(3, 4, 2));
    CHECK(gaussian_binomial(3, 1, 2) == oracle::count_subspaces(2, 3, 1));
    CHECK(subspace_count(4, 2) == 67);
  }

  TEST_CASE("enumeration counts") {
    const auto f = th::f2();
    CHECK(enumerate_subspaces(f, 3, 1).size() == 7);
    CHECK(enumerate_subspaces(f, 2).size() == 5);
    CHECK(enumerate_subspaces(f, 4, 2).size() == 35);
    CHECK(enumerate_subspaces(f, 4).size() == 67);
    CHECK(enumerate_subspaces(th::f3(), 4, 2).size() == 130);
  }

  TEST_CASE("enumeration order: dimension first, then entries") {
    const auto all = enumerate_subspaces(th::f2(), 3);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    CHECK(all.front().dim() == 0);
    CHECK(all.back().dim() == 3);
  }

  TEST_CASE("GL enumeration") {
    const auto f = th::f2();
    CHECK(enumerate_gl(f, 1).size() == 1);
    CHECK(enumerate_gl(f, 2).size() == 6);
    CHECK(enumerate_gl(f, 3).size() == 168);
    CHECK(oracle::count_invertible(2, 3) == 168);
    CHECK(gl_order(3, 2) == 168);
  }

  TEST_CASE("guards") {
    Limits tight;
    tight.max_enum = 10;
    CHECK_THROWS_AS(enumerate_subspaces(th::f2(), 4, std::nullopt, tight), LimitExceeded);
    tight.max_gl = 100;
    CHECK_THROWS_AS(enumerate_gl(th::f2(), 3, tight), LimitExceeded);
  }

  TEST_CASE("lattice index") {
    const auto lat = Lattice::of(th::f2(), 3);
    CHECK(lat->size() == 16);
    for (std::size_t i = 0; i < lat->size(); ++i) CHECK(lat->index_of((*lat)[i]) == i);
    CHECK(lat->below(Subspace::full(th::f2(), 3)).size() == 16);
    CHECK(lat->above(Subspace::zero(th::f2(), 3)).size() == 16);
  }
}

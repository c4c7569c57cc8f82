#include "doctest.h"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

#include "rmss/errors.hpp"
#include "rmss/fixtures.hpp"
#include "rmss/lattice.hpp"
#include "rmss/port.hpp"

using namespace rmss;
using th::e;
using th::sp;

namespace {

Port port_of(const fixtures::Instance& ex) { return build_port(induced_qpolymatroid(ex.code), ex.dealer, ex.players); }

Subspace local(const Subspace& ambient, const Port& port) { return localize(ambient, port.players.basis()); }

QPolymatroid free_qmatroid(const FiniteField& f, std::size_t n) {
  return QPolymatroid(f, n, [](const Subspace& v) { return Rational(static_cast<std::int64_t>(v.dim())); });
}

}  // namespace

TEST_SUITE("port") {
  TEST_CASE("Example 1 gives the non-perfect structure with A = {0}") {
    const auto port = port_of(fixtures::example1());
    CHECK(port.access.alpha().members == std::set<Subspace>{Subspace::zero(th::f2(), 3)});
    CHECK(gamma_min(port.access).size() == 5);
    CHECK_FALSE(port.access.is_degenerate());
  }

  TEST_CASE("Gamma and A follow the conditional-rank definition") {
    for (const auto& ex : {fixtures::example1(), fixtures::example3()}) {
      const auto port = port_of(ex);
      for (const auto& v : enumerate_subspaces(th::f2(), 3)) {
        const auto amb = port.access.to_ambient(v);
        const auto num = oracle::rank_numerator(ex.code, sum(amb, ex.dealer)) - oracle::rank_numerator(ex.code, amb);
        CHECK(port.access.gamma().contains(v) == (num == 0));
        CHECK(port.access.alpha().contains(v) == (num == oracle::rank_numerator(ex.code, ex.dealer)));
      }
    }
  }

  TEST_CASE("build errors") {
    const auto f = th::f2();
    const auto m = induced_qpolymatroid(fixtures::example1().code);
    CHECK_THROWS_AS(build_port(m, sp(f, 4, {e(4, {2})}), fixtures::example1().players), InputError);
    CHECK_THROWS_AS(build_port(m, sp(f, 4, {e(4, {1})}), sp(f, 4, {e(4, {2})})), InputError);
    // Every codeword vanishes on the first row, so rho(<e1>) = 0.
    const auto c = RankMetricCode::from_basis({th::mat(f, 1, {{0}, {1}})});
    CHECK_THROWS_AS(build_port(induced_qpolymatroid(c), sp(f, 2, {e(2, {1})}), sp(f, 2, {e(2, {2})})), InputError);
  }

  TEST_CASE("classification") {
    const auto f = th::f2();
    CHECK(classify(port_of(fixtures::example1())) == PortClass::qpolymatroid);
    CHECK(classify(port_of(fixtures::example3())) == PortClass::qmatroid);
    const auto g = build_port(free_qmatroid(f, 3), sp(f, 3, {e(3, {1}), e(3, {2})}), sp(f, 3, {e(3, {3})}));
    CHECK(classify(g) == PortClass::generalized_qmatroid);
    CHECK(to_string(PortClass::qmatroid) == "q-matroid port");
    const auto gp = build_port(induced_qpolymatroid(fixtures::example1().code), sp(f, 4, {e(4, {1}), e(4, {2})}),
                               sp(f, 4, {e(4, {3}), e(4, {4})}));
    CHECK(classify(gp) == PortClass::generalized_qpolymatroid);
  }

  TEST_CASE("information ratio") {
    const auto ex = fixtures::example1();
    const auto port = port_of(ex);
    std::int64_t best = 0;
    for (const auto& p : enumerate_subspaces(th::f2(), 3, 1))
      best = std::max(best, oracle::rank_numerator(ex.code, port.access.to_ambient(p)));
    const Rational expected(best, oracle::rank_numerator(ex.code, ex.dealer));
    CHECK(information_ratio(port) == expected);
    CHECK(information_ratio(port) == Rational(6, 5));
    CHECK(information_ratio(port) >= Rational(1));

    const auto g = fixtures::gabidulin42();
    const auto gp = port_of(g);
    for (const auto& p : enumerate_subspaces(th::f2(), 3, 1))
      CHECK(gp.polymatroid.rank(gp.access.to_ambient(p)) == Rational(1));
    CHECK(information_ratio(gp) > Rational(0));
  }

  TEST_CASE("ratio-gap bound") {
    CHECK(ratio_gap_bound_check(port_of(fixtures::example3())) == std::optional<bool>(true));
    CHECK(ratio_gap_bound_check(port_of(fixtures::example1())) == std::optional<bool>(true));
    CHECK(min_gap(port_of(fixtures::example3()).access) == std::optional<std::size_t>(1));
  }

  TEST_CASE("restriction identity") {
    const auto f = th::f2();
    const auto port = port_of(fixtures::example3());
    CHECK(port_restriction_check(port, local(sp(f, 4, {e(4, {2}), e(4, {3})}), port)));
    CHECK(port_restriction_check(port, Subspace::full(f, 3)));
    CHECK(port_restriction_check(port, Subspace::zero(f, 3)));
  }

  TEST_CASE("contraction identity: reconstruction side always, privacy side iff Z in A") {
    const auto f = th::f2();
    const auto port = port_of(fixtures::example1());
    const auto z = local(sp(f, 4, {e(4, {2})}), port);
    REQUIRE_FALSE(port.access.gamma().contains(z));
    REQUIRE_FALSE(port.access.alpha().contains(z));
    const auto rep = port_contraction_check(port, z);
    CHECK(rep.gamma_equal);
    // 0 lies in the privacy family of every port, but 0 is in A/Z only when
    // Z itself is in A.
    CHECK_FALSE(rep.alpha_equal);

    CHECK(port_contraction_check(port, Subspace::zero(f, 3)).ok());
    CHECK_THROWS_AS(port_contraction_check(port, local(sp(f, 4, {e(4, {4})}), port)), InputError);

    for (const auto& w : enumerate_subspaces(f, 3)) {
      if (port.access.gamma().contains(w)) continue;
      const auto r = port_contraction_check(port, w);
      CHECK(r.gamma_equal);
      CHECK(r.alpha_equal == port.access.alpha().contains(w));
    }
  }

  TEST_CASE("duality") {
    const auto f = th::f2();
    const auto rep = port_duality_check(port_of(fixtures::example3()));
    CHECK(rep.ok());
    CHECK_FALSE(rep.degenerate);
    const auto fr = build_port(free_qmatroid(f, 3), sp(f, 3, {e(3, {1})}), sp(f, 3, {e(3, {2}), e(3, {3})}));
    CHECK(fr.access.gamma().empty());
    const auto d = port_duality_check(fr);
    CHECK(d.degenerate);
    CHECK(d.degenerate_consistent);
    CHECK_THROWS_AS(port_duality_check(port_of(fixtures::example1())), InputError);
  }

  TEST_CASE("q-matroid Gamma_min characterization") {
    const auto f = th::f2();
    const auto port = port_of(fixtures::example3());
    const auto rep = qmatroid_gamma_min_check(port);
    CHECK(rep.ok());
    REQUIRE(rep.non_circuit_members.size() == 1);
    CHECK(port.access.to_ambient(rep.non_circuit_members[0]) == sp(f, 4, {e(4, {3, 4})}));
    const auto fr = build_port(free_qmatroid(f, 3), sp(f, 3, {e(3, {1})}), sp(f, 3, {e(3, {2}), e(3, {3})}));
    CHECK(qmatroid_gamma_min_check(fr).ok());
    CHECK_THROWS_AS(qmatroid_gamma_min_check(port_of(fixtures::example1())), InputError);
  }

  TEST_CASE("MRD threshold") {
    const auto g = fixtures::gabidulin42();
    const auto rep = mrd_threshold_check(g.code, g.dealer, g.players);
    CHECK(rep.ok());
    CHECK(rep.threshold == Rational(2));
    CHECK(rep.cutoff == 2);
    const auto port = port_of(g);
    CHECK(is_threshold(port.access) == std::optional<std::size_t>(2));

    const auto full = gabidulin(4, 4, th::f2());
    const auto fr = mrd_threshold_check(full, g.dealer, g.players);
    CHECK(fr.ok());
    CHECK(fr.threshold == Rational(4));
    CHECK(build_port(induced_qpolymatroid(full), g.dealer, g.players).access.is_degenerate());

    const auto ex = fixtures::example1();
    CHECK_THROWS_AS(mrd_threshold_check(ex.code, ex.dealer, ex.players), InputError);
  }

  TEST_CASE("MRD threshold over F_3") {
    const auto f = th::f3();
    const auto c = gabidulin(3, 2, f, 3);
    const auto p0 = sp(f, 3, {e(3, {1})});
    const auto p = sp(f, 3, {e(3, {2}), e(3, {3})});
    const auto rep = mrd_threshold_check(c, p0, p);
    CHECK(rep.ok());
    CHECK(rep.threshold == Rational(2));
  }
}

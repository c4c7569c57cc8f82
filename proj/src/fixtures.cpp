#include "rmss/fixtures.hpp"

namespace rmss::fixtures {

namespace {

const FiniteField& f2() {
  static const FiniteField f = field_make(2);
  return f;
}

Mat m(std::size_t cols, const std::vector<std::vector<long long>>& rows) { return Mat::from_rows(f2(), cols, rows); }

Subspace span4(const std::vector<std::vector<long long>>& rows) { return Subspace::span(f2(), 4, rows); }

Subspace players_e234() { return span4({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}); }

}  // namespace

Instance example1() {
  auto code = RankMetricCode::from_basis({
      m(6, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 0, 1}}),
      m(6, {{0, 1, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 1}, {0, 0, 1, 1, 0, 1}, {1, 1, 1, 1, 1, 1}}),
      m(6, {{0, 0, 1, 0, 0, 0}, {1, 1, 0, 1, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 0, 0, 0, 1, 0}}),
      m(6, {{0, 0, 0, 1, 0, 0}, {1, 1, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 1}, {1, 0, 1, 1, 1, 1}}),
      m(6, {{0, 0, 0, 0, 1, 0}, {0, 1, 1, 1, 1, 1}, {0, 0, 1, 1, 0, 0}, {1, 0, 1, 1, 0, 0}}),
      m(6, {{0, 0, 0, 0, 0, 1}, {0, 1, 0, 1, 1, 0}, {0, 1, 1, 1, 0, 1}, {0, 0, 1, 0, 1, 0}}),
  });
  return {code, span4({{1, 0, 0, 1}}), players_e234()};
}

Mat example1_dealt() {
  return m(6, {{0, 1, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 0}, {1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 1, 0}});
}

Mat example1_secret() { return m(6, {{0, 0, 1, 1, 1, 0}}); }

Subspace example1_p1() { return span4({{0, 0, 1, 0}}); }
Subspace example1_p2() { return span4({{0, 1, 1, 0}}); }

Instance example3() {
  auto code = RankMetricCode::from_basis({
      m(2, {{1, 0}, {0, 0}, {1, 1}, {0, 1}}),
      m(2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}}),
      m(2, {{0, 0}, {1, 0}, {1, 0}, {1, 0}}),
      m(2, {{0, 0}, {0, 1}, {0, 1}, {0, 1}}),
  });
  return {code, span4({{1, 0, 0, 0}}), players_e234()};
}

Instance gabidulin42() { return {gabidulin(4, 2, f2()), span4({{1, 0, 0, 0}}), players_e234()}; }

}  // namespace rmss::fixtures

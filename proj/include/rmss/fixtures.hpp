#pragma once

#include "rmss/rank_code.hpp"

namespace rmss::fixtures {

/// A code with dealer and player spaces, P0 + P = F_q^n direct.
struct Instance {
  RankMetricCode code;
  Subspace dealer;
  Subspace players;
};

/// Six 4 x 6 binary generators; P0 = <e1 + e4>, P = <e2, e3, e4>.
Instance example1();
/// The dealt codeword and secret [0 0 1 1 1 0] of the worked sharing example.
Mat example1_dealt();
Mat example1_secret();
/// Players <e3> and <e2 + e3>.
Subspace example1_p1();
Subspace example1_p2();

/// Four 4 x 2 binary generators inducing a q-matroid; P0 = <e1>, P = <e2, e3, e4>.
Instance example3();

/// gabidulin(4, 2) over F_2 with P0 = <e1>, P = <e2, e3, e4>.
Instance gabidulin42();

}  // namespace rmss::fixtures

#pragma once

// Dense univariate polynomials over a FiniteField, low degree first. Used to
// build extension-field tables and the F_{q^m} arithmetic behind Gabidulin
// codes. Internal to the library.

#include "rmss/field.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rmss::detail {

using Poly = std::vector<Elem>;

void poly_trim(Poly& a);
Poly poly_mul(const FiniteField& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a monic or non-monic nonzero m.
Poly poly_mod(const FiniteField& f, Poly a, const Poly& m);

/// Trial division by every monic polynomial of degree 1..deg/2. `budget` caps
/// the number of candidate divisors; exceeding it throws LimitExceeded.
bool poly_is_irreducible(const FiniteField& f, const Poly& monic, std::uint64_t budget);

/// The monic irreducible of the given degree whose lower coefficients, read
/// as a base-q integer (c_0 least significant), are smallest.
Poly least_irreducible(const FiniteField& f, unsigned degree, std::uint64_t budget);

}  // namespace rmss::detail

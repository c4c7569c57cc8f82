#include "poly.hpp"

#include "rmss/errors.hpp"

namespace rmss::detail {

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const FiniteField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  poly_trim(out);
  return out;
}

Poly poly_mod(const FiniteField& f, Poly a, const Poly& m) {
  poly_trim(a);
  Poly mm = m;
  poly_trim(mm);
  if (mm.empty()) throw InputError("polynomial division by zero");
  const std::size_t dm = mm.size() - 1;
  const Elem lead_inv = f.inv(mm.back());
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const Elem factor = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, mm[i]));
    poly_trim(a);
  }
  return a;
}

namespace {

// Advances the lower `degree` coefficients of a monic polynomial as a base-q
// counter. Returns false on wrap-around.
bool next_monic(const FiniteField& f, Poly& p, unsigned degree) {
  for (unsigned i = 0; i < degree; ++i) {
    if (p[i] + 1u < f.order()) {
      ++p[i];
      return true;
    }
    p[i] = 0;
  }
  return false;
}

}  // namespace

bool poly_is_irreducible(const FiniteField& f, const Poly& monic, std::uint64_t budget) {
  const unsigned deg = static_cast<unsigned>(monic.size()) - 1;
  if (deg == 0) return false;
  std::uint64_t spent = 0;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    do {
      if (++spent > budget) throw LimitExceeded("irreducibility test exceeds the enumeration guard");
      if (poly_mod(f, monic, divisor).empty()) return false;
    } while (next_monic(f, divisor, d));
  }
  return true;
}

Poly least_irreducible(const FiniteField& f, unsigned degree, std::uint64_t budget) {
  Poly cand(degree + 1, 0);
  cand[degree] = 1;
  do {
    if (poly_is_irreducible(f, cand, budget)) return cand;
  } while (next_monic(f, cand, degree));
  throw InputError("no irreducible polynomial found");  // unreachable for degree >= 1
}

}  // namespace rmss::detail

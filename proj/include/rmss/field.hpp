#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rmss {

/// An element of F_q stored as its integer representative: for q = p^e the
/// coefficients c_0..c_{e-1} of the residue polynomial packed base p,
/// little-endian (c_0 + c_1 p + ...). Prime-field elements are residues.
using Elem = std::uint8_t;

/// Finite field F_q, q = p^e <= 256, with table-driven arithmetic.
///
/// Extension fields are F_p[x]/(f) for a monic irreducible f of degree e. When
/// no modulus is supplied the monic irreducible with the smallest packed
/// lower-coefficient value is used (x^2+x+1 for F_4, x^3+x+1 for F_8, ...).
/// Handles are cheap to copy; all copies share one immutable table set.
class FiniteField {
 public:
  /// Throws InputError for non-prime p, e = 0, q > 256, a modulus of the wrong
  /// degree, or a reducible modulus.
  static FiniteField make(unsigned p, unsigned e = 1,
                          std::optional<std::vector<unsigned>> modulus = std::nullopt);

  unsigned characteristic() const;
  unsigned degree() const;
  unsigned order() const;
  /// Monic modulus coefficients, low degree first (length e + 1). Empty for
  /// prime fields.
  const std::vector<unsigned>& modulus() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  /// Throws InputError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Validates 0 <= v < q.
  Elem from_int(long long v) const;

  std::string name() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  struct Tables;
  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

inline FiniteField field_make(unsigned p, unsigned e = 1,
                              std::optional<std::vector<unsigned>> modulus = std::nullopt) {
  return FiniteField::make(p, e, std::move(modulus));
}

bool is_prime(unsigned n);

}  // namespace rmss

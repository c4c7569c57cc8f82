#include "rmss/field.hpp"

#include "poly.hpp"
#include "rmss/errors.hpp"


namespace rmss {

struct FiniteField::Tables {
  unsigned p = 0;
  unsigned e = 0;
  unsigned q = 0;
  std::vector<unsigned> modulus;
  std::vector<Elem> add;  // q*q
  std::vector<Elem> mul;  // q*q
  std::vector<Elem> neg;  // q
  std::vector<Elem> inv;  // q, inv[0] unused
};

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField FiniteField::make(unsigned p, unsigned e, std::optional<std::vector<unsigned>> modulus) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw InputError("field extension degree must be at least 1");
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > 256) throw InputError("field order exceeds the supported range q <= 256");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = q;
  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);

  if (e == 1) {
    for (unsigned a = 0; a < q; ++a) {
      t->neg[a] = static_cast<Elem>((p - a) % p);
      for (unsigned b = 0; b < q; ++b) {
        t->add[a * q + b] = static_cast<Elem>((a + b) % p);
        t->mul[a * q + b] = static_cast<Elem>((a * b) % p);
      }
    }
  } else {
    const FiniteField base = FiniteField::make(p, 1);
    detail::Poly mod;
    if (modulus) {
      if (modulus->size() != e + 1 || (*modulus)[e] % p == 0)
        throw InputError("modulus must have degree " + std::to_string(e));
      const Elem lead_inv = base.inv(base.from_int((*modulus)[e] % p));
      for (unsigned c : *modulus) mod.push_back(base.mul(base.from_int(c % p), lead_inv));
      if (!detail::poly_is_irreducible(base, mod, std::uint64_t{1} << 20))
        throw InputError("modulus is reducible over F_" + std::to_string(p));
    } else {
      mod = detail::least_irreducible(base, e, std::uint64_t{1} << 20);
    }
    t->modulus.assign(mod.begin(), mod.end());

    auto decode = [&](unsigned v) {
      detail::Poly c(e, 0);
      for (unsigned i = 0; i < e; ++i, v /= p) c[i] = static_cast<Elem>(v % p);
      return c;
    };
    auto encode = [&](const detail::Poly& c) {
      unsigned v = 0;
      for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
      return static_cast<Elem>(v);
    };
    for (unsigned a = 0; a < q; ++a) {
      const auto ca = decode(a);
      detail::Poly na(e);
      for (unsigned i = 0; i < e; ++i) na[i] = base.neg(ca[i]);
      t->neg[a] = encode(na);
      for (unsigned b = 0; b < q; ++b) {
        const auto cb = decode(b);
        detail::Poly s(e);
        for (unsigned i = 0; i < e; ++i) s[i] = base.add(ca[i], cb[i]);
        t->add[a * q + b] = encode(s);
        t->mul[a * q + b] = encode(detail::poly_mod(base, detail::poly_mul(base, ca, cb), mod));
      }
    }
  }

  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b] == 1) {
        t->inv[a] = static_cast<Elem>(b);
        break;
      }
  return FiniteField(std::move(t));
}

unsigned FiniteField::characteristic() const { return t_->p; }
unsigned FiniteField::degree() const { return t_->e; }
unsigned FiniteField::order() const { return t_->q; }
const std::vector<unsigned>& FiniteField::modulus() const { return t_->modulus; }

Elem FiniteField::add(Elem a, Elem b) const { return t_->add[a * t_->q + b]; }
Elem FiniteField::sub(Elem a, Elem b) const { return t_->add[a * t_->q + t_->neg[b]]; }
Elem FiniteField::mul(Elem a, Elem b) const { return t_->mul[a * t_->q + b]; }
Elem FiniteField::neg(Elem a) const { return t_->neg[a]; }

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InputError("inverse of zero");
  return t_->inv[a];
}

Elem FiniteField::from_int(long long v) const {
  if (v < 0 || v >= static_cast<long long>(t_->q))
    throw InputError("value " + std::to_string(v) + " is not an element of " + name());
  return static_cast<Elem>(v);
}

std::string FiniteField::name() const { return "F_" + std::to_string(t_->q); }

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->e == b.t_->e && a.t_->modulus == b.t_->modulus;
}

}  // namespace rmss

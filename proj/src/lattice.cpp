#include "rmss/lattice.hpp"

#include "rmss/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace rmss {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw LimitExceeded("count overflows 64 bits");
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, q);
  return r;
}

// Fills every RREF matrix with the given pivot columns, in lexicographic
// order of entries.
void fill_free(const FiniteField& f, std::size_t n, const std::vector<std::size_t>& pivots, std::vector<Subspace>& out) {
  const std::size_t k = pivots.size();
  Mat m(f, k, n);
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t r = 0; r < k; ++r) {
    m(r, pivots[r]) = 1;
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!is_pivot[c]) free_slots.emplace_back(r, c);
  }
  const unsigned q = f.order();
  while (true) {
    out.push_back(Subspace::from_rows(m));
    std::size_t i = free_slots.size();
    while (i > 0) {
      auto [r, c] = free_slots[i - 1];
      if (m(r, c) + 1u < q) {
        ++m(r, c);
        break;
      }
      m(r, c) = 0;
      --i;
    }
    if (i == 0) return;
  }
}

void layer(const FiniteField& f, std::size_t n, std::size_t k, std::vector<Subspace>& out) {
  std::vector<Subspace> tmp;
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  while (true) {
    fill_free(f, n, pivots, tmp);
    // next combination
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(tmp.begin(), tmp.end());
  out.insert(out.end(), std::make_move_iterator(tmp.begin()), std::make_move_iterator(tmp.end()));
}

}  // namespace

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  if (q < 2) throw InputError("gaussian_binomial: q must be at least 2");
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), dividing after each factor keeps
  // every intermediate an integer (it is the binomial for n-k+i+1 choose i+1).
  std::uint64_t result = 1;
  k = std::min(k, n - k);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t num = checked_pow(q, n - i) - 1;
    const std::uint64_t den = checked_pow(q, i + 1) - 1;
    // result * num / den without overflow where possible
    const std::uint64_t g = std::gcd(result, den);
    const std::uint64_t r = result / g;
    const std::uint64_t d = den / g;
    result = checked_mul(r, num / d);
    if (num % d != 0) throw Error("gaussian_binomial: inexact division");
  }
  return result;
}

std::uint64_t subspace_count(std::uint64_t n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const std::uint64_t c = gaussian_binomial(n, k, q);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) throw LimitExceeded("count overflows 64 bits");
    total += c;
  }
  return total;
}

std::uint64_t gl_order(std::uint64_t n, std::uint64_t q) {
  try {
    const std::uint64_t qn = checked_pow(q, n);
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) r = checked_mul(r, qn - checked_pow(q, i));
    return r;
  } catch (const LimitExceeded&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

std::vector<Subspace> enumerate_subspaces(const FiniteField& f, std::size_t n, std::optional<std::size_t> k,
                                          const Limits& limits) {
  if (k && *k > n) return {};
  std::uint64_t count = 0;
  try {
    count = k ? gaussian_binomial(n, *k, f.order()) : subspace_count(n, f.order());
  } catch (const LimitExceeded&) {
    count = std::numeric_limits<std::uint64_t>::max();
  }
  if (count > limits.max_enum)
    throw LimitExceeded("enumerating L(" + f.name() + "^" + std::to_string(n) + ") needs " + std::to_string(count) +
                        " subspaces, above the guard of " + std::to_string(limits.max_enum));
  std::vector<Subspace> out;
  out.reserve(count);
  if (k) {
    layer(f, n, *k, out);
  } else {
    for (std::size_t d = 0; d <= n; ++d) layer(f, n, d, out);
  }
  return out;
}

std::vector<Mat> enumerate_gl(const FiniteField& f, std::size_t n, const Limits& limits) {
  const std::uint64_t order = gl_order(n, f.order());
  if (order > limits.max_gl)
    throw LimitExceeded("enumerating GL(" + std::to_string(n) + ", " + std::to_string(f.order()) + ") needs " +
                        std::to_string(order) + " matrices, above the guard of " + std::to_string(limits.max_gl));
  std::vector<Mat> out;
  out.reserve(order);
  if (n == 0) {
    out.emplace_back(f, 0, 0);
    return out;
  }
  const std::uint64_t qn = checked_pow(f.order(), n);
  // All vectors of F_q^n in lexicographic order.
  std::vector<std::vector<Elem>> vectors(qn, std::vector<Elem>(n));
  for (std::uint64_t idx = 0; idx < qn; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t j = n; j-- > 0; v /= f.order()) vectors[idx][j] = static_cast<Elem>(v % f.order());
  }
  Mat current(f, n, n);
  std::vector<Subspace> spans{Subspace::zero(f, n)};
  auto recurse = [&](auto&& self, std::size_t row) -> void {
    if (row == n) {
      out.push_back(current);
      return;
    }
    for (const auto& v : vectors) {
      if (spans[row].contains_vector(v)) continue;
      std::copy(v.begin(), v.end(), current.row(row).begin());
      Mat one(f, 1, n);
      std::copy(v.begin(), v.end(), one.row(0).begin());
      spans.push_back(sum(spans[row], Subspace::from_rows(one)));
      self(self, row + 1);
      spans.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

Lattice::Lattice(FiniteField f, std::size_t n, std::vector<Subspace> members)
    : field_(std::move(f)), n_(n), members_(std::move(members)) {
  index_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
}

std::shared_ptr<const Lattice> Lattice::of(const FiniteField& f, std::size_t n, const Limits& limits) {
  using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>, std::size_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const Lattice>> cache;
  Key key{f.characteristic(), f.degree(), f.modulus(), n};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) {
      if (it->second->size() > limits.max_enum)
        throw LimitExceeded("lattice L(" + f.name() + "^" + std::to_string(n) + ") exceeds the enumeration guard");
      return it->second;
    }
  }
  auto lat = std::make_shared<const Lattice>(f, n, enumerate_subspaces(f, n, std::nullopt, limits));
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(lat)).first->second;
}

std::size_t Lattice::index_of(const Subspace& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw InputError("subspace is not a member of this lattice");
  return it->second;
}

std::vector<std::size_t> Lattice::below(const Subspace& v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].dim() <= v.dim() && v.contains(members_[i])) out.push_back(i);
  return out;
}

std::vector<std::size_t> Lattice::above(const Subspace& v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].dim() >= v.dim() && members_[i].contains(v)) out.push_back(i);
  return out;
}

}  // namespace rmss

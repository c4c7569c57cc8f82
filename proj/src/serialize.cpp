#include "rmss/serialize.hpp"

#include "rmss/errors.hpp"

#include <cstdio>
#include <fstream>

namespace rmss {

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::vector<std::vector<long long>> int_rows(const Json& rows) {
  if (!rows.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<long long>> out;
  for (const auto& r : rows) {
    if (!r.is_array()) throw InputError("matrix row must be an array");
    std::vector<long long> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw InputError("matrix entries must be integers");
      row.push_back(x.get<long long>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

FiniteField field_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  std::optional<std::vector<unsigned>> modulus;
  if (j.contains("modulus")) modulus = get<std::vector<unsigned>>(j, "modulus");
  if (j.contains("p")) {
    const auto p = get<unsigned>(j, "p");
    const auto e = j.contains("e") ? get<unsigned>(j, "e") : 1U;
    FiniteField f = FiniteField::make(p, e, e > 1 ? modulus : std::nullopt);
    if (j.contains("q") && get<unsigned>(j, "q") != f.order()) throw InputError("q does not equal p^e");
    return f;
  }
  const auto q = get<unsigned>(j, "q");
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p) continue;
    unsigned e = 0;
    unsigned r = q;
    while (r % p == 0) r /= p, ++e;
    if (r != 1) break;
    return FiniteField::make(p, e, e > 1 ? modulus : std::nullopt);
  }
  throw InputError("q = " + std::to_string(q) + " is not a prime power");
}

Json field_to_json(const FiniteField& f) {
  Json j;
  j["q"] = f.order();
  j["p"] = f.characteristic();
  j["e"] = f.degree();
  if (f.degree() > 1) j["modulus"] = f.modulus();
  return j;
}

Mat mat_from_json(const FiniteField& f, const Json& rows, std::size_t cols) {
  auto r = int_rows(rows);
  for (const auto& row : r)
    if (row.size() != cols)
      throw InputError("matrix row has length " + std::to_string(row.size()) + ", expected " + std::to_string(cols));
  return Mat::from_rows(f, cols, r);
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_ints()) rows.push_back(r);
  return rows;
}

Subspace subspace_from_json(const FiniteField& f, std::size_t n, const Json& j) {
  const Json& rows = j.is_object() ? j.at("rows") : j;
  if (j.is_object() && j.contains("n") && j.at("n").get<std::size_t>() != n)
    throw InputError("subspace ambient dimension does not match the code");
  return Subspace::from_rows(mat_from_json(f, rows, n));
}

Json subspace_to_json(const Subspace& v) { return mat_to_json(v.basis()); }

RankMetricCode code_from_json(const Json& j) {
  const FiniteField f = field_from_json(j);
  const auto n = get<std::size_t>(j, "n");
  const auto m = get<std::size_t>(j, "m");
  if (!j.contains("basis") || !j.at("basis").is_array()) throw InputError("missing field \"basis\"");
  std::vector<Mat> basis;
  for (const auto& mj : j.at("basis")) {
    Mat x = mat_from_json(f, mj, m);
    if (x.rows() != n) throw InputError("basis matrix must have n = " + std::to_string(n) + " rows");
    basis.push_back(std::move(x));
  }
  if (basis.empty()) return RankMetricCode::zero(f, n, m);
  return RankMetricCode::from_basis(basis);
}

Json code_to_json(const RankMetricCode& c) {
  Json j = field_to_json(c.field());
  j["n"] = c.n();
  j["m"] = c.m();
  Json basis = Json::array();
  for (const auto& b : c.basis()) basis.push_back(mat_to_json(b));
  j["basis"] = basis;
  return j;
}

Json rational_to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

std::string rational_text(const Rational& r) { return to_string(r); }

Json rank_table_to_json(const std::vector<std::pair<Subspace, Rational>>& table) {
  Json out = Json::array();
  for (const auto& [v, r] : table) out.push_back(Json{{"subspace", subspace_to_json(v)}, {"rank", rational_to_json(r)}});
  return out;
}

Json access_to_json(const AccessStructure& s, bool full) {
  auto list = [&](const std::vector<Subspace>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(subspace_to_json(s.to_ambient(v)));
    return a;
  };
  Json j;
  j["player_space"] = subspace_to_json(s.player_space());
  j["gamma_min"] = list(gamma_min(s));
  j["alpha_max"] = list(alpha_max(s));
  j["perfect"] = is_perfect(s);
  if (auto g = min_gap(s)) j["gap"] = *g;
  else j["gap"] = nullptr;
  if (full) {
    j["gamma"] = list(s.gamma().sorted());
    j["alpha"] = list(s.alpha().sorted());
  }
  return j;
}

std::string entropy_text(double bits) {
  if (bits <= 0 && bits > -5e-13) bits = 0.0;  // avoid "-0.000000000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", bits);
  return buf;
}

std::pair<Mat, Mat> shares_from_json(const FiniteField& f, std::size_t n, std::size_t m, const Json& j) {
  const Json* list = &j;
  Json wrapped;
  if (j.is_object() && j.contains("shares")) list = &j.at("shares");
  else if (j.is_object()) {
    wrapped = Json::array({j});
    list = &wrapped;
  }
  if (!list->is_array()) throw InputError("shares must be a list of {\"holder\", \"value\"} objects");
  Mat holders(f, 0, n);
  Mat values(f, 0, m);
  for (const auto& s : *list) {
    if (!s.is_object() || !s.contains("holder") || !s.contains("value"))
      throw InputError("each share needs \"holder\" and \"value\"");
    Mat h = mat_from_json(f, s.at("holder"), n);
    Mat v = mat_from_json(f, s.at("value"), m);
    if (h.rows() != v.rows()) throw InputError("share value must have one row per holder row");
    holders = holders.vstack(h);
    values = values.vstack(v);
  }
  return {holders, values};
}

Json share_to_json(const Share& s) {
  return Json{{"holder", subspace_to_json(s.holder)}, {"value", mat_to_json(s.value)}};
}

}  // namespace rmss

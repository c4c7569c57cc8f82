#pragma once

#include "rmss/access.hpp"
#include "rmss/port.hpp"
#include "rmss/qpolymatroid.hpp"
#include "rmss/rank_code.hpp"
#include "rmss/scheme.hpp"

#include <json.hpp>

#include <filesystem>
#include <vector>

namespace rmss {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InputError on I/O or syntax failure.
Json load_json(const std::filesystem::path& path);

/// Accepts "p" (with optional "e", "modulus") or "q"; when both are present
/// they must agree.
FiniteField field_from_json(const Json& j);
Json field_to_json(const FiniteField& f);

/// Nested integer rows; `cols` is used when the row list is empty.
Mat mat_from_json(const FiniteField& f, const Json& rows, std::size_t cols);
Json mat_to_json(const Mat& m);

/// A bare row list or {"rows": [...]}; rows are canonicalized. Row width must
/// be n.
Subspace subspace_from_json(const FiniteField& f, std::size_t n, const Json& j);
Json subspace_to_json(const Subspace& v);

/// {"q", "p", "e", "n", "m", "basis": [matrix, ...]}, optional "modulus".
RankMetricCode code_from_json(const Json& j);
Json code_to_json(const RankMetricCode& c);

Json rational_to_json(const Rational& r);
std::string rational_text(const Rational& r);

/// [{"subspace": rows, "rank": {"num", "den"}}, ...] in canonical order.
Json rank_table_to_json(const std::vector<std::pair<Subspace, Rational>>& table);

/// Members are written in ambient coordinates (through the chart).
Json access_to_json(const AccessStructure& s, bool full = false);

/// Entropy values are decimal strings with 12 digits after the point.
std::string entropy_text(double bits);

/// Shares for reconstruction: a list of {"holder", "value"} objects, a single
/// such object, or {"shares": [...]}. Returns the stacked holder rows and
/// values.
std::pair<Mat, Mat> shares_from_json(const FiniteField& f, std::size_t n, std::size_t m, const Json& j);
Json share_to_json(const Share& s);

}  // namespace rmss

#pragma once

#include "derivpoly/derivative_polys.hpp"
#include "derivpoly/poly.hpp"
#include "derivpoly/series.hpp"
#include "derivpoly/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace derivpoly::io {

using json = nlohmann::ordered_json;

// Poly: ["c0", "c1", ...], lowest degree first.
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// Series: {"order": N, "coefficients": [...]}.
json series_to_json(const Series<Rational>& s);
json series_to_json(const Series<Poly>& s);
Series<Rational> rational_series_from_json(const json& j);

/// Exact number table as decimal strings, row by row.
struct NumberTable {
    std::string kind; // eulerian | macmahon | bernoulli | bernoulli-poly
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const NumberTable&, const NumberTable&) = default;
};

/// eulerian/macmahon: rows 1..n_max; bernoulli: one row per B_0..B_{n_max};
/// bernoulli-poly: coefficients of B_0(x)..B_{n_max}(x).
NumberTable build_number_table(std::string_view kind, int n_max);

json table_to_json(const NumberTable& t);
NumberTable table_from_json(const json& j);
std::string table_to_csv(const NumberTable& t);
std::string table_to_plain(const NumberTable& t);

/// A derivative or combinatorial polynomial together with how it was built.
struct PolyRecord {
    std::string family; // P | Q | S | E | A | M
    int n = 0;
    std::optional<Rational> r, a, b, d;
    Poly poly;

    friend bool operator==(const PolyRecord&, const PolyRecord&) = default;
};

json poly_record_to_json(const PolyRecord& rec);
PolyRecord poly_record_from_json(const json& j);

json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const json& j);
/// One line: "PASS identity k=v ..." plus the witness on failure.
std::string verdict_to_plain(const Verdict& v);

/// "[c0, c1, ...]"
std::string bracket_list(const std::vector<std::string>& items);

} // namespace derivpoly::io

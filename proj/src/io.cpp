#include "derivpoly/io.hpp"

#include "derivpoly/special_numbers.hpp"

#include <sstream>

namespace derivpoly::io {

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep)
{
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
            out += sep;
        out += items[i];
    }
    return out;
}

Rational rational_from(const json& j)
{
    if (!j.is_string())
        throw UsageError("expected a rational string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

std::vector<std::string> strings_of(const std::vector<Integer>& row)
{
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto& v : row)
        out.push_back(v.get_str());
    return out;
}

} // namespace

json poly_to_json(const Poly& p)
{
    json arr = json::array();
    for (const auto& c : p.coefficient_strings())
        arr.push_back(c);
    return arr;
}

Poly poly_from_json(const json& j)
{
    if (!j.is_array())
        throw UsageError("polynomial JSON must be an array");
    std::vector<Rational> c;
    for (const auto& e : j)
        c.push_back(rational_from(e));
    return Poly(std::move(c));
}

json series_to_json(const Series<Rational>& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coefficients())
        coeffs.push_back(c.to_string());
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

json series_to_json(const Series<Poly>& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coefficients())
        coeffs.push_back(poly_to_json(c));
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

Series<Rational> rational_series_from_json(const json& j)
{
    const int order = j.at("order").get<int>();
    std::vector<Rational> c;
    for (const auto& e : j.at("coefficients"))
        c.push_back(rational_from(e));
    if (static_cast<int>(c.size()) != order + 1)
        throw UsageError("series JSON must carry exactly order + 1 coefficients");
    return Series<Rational>(order, std::move(c));
}

NumberTable build_number_table(std::string_view kind, int n_max)
{
    if (n_max < 1)
        throw UsageError("table size must be >= 1");
    NumberTable t{std::string(kind), {}};
    if (kind == "eulerian" || kind == "macmahon") {
        const Triangle tri =
            kind == "eulerian" ? build_eulerian_triangle(n_max) : build_macmahon_triangle(n_max);
        for (int n = 1; n <= n_max; ++n)
            t.rows.push_back(strings_of(tri.row(n)));
    } else if (kind == "bernoulli") {
        const BernoulliCache cache = bernoulli_numbers(n_max);
        for (const auto& b : cache.values())
            t.rows.push_back({b.to_string()});
    } else if (kind == "bernoulli-poly") {
        for (int n = 0; n <= n_max; ++n)
            t.rows.push_back(bernoulli_poly(n).coefficient_strings());
    } else {
        throw UsageError("unknown table kind '" + std::string(kind) + "'");
    }
    return t;
}

json table_to_json(const NumberTable& t) { return json{{"kind", t.kind}, {"rows", t.rows}}; }

NumberTable table_from_json(const json& j)
{
    NumberTable t;
    t.kind = j.at("kind").get<std::string>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return t;
}

std::string table_to_csv(const NumberTable& t)
{
    std::string out;
    for (const auto& row : t.rows)
        out += join(row, ",") + "\n";
    return out;
}

std::string table_to_plain(const NumberTable& t)
{
    std::string out;
    for (const auto& row : t.rows)
        out += join(row, " ") + "\n";
    return out;
}

json poly_record_to_json(const PolyRecord& rec)
{
    json params = json::object();
    if (rec.r)
        params["r"] = rec.r->to_string();
    if (rec.a)
        params["a"] = rec.a->to_string();
    if (rec.b)
        params["b"] = rec.b->to_string();
    if (rec.d)
        params["d"] = rec.d->to_string();
    return json{{"family", rec.family}, {"n", rec.n}, {"params", params}, {"coefficients", poly_to_json(rec.poly)}};
}

PolyRecord poly_record_from_json(const json& j)
{
    PolyRecord rec;
    rec.family = j.at("family").get<std::string>();
    rec.n = j.at("n").get<int>();
    const auto& params = j.at("params");
    auto opt = [&](const char* key) -> std::optional<Rational> {
        if (!params.contains(key))
            return std::nullopt;
        return rational_from(params.at(key));
    };
    rec.r = opt("r");
    rec.a = opt("a");
    rec.b = opt("b");
    rec.d = opt("d");
    rec.poly = poly_from_json(j.at("coefficients"));
    return rec;
}

json verdict_to_json(const Verdict& v)
{
    json params = json::object();
    for (const auto& p : v.params)
        params[p.key] = p.value;
    json out{{"identity", v.identity}, {"params", params}, {"pass", v.passed()}};
    out["first_failure"] = v.first_failure ? json(*v.first_failure) : json(nullptr);
    out["witness"] = v.witness ? json{{"lhs", v.witness->lhs}, {"rhs", v.witness->rhs}} : json(nullptr);
    out["status"] = std::string(to_string(v.status));
    return out;
}

Verdict verdict_from_json(const json& j)
{
    Verdict v;
    v.identity = j.at("identity").get<std::string>();
    for (const auto& [key, value] : j.at("params").items()) {
        const auto text = value.get<std::string>();
        VerdictParam p{key, text, std::nullopt};
        try {
            p.numeric = Rational::parse(text);
        } catch (const UsageError&) {
        }
        v.params.push_back(std::move(p));
    }
    const bool pass = j.at("pass").get<bool>();
    if (j.contains("status")) {
        const auto s = j.at("status").get<std::string>();
        v.status = s == "pass" ? Status::Pass : (s == "inconclusive" ? Status::Inconclusive : Status::Fail);
    } else {
        v.status = pass ? Status::Pass : Status::Fail;
    }
    if (!j.at("first_failure").is_null())
        v.first_failure = j.at("first_failure").get<int>();
    if (!j.at("witness").is_null())
        v.witness = Witness{j.at("witness").at("lhs").get<std::string>(), j.at("witness").at("rhs").get<std::string>()};
    return v;
}

std::string verdict_to_plain(const Verdict& v)
{
    std::ostringstream os;
    switch (v.status) {
    case Status::Pass:
        os << "PASS";
        break;
    case Status::Fail:
        os << "FAIL";
        break;
    case Status::Inconclusive:
        os << "INCONCLUSIVE";
        break;
    }
    os << ' ' << v.identity;
    for (const auto& p : v.params)
        os << ' ' << p.key << '=' << p.value;
    if (v.first_failure)
        os << " first_failure=" << *v.first_failure;
    if (v.witness)
        os << " lhs=" << v.witness->lhs << " rhs=" << v.witness->rhs;
    return os.str();
}

std::string bracket_list(const std::vector<std::string>& items) { return "[" + join(items, ", ") + "]"; }

} // namespace derivpoly::io

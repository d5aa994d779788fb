#include "derivpoly/derivative_polys.hpp"
#include "derivpoly/io.hpp"
#include "derivpoly/runner.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace derivpoly;
using derivpoly::io::json;

TEST_CASE("polynomial JSON round trip")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        const Poly p = oracle::random_poly(rng);
        CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
        CHECK(io::poly_from_json(json::parse(io::poly_to_json(p).dump())) == p);
    }
    CHECK(io::poly_to_json(Poly()).dump() == R"(["0"])");
    CHECK_THROWS_AS(io::poly_from_json(json::parse("[1, 2]")), UsageError);
    CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"a": 1})")), UsageError);
}

TEST_CASE("series JSON round trip")
{
    const Series<Rational> s(3, {1, Rational(Integer(-1), Integer(4)), 0, 7});
    const json j = io::series_to_json(s);
    CHECK(j.dump() == R"({"order":3,"coefficients":["1","-1/4","0","7"]})");
    CHECK(io::rational_series_from_json(j) == s);
    CHECK_THROWS_AS(io::rational_series_from_json(json::parse(R"({"order":3,"coefficients":["1"]})")), UsageError);
}

TEST_CASE("number tables")
{
    const auto t = io::build_number_table("eulerian", 3);
    CHECK(io::table_to_plain(t) == "1\n1 1\n1 4 1\n");
    CHECK(io::table_to_csv(io::build_number_table("macmahon", 4)) == "1\n1,1\n1,6,1\n1,23,23,1\n");
    CHECK(io::table_to_json(io::build_number_table("bernoulli", 4)).dump() ==
          R"({"kind":"bernoulli","rows":[["1"],["-1/2"],["1/6"],["0"],["-1/30"]]})");
    for (const char* kind : {"eulerian", "macmahon", "bernoulli", "bernoulli-poly"}) {
        const auto table = io::build_number_table(kind, 9);
        CHECK(io::table_from_json(json::parse(io::table_to_json(table).dump())) == table);
    }
    CHECK_THROWS_AS(io::build_number_table("catalan", 3), UsageError);
    CHECK_THROWS_AS(io::build_number_table("eulerian", 0), UsageError);
}

TEST_CASE("polynomial record round trip")
{
    const RiccatiParams p(Rational(Integer(1), Integer(2)), -1, 3);
    io::PolyRecord rec{"S", 4, p.r(), p.a(), p.b(), Rational(Integer(1), Integer(4)),
                       build_S(4, {p, Rational(Integer(1), Integer(4))})};
    CHECK(io::poly_record_from_json(json::parse(io::poly_record_to_json(rec).dump())) == rec);
    io::PolyRecord bare{"E", 5, {}, {}, {}, {}, build_E(5)};
    CHECK(io::poly_record_from_json(io::poly_record_to_json(bare)) == bare);
}

TEST_CASE("verdict JSON round trip preserves every field")
{
    auto verdicts = run_jobs_serial(suite_jobs(Suite::Integrals));
    verdicts.push_back(check_egf_macmahon_equal_rate(4));
    for (const auto& v : verdicts) {
        const json j = io::verdict_to_json(v);
        for (const char* key : {"identity", "params", "pass", "first_failure", "witness"})
            CHECK(j.contains(key));
        const Verdict back = io::verdict_from_json(json::parse(j.dump()));
        CHECK(back.identity == v.identity);
        CHECK(back.status == v.status);
        CHECK(back.first_failure == v.first_failure);
        CHECK(back.witness.has_value() == v.witness.has_value());
        REQUIRE(back.params.size() == v.params.size());
        for (size_t i = 0; i < v.params.size(); ++i) {
            CHECK(back.params[i].key == v.params[i].key);
            CHECK(back.params[i].value == v.params[i].value);
        }
        CHECK(io::verdict_to_json(back) == j);
    }
}

TEST_CASE("plain verdict line")
{
    const Verdict v{"integral_P", {VerdictParam::of("n", 3)}, Status::Pass, {}, {}};
    CHECK(io::verdict_to_plain(v) == "PASS integral_P n=3");
    const std::string failing = io::verdict_to_plain(check_egf_macmahon_equal_rate(3));
    CHECK(failing.rfind("FAIL ", 0) == 0);
    CHECK(failing.find("first_failure=1") != std::string::npos);
    CHECK(io::bracket_list({"0", "-1", "1"}) == "[0, -1, 1]");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dads/behavior.hpp"
#include "dads/io.hpp"
#include "dads/random.hpp"

using namespace dads;
using nlohmann::json;

TEST_CASE("system files round-trip") {
    Field f7(7);
    TrialRng rng(1);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng.below(3);
        PolyMatrix m =
            random_poly_matrix(rng, f7, r, 1 + rng.below(3), 1 + rng.below(3), 3);
        json j = io::system_to_json(m);
        CHECK(io::system_from_json(j) == m);
        // serialize -> parse -> serialize is byte-stable
        CHECK(io::canonical_dump(io::system_to_json(io::system_from_json(j))) ==
              io::canonical_dump(j));
    }
}

TEST_CASE("series files round-trip") {
    Field f7(7);
    TrialRng rng(2);
    for (int t = 0; t < 25; ++t) {
        std::size_t r = 1 + rng.below(2);
        SeriesVector w = random_series_vector(rng, f7, r, 1 + rng.below(3), 4);
        json j = io::series_to_json(w);
        CHECK(io::series_from_json(j) == w);
        CHECK(io::canonical_dump(io::series_to_json(io::series_from_json(j))) ==
              io::canonical_dump(j));
    }
}

TEST_CASE("slice files round-trip through solve output") {
    Field f(101);
    Polynomial fib = Polynomial::monomial(f, Exponent{2}, f.one()) +
                     Polynomial::monomial(f, Exponent{1}, f.from_int(-1)) +
                     Polynomial::constant(f, 1, f.from_int(-1));
    BehaviorSlice slice = solve_behavior(AutoregressiveSystem(PolyMatrix(1, 1, {fib})), 8);
    json j = io::slice_to_json(slice, certify(slice));
    io::SliceData data = io::slice_from_json(j);
    CHECK(data.bound == 8);
    CHECK(data.l == 1);
    CHECK(data.basis.size() == slice.dim());
    for (std::size_t i = 0; i < data.basis.size(); ++i) CHECK(data.basis[i] == slice.basis[i]);
    CHECK(j["certificate"] == "verified");
}

TEST_CASE("series coefficients serialize by component then rank") {
    Field f7(7);
    std::vector<TruncatedSeries> comps(2, TruncatedSeries(f7, 2, 3));
    comps[1].set_coeff(Exponent{0, 1}, Fp{2});
    comps[0].set_coeff(Exponent{1, 1}, Fp{3});
    comps[0].set_coeff(Exponent{0, 0}, Fp{1});
    json j = io::series_to_json(SeriesVector(std::move(comps)));
    const json& coeffs = j["coeffs"];
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0]["component"] == 0);
    CHECK(coeffs[0]["exp"] == json::array({0, 0}));
    CHECK(coeffs[1]["component"] == 0);
    CHECK(coeffs[1]["exp"] == json::array({1, 1}));
    CHECK(coeffs[2]["component"] == 1);
}

TEST_CASE("schema violations are parse errors") {
    json good = {{"kind", "system"}, {"field", 7}, {"r", 1}, {"k", 1}, {"l", 1},
                 {"rows", json::array({json::array({json::array(
                     {json{{"coef", 3}, {"exp", json::array({1})}}})})})}};
    CHECK_NOTHROW(io::system_from_json(good));

    json j = good;
    j.erase("field");
    CHECK_THROWS_AS(io::system_from_json(j), ParseError);

    j = good;
    j["kind"] = "series";
    CHECK_THROWS_AS(io::system_from_json(j), ParseError);

    j = good;
    j["rows"][0][0][0]["exp"] = json::array({1, 0});  // wrong arity
    CHECK_THROWS_AS(io::system_from_json(j), ParseError);

    j = good;
    j["rows"][0][0][0]["coef"] = 7;  // not canonical in [0, p)
    CHECK_THROWS_AS(io::system_from_json(j), ParseError);

    j = good;
    j["rows"][0][0].push_back(j["rows"][0][0][0]);  // duplicate exponent
    CHECK_THROWS_AS(io::system_from_json(j), ParseError);

    j = good;
    j["k"] = 2;  // row count disagrees
    CHECK_THROWS_AS(io::system_from_json(j), ParseError);

    // nonprime modulus is a math-domain error, not a schema error
    j = good;
    j["field"] = 6;
    CHECK_THROWS_AS(io::system_from_json(j), MathError);
}

TEST_CASE("series schema violations") {
    json good = {{"kind", "series"}, {"field", 7}, {"r", 2}, {"l", 1}, {"bound", 3},
                 {"coeffs", json::array({json{{"coef", 3},
                                              {"component", 0},
                                              {"exp", json::array({1, 0})}}})}};
    CHECK_NOTHROW(io::series_from_json(good));

    json j = good;
    j["coeffs"][0]["component"] = 1;  // out of range
    CHECK_THROWS_AS(io::series_from_json(j), ParseError);

    j = good;
    j["coeffs"][0]["exp"] = json::array({4, 0});  // outside the declared bound
    CHECK_THROWS_AS(io::series_from_json(j), ParseError);

    j = good;
    j["bound"] = -2;
    CHECK_THROWS_AS(io::series_from_json(j), ParseError);
}

TEST_CASE("file loading reports parse failures") {
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/path.json"), ParseError);
}

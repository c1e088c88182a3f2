#include "kkv/serialize.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kkv;

TEST_CASE("rationals are strings")
{
    CHECK(to_json(make_rational(-3, 4)) == Json("-3/4"));
    CHECK(rational_from_json(Json("10")) == 10);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), DomainError);
    // JSON integers are exact too and are accepted on input.
    CHECK(rational_from_json(Json(3)) == 3);
}

TEST_CASE("series schema")
{
    const RationalSeries s(Variable::u, -2, {Rational(1), Rational(0), make_rational(1, 12)});
    const Json j = to_json(s);
    CHECK(j.at("variable") == "u");
    CHECK(j.at("min_degree") == -2);
    CHECK(j.at("order") == 0);
    CHECK(j.at("coefficients") == Json::array({"1", "0", "1/12"}));
    CHECK(series_from_json(j) == s);
    Json bad = j;
    bad["order"] = 5;
    CHECK_THROWS_AS(series_from_json(bad), DomainError);
}

TEST_CASE("rational function schema")
{
    const RationalFunction r(Polynomial::monomial(Rational(1), 1), Polynomial::one_plus_q_pow(2));
    const Json j = to_json(r);
    CHECK(j.at("numerator") == Json::array({"0", "1"}));
    CHECK(j.at("denominator") == Json::array({"1", "2", "1"}));
    CHECK(ratfn_from_json(j) == r);
}

TEST_CASE("grid JSON and CSV")
{
    const KkvBpsGrid grid = bps_grid_from_kkv(4);
    const Json j = to_json(grid);
    CHECK(j.at("kind") == "kkv_bps_grid");
    CHECK(j.at("rows").at(1).at(4) == "-8550");
    CHECK(grid_from_json(j).column(4) == grid.column(4));
    CHECK_THROWS_AS(bps_table_from_json(j), DomainError);
    const std::string csv = grid_to_csv(grid);
    CHECK(csv.rfind("g,h=0,h=1,h=2,h=3,h=4\n0,1,24,324,3200,25650\n", 0) == 0);
}

TEST_CASE("JSON roundtrip of tables, potentials and NL matrices")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        BpsTable t;
        for (int d = 1; d <= 3; ++d) {
            t.set_square(d, d * d);
            for (int g = 0; g <= 2; ++g) {
                t.set(g, d, oracle::random_rational(rng));
            }
        }
        const BpsTable back = bps_table_from_json(Json::parse(to_json(t).dump()));
        CHECK(back == t);
        CHECK(back.square(2) == t.square(2));
        const GwPotential pot = gw_from_bps(t, 3, 6);
        CHECK(gw_potential_from_json(Json::parse(to_json(pot).dump())) == pot);
        const RationalFunction r = oracle::random_ratfn(rng);
        CHECK(ratfn_from_json(Json::parse(to_json(r).dump())) == r);
        const RationalSeries s = oracle::random_series(rng, -3, 5);
        CHECK(series_from_json(Json::parse(to_json(s).dump())) == s);
        const NlMatrix nl = NlMatrix::random_invertible(fibre_classes(3), {{1, 0}, {1, 1}, {2, 1}}, rng);
        CHECK(nl_matrix_from_json(Json::parse(to_json(nl).dump())) == nl);
    }
}

TEST_CASE("reports")
{
    const KkvBpsGrid grid = bps_grid_from_kkv(4);
    const Json j = to_json(mnop_check(HodgeLabel{1, 1}, grid, 6));
    CHECK(j.at("equal") == true);
    CHECK(j.at("first_mismatch").is_null());
    const Json t = to_json(TransferReport{false, ClassLabel{2, 5}, 4, "differs"});
    CHECK(t.at("failing").at("m") == 2);
    CHECK(t.at("degree") == 4);
}

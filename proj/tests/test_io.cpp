#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "biatsp/errors.hpp"
#include "biatsp/io.hpp"
#include "biatsp/rational.hpp"

using namespace biatsp;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("0.35") == Rational(7, 20));
    CHECK(Rational::parse("1/3") == Rational(1, 3));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(" 4 ") == Rational(4));
    CHECK(Rational(1, 10).str() == "0.1");
    CHECK(Rational(7, 20).str() == "0.35");
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-1, 4).str() == "-0.25");
    CHECK(Rational::parse(Rational(9, 10).str()) == Rational(9, 10));
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 5) == Rational(1, 5));
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 4) >= Rational(1, 2));
}

TEST_CASE("front CSV round trip preserves vectors, tours and bytes") {
    Front f;
    f.entries.push_back({{14, 22}, Tour::from_order(std::vector<int>{0, 2, 1, 3})});
    f.entries.push_back({{9, 30}, std::nullopt});
    f.entries.push_back({{20, 11}, Tour::from_order(std::vector<int>{0, 3, 2, 1})});
    f.sort_canonical();

    const std::string csv = front_to_csv(f);
    const Front back = front_from_csv(csv);
    REQUIRE(back.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(back.entries[i].value == f.entries[i].value);
        CHECK(back.entries[i].tour == f.entries[i].tour);
    }
    CHECK(front_to_csv(back) == csv);
}

TEST_CASE("front CSV rejects malformed inputs") {
    CHECK_THROWS_AS(front_from_csv(""), input_error);
    CHECK_THROWS_AS(front_from_csv("a,b\n"), input_error);
    CHECK_THROWS_AS(front_from_csv("d1,d2,tour\n1\n"), input_error);
    CHECK_THROWS_AS(front_from_csv("d1,d2,tour\nx,2,\n"), input_error);
    // tour must be a circuit over 0..n-1 starting at 0
    CHECK_THROWS_AS(front_from_csv("d1,d2,tour\n1,2,1-0-2\n"), input_error);
    CHECK_THROWS_AS(front_from_csv("d1,d2,tour\n1,2,0-2-2\n"), input_error);
    // dominated rows violate the front invariant
    CHECK_THROWS_AS(front_from_csv("d1,d2,tour\n1,1,\n2,2,\n"), input_error);
    CHECK_THROWS_AS(front_from_csv("d1,d2,tour\n1,1,\n1,1,\n"), input_error);
}

TEST_CASE("instance JSON round trip") {
    const Instance inst = generate_random(7, 1, 12, 3, 9, 2025);
    const std::string text = instance_to_json(inst);
    const Instance back = instance_from_json(text);
    CHECK(back.n == inst.n);
    CHECK(back.name == inst.name);
    CHECK(back.w1 == inst.w1);
    CHECK(back.w2 == inst.w2);
    CHECK(instance_to_json(back) == text);

    Instance carrier = inst;
    carrier.w2 = WeightMatrix();
    const Instance carrier_back = instance_from_json(instance_to_json(carrier));
    CHECK_FALSE(carrier_back.has_second_criterion());
}

TEST_CASE("instance JSON validation failures") {
    CHECK_THROWS_AS(instance_from_json("not json"), input_error);
    CHECK_THROWS_AS(instance_from_json("{\"name\":\"x\"}"), input_error);
    CHECK_THROWS_AS(instance_from_json("{\"name\":\"x\",\"n\":3,\"w1\":[[0,1],[1,0]]}"),
                    input_error);
    // zero off-diagonal weight breaks the invariant
    CHECK_THROWS_AS(
        instance_from_json("{\"name\":\"x\",\"n\":3,"
                           "\"w1\":[[0,0,1],[1,0,1],[1,1,0]],\"w2\":null}"),
        input_error);
}

TEST_CASE("sweep CSV layout") {
    std::vector<SweepRow> rows;
    rows.push_back({"12", Rational(1, 10), std::nullopt, 13, 13, 0.0});
    rows.push_back({"pair", Rational(1, 2), Rational(2, 5), 13, 1, 100.0 * 12 / 13});
    const std::string csv = sweep_to_csv(rows);
    CHECK(csv ==
          "case,theta12,theta21,n_before,n_after,excluded_pct\n"
          "12,0.1,,13,13,0.0000\n"
          "pair,0.5,0.4,13,1,92.3077\n");
}

TEST_CASE("run reports serialize with final metrics") {
    RunReport report;
    report.config.seed = 4;
    report.instance_name = "demo";
    report.iterations = 2;
    report.initial_front_size = 3;
    report.front.entries.push_back({{5, 6}, Tour::from_order(std::vector<int>{0, 1, 2})});
    report.gd_trace = {2.0, 1.0};
    report.igd_trace = {3.0, 1.5};
    report.wall_ms = 12.5;

    const auto j = nlohmann::json::parse(report_to_json(report));
    CHECK(j["config"]["crossover"] == "dec");
    CHECK(j["config"]["seed"] == 4);
    CHECK(j["instance"] == "demo");
    CHECK(j["front"].size() == 1);
    CHECK(j["front"][0]["tour"] == "0-1-2");
    CHECK(j["final_gd"] == doctest::Approx(1.0));
    CHECK(j["final_igd"] == doctest::Approx(1.5));

    RunReport no_ref = report;
    no_ref.gd_trace.clear();
    no_ref.igd_trace.clear();
    const auto j2 = nlohmann::json::parse(report_to_json(no_ref));
    CHECK(j2["final_gd"].is_null());
}

TEST_CASE("atomic text file write and read back") {
    const auto dir = std::filesystem::temp_directory_path() / "biatsp_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "sample.txt";
    write_text_file(path, "hello\n");
    CHECK(read_text_file(path) == "hello\n");
    write_text_file(path, "replaced\n");
    CHECK(read_text_file(path) == "replaced\n");
    std::filesystem::remove_all(dir);
}

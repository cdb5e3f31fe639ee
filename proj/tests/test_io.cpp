#include <doctest.h>
#include <json.hpp>

#include "helpers.hpp"
#include "su2ca/io.hpp"

using namespace su2ca;

TEST_CASE("series files round-trip byte for byte") {
  testutil::Rng rng(61);
  const FourierSeries f = testutil::random_series(rng, 3);
  const std::string first = format_series(f);
  const std::string second = format_series(parse_series(first));
  CHECK(first == second);
  CHECK(first.back() == '\n');
}

TEST_CASE("series emission is canonical") {
  FourierSeries f;
  const RepLevel one = RepLevel::from_doubled(2);
  // Insert out of order; zero entries and all-zero blocks must vanish.
  f.set_coeff(one, HalfInt::from_doubled(2), HalfInt::from_doubled(0), {0.5, 0.0});
  f.set_coeff(one, HalfInt::from_doubled(-2), HalfInt::from_doubled(0), {0.0, -1.0});
  f.set_block(RepLevel::from_doubled(1), Eigen::MatrixXcd::Zero(2, 2));
  const std::string text = format_series(f);
  CHECK(text.find("\"two_l\": 1") == std::string::npos);
  const size_t low = text.find("two_m\": -2"), high = text.find("two_m\": 2");
  REQUIRE(low != std::string::npos);
  REQUIRE(high != std::string::npos);
  CHECK(low < high);

  const FourierSeries g = parse_series(text);
  CHECK(g.coeff(2, HalfInt::from_doubled(2), HalfInt::from_doubled(0)) == Complex{0.5, 0.0});
}

TEST_CASE("series schema violations are rejected") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_series(text), ParseError);
  };
  bad("not json");
  bad(R"({})");
  bad(R"({"terms": 3})");
  bad(R"({"terms": [], "extra": 1})");
  bad(R"({"terms": [{"two_l": 1}]})");
  bad(R"({"terms": [{"two_l": -1, "entries": []}]})");
  bad(R"({"terms": [{"two_l": 1, "entries": [{"two_m": 0, "two_n": 1, "re": 1, "im": 0}]}]})");
  bad(R"({"terms": [{"two_l": 1, "entries": [{"two_m": 3, "two_n": 1, "re": 1, "im": 0}]}]})");
  bad(R"({"terms": [{"two_l": 1, "entries": [{"two_m": 1, "two_n": 1, "re": 1}]}]})");
  bad(R"({"terms": [{"two_l": 1, "entries": [
        {"two_m": 1, "two_n": 1, "re": 1, "im": 0},
        {"two_m": 1, "two_n": 1, "re": 2, "im": 0}]}]})");
  bad(R"({"terms": [{"two_l": 1, "entries": []}, {"two_l": 1, "entries": []}]})");
  bad(R"({"terms": [], "terms": []})");
}

TEST_CASE("frame files parse both coranks and reject malformed input") {
  const std::string corank2 = R"({"corank": 2, "vectors": [
    [{"re": 0, "im": 1}, {"re": 1, "im": 0}, {"re": 0, "im": 0}],
    [{"re": 0, "im": 1}, {"re": -1, "im": 0}, {"re": 0, "im": 0}],
    [{"re": 0, "im": 0}, {"re": 0, "im": 0}, {"re": 0, "im": 1}]]})";
  const LoadedFrame lf = parse_frame(corank2);
  REQUIRE(std::holds_alternative<Corank2Frame>(lf));
  const auto& f2 = std::get<Corank2Frame>(lf);
  CHECK((f2.l - field_lower()).norm() < 1e-14);
  CHECK((f2.m1 - field_raise()).norm() < 1e-14);
  CHECK((f2.m2 - field_neutral()).norm() < 1e-14);

  CHECK_THROWS_AS(parse_frame(R"({"corank": 3, "vectors": []})"), ParseError);
  CHECK_THROWS_AS(parse_frame(R"({"corank": 1, "vectors": [[], [], []]})"), ParseError);
}

TEST_CASE("output format names") {
  CHECK(parse_format("table") == OutputFormat::Table);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("field display picks the shorter basis") {
  CHECK(field_display(field_lower()) == "∂-");
  CHECK(field_display(field_raise()) == "∂+");
  CHECK(field_display(field_neutral()) == "∂0");
  CHECK(field_display(frame_y1()) == "Y1");
  CHECK(field_display(frame_y3()) == "Y3");
  CHECK(field_display(AlgebraElement{0.0, 0.0, 0.0}) == "0");
  const std::string mixed = field_display(frame_y1() + frame_y3());
  CHECK(mixed.find("Y1") != std::string::npos);
  CHECK(mixed.find("Y3") != std::string::npos);
}

TEST_CASE("operator rendering matches the published shapes") {
  const auto p2 = std::get<Corank2Preset>(preset("corank2-paper"));
  CHECK(render_dprime(dprime_expression(p2.frame, p2.recomputed, 1, 0)) ==
        "d'(1,0)(u1, u2) = (-∂-u1 - 2u2, -∂-u2)");
  CHECK(render_dprime(dprime_expression(p2.frame, p2.recomputed, 0, 0)) ==
        "d'(0,0)(u) = ∂-u");

  const auto p1 = std::get<Corank1Preset>(preset("corank1-paper"));
  CHECK(render_dprime(dprime_expression(p1.frame, p1.printed, 1, 1)) ==
        "d'(1,1)(u1, u2) = ∂0u1 + 2u1 - ∂-u2");
  CHECK(render_constants(p1.printed) == "a = (1, 0); b1 = (0, -2, 0); b2 = (0, 0, -1)");
}

TEST_CASE("report renderings carry the same numbers in every format") {
  const auto p1 = std::get<Corank1Preset>(preset("corank1-paper"));
  const CohomologyReport rep = cohomology_report(p1.frame, p1.recomputed, 2);
  const std::vector<std::string> banner = {"note: banner line"};

  const std::string table = render_report(rep, OutputFormat::Table, banner, "recomputed");
  CHECK(table.find("note: banner line") != std::string::npos);
  CHECK(table.find("(0,1) 1") != std::string::npos);

  const std::string csv = render_report(rep, OutputFormat::Csv, banner, "recomputed");
  CHECK(csv.find("note:") == std::string::npos);
  CHECK(csv.substr(0, 40).find("two_l,bidegree,ker,ran,quotient,gap") == 0);
  CHECK(csv.find("\r\n") != std::string::npos);
  CHECK(csv.find("\"0,1\"") != std::string::npos);

  const std::string json_text = render_report(rep, OutputFormat::Json, banner, "recomputed");
  const nlohmann::json parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["corank"] == 1);
  CHECK(parsed["constants"] == "recomputed");
  CHECK(parsed["banner"][0] == "note: banner line");
  CHECK(parsed["totals"]["0,1"] == 1);
  CHECK(parsed["levels"].size() == 3);
  CHECK(parsed["levels"][0]["stages"][1]["quotient"] == 1);
}

TEST_CASE("certificate rendering") {
  const ClosedRangeCertificate cert = closed_range_certificate(field_lower(), {1, 3}, 4);
  const std::string text = render_certificate(cert, field_display(field_lower()));
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("s = 1/3") != std::string::npos);
  CHECK(text.find("0.829826533") != std::string::npos);

  const std::string warn =
      render_certificate(closed_range_certificate(field_lower(), {2, 1}, 6), "x");
  CHECK(warn.find("warning") != std::string::npos);
}

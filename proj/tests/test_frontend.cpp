#include "doctest.h"
#include "hilbloc/errors.hpp"
#include "hilbloc/geometry_spec.hpp"
#include "hilbloc/pipelines.hpp"
#include "hilbloc/report.hpp"

using namespace hilbloc;

namespace {

BigRational q(long p, long d = 1) { return make_rational(p, d); }

}  // namespace

TEST_CASE("geometry spec by rays matches the named plane") {
  Geometry g = parse_geometry_spec(R"({"rays": [[1,0],[0,1],[-1,-1]], "bundle": [1,0,0], "relative": 2})");
  Geometry h = named_geometry("p2", 0, "1", 2);
  SurfaceInvariants a = intersection_numbers(g.surface, g.bundle, g.relative);
  SurfaceInvariants b = intersection_numbers(h.surface, h.bundle, h.relative);
  CHECK(a.M2 == 1);
  CHECK(a.MK == -3);
  CHECK(a.C2 == 1);
  CHECK(a.M2 == b.M2);
  CHECK(a.MK == b.MK);
  CHECK(a.MC == b.MC);
  CHECK(series(AssignmentKind::T, g.surface, g.bundle, 2) == series(AssignmentKind::T, h.surface, h.bundle, 2));
}

TEST_CASE("named geometry fields") {
  Geometry f = parse_geometry_spec(R"({"surface": "hirzebruch", "a": 2, "x": 1, "y": 3})");
  SurfaceInvariants inv = intersection_numbers(f.surface, f.bundle);
  // (C0 + 3f)^2 = -2 + 6
  CHECK(inv.M2 == 4);
  CHECK(inv.K2 == 8);
  CHECK(inv.e == 4);

  Geometry t = parse_geometry_spec(R"({"surface": "tot", "a": 1, "d": 2, "fiber_weight": 0})");
  CHECK_FALSE(t.surface.complete());
  SurfaceInvariants ti = intersection_numbers(t.surface, t.bundle, t.relative);
  CHECK(ti.C2 == 1);
  CHECK(ti.MC == 2);

  Geometry p = parse_geometry_spec(R"({"surface": "p1xp1", "bundle": [1,2,0,0]})");
  CHECK(intersection_numbers(p.surface, p.bundle).M2 == 4);
}

TEST_CASE("malformed geometry specs are rejected") {
  CHECK_THROWS_AS(parse_geometry_spec(R"({"rays": [[1,0],[0,1],[1,1]], "bundle": [0,0,0]})"), InvalidGeometry);
  CHECK_THROWS_AS(parse_geometry_spec(R"({"rays": [[1,0],[0,1],[-1,-1]], "bundle": [0,0]})"), InvalidGeometry);
  CHECK_THROWS_AS(parse_geometry_spec(R"({"surface": "k3"})"), InvalidGeometry);
  CHECK_THROWS_AS(parse_geometry_spec(R"({"rays": [[1,0],[0,1],[-1,-1]], "bundle": [0,0,0], "relative": 5})"),
                  InvalidGeometry);
  CHECK_THROWS(parse_geometry_spec("not json"));
  CHECK_THROWS(load_geometry_spec("/nonexistent/geometry.json"));
}

TEST_CASE("series JSON round-trips exact fractions") {
  std::vector<SeriesRow> rows{{"a", QSeries(3, {q(1), q(-7, 3), q(0), q(123456789, 1000)}), "note"},
                              {"b, quoted", xi_pow(q(5, 2), 4), ""}};
  auto back = parse_series_json(format_series(rows, OutputFormat::json));
  REQUIRE(back.size() == 2);
  CHECK(back[0].label == "a");
  CHECK(back[0].series == rows[0].series);
  CHECK(back[0].note == "note");
  CHECK(back[1].series == rows[1].series);
  CHECK(format_series(rows, OutputFormat::json).find("\"-7/3\"") != std::string::npos);
}

TEST_CASE("plain and csv series output") {
  std::vector<SeriesRow> rows{{"x,y", QSeries(2, {q(1), q(1, 2), q(-3)}), ""}};
  CHECK(format_series(rows, OutputFormat::plain) == "x,y: 1, 1/2, -3\n");
  CHECK(format_series(rows, OutputFormat::csv) == "label,n,coefficient\n\"x,y\",0,1\n\"x,y\",1,1/2\n\"x,y\",2,-3\n");
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("relative pipeline on P1 x P1 relative to a fiber") {
  Geometry g = named_geometry("p1xp1", 0, "1,1", 1);
  RelativeRun r = relative_pipeline(AssignmentKind::T, g, 3);
  CHECK(r.inv.C2 == 0);
  CHECK(r.z_rel == r.closed_form);
  CHECK(r.z_abs == r.z_rel * r.z_normal);
  CHECK_THROWS_AS(relative_pipeline(AssignmentKind::T, named_geometry("p2", 0, "1"), 2), InvalidGeometry);
}

TEST_CASE("rubber pipeline ratio") {
  RubberRun r = rubber_pipeline(1, 2, 1, 3);
  CHECK(r.ratio == r.closed_form);
  CHECK(r.ratio == xi_pow(q(5), 3));
  CHECK(rubber_pipeline(0, 0, 0, 2).ratio == QSeries(2));
}

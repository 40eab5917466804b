#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "toricdef/fan_io.hpp"
#include "toricdef/reports.hpp"
#include "toricdef/svg.hpp"
#include "toricdef/tangent.hpp"

using namespace toricdef;

namespace {

std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

const char* const kFixtures[] = {"p2", "p1xp1", "f1", "f2", "f3", "f4", "f5", "f1_blown_up_twice", "hexagon",
                                 "threefold_h1_two", "weak_fano_threefold"};

}  // namespace

TEST_CASE("fan files round-trip byte for byte") {
  for (const char* name : kFixtures) {
    const std::string text = read_file(fixture_path(name));
    const FanFile file = parse_fan_json(text);
    CHECK(dump_fan_json(file) == text);
    CHECK(file.validate().ok());
  }
  const auto tmp = std::filesystem::temp_directory_path() / "toricdef_io_roundtrip.json";
  const FanFile blown = load_fan_file(fixture_path("f1_blown_up_twice"));
  save_fan_file(tmp.string(), blown);
  CHECK(read_file(tmp.string()) == read_file(fixture_path("f1_blown_up_twice")));
  std::filesystem::remove(tmp);

  const FanFile generated = from_fan(hirzebruch(3), "F3");
  CHECK(parse_fan_json(dump_fan_json(generated)).rays == generated.rays);
}

TEST_CASE("malformed fan files") {
  CHECK_THROWS_AS(load_fan_file(fixture_path("missing_dim")), ParseError);
  CHECK_THROWS_AS(parse_fan_json("{\"dim\": 2, \"rays\": [[1, 0], [0, 1]"), ParseError);
  CHECK_THROWS_AS(parse_fan_json("{\"dim\": 2, \"rays\": [[1, 0, 3], [0, 1]]}"), ParseError);
  CHECK_THROWS_AS(parse_fan_json("{\"dim\": 3, \"rays\": [[1, 0, 0]]}"), ParseError);
  CHECK_THROWS_AS(parse_fan_json("{\"dim\": 2, \"rays\": [[1, 0]], \"cones\": [[0, 5]]}"), ParseError);
  CHECK_THROWS_AS(parse_fan_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(load_fan_file("/nonexistent/fan.json"), IoError);
  CHECK_FALSE(load_fan_file(fixture_path("not_complete")).validate().ok());
}

TEST_CASE("T^1 reports round-trip") {
  for (const char* name : {"f1_blown_up_twice", "f4", "hexagon"}) {
    const T1Report rep = t1_total(*load_fan_file(fixture_path(name)).validate().fan);
    const Json j = to_json(rep);
    const T1Report back = t1_report_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.total == rep.total);
  }
  const T1Report box = t1_total(*load_fan_file(fixture_path("threefold_h1_two")).validate().fan, 3);
  CHECK(to_json(t1_report_from_json(to_json(box))) == to_json(box));
  CHECK(to_json(box)["box_radius"] == 3);
}

TEST_CASE("decompositions round-trip") {
  const SurfaceFan blown = order_surface(*load_fan_file(fixture_path("f1_blown_up_twice")).validate().fan);
  const Slice s = compute_slice(blown, weight({0, 1}));
  std::vector<Decomposition> all = enumerate_decompositions(s);
  all.push_back(realize(s, {1, -1, -1, 1, 1}, 1));
  all.push_back(realize(s, pi_tuple(s, 3)));
  for (const Decomposition& d : all) {
    const Json j = to_json(s, d);
    const Decomposition back = decomposition_from_json(s, Json::parse(j.dump()));
    CHECK(back.a == d.a);
    CHECK(back.lambda == d.lambda);
    CHECK(back.tilde0 == d.tilde0);
    CHECK(back.tildet == d.tildet);
    CHECK(to_json(s, back) == j);
  }
  Json tampered = to_json(s, all.front());
  tampered["lambda"][1] = 7;
  CHECK_THROWS(decomposition_from_json(s, tampered));

  for (const Interval& i : s.segments) CHECK(interval_from_json(to_json(i)) == i);
  CHECK(to_json(s.segments.front())["hi"].is_null());
}

TEST_CASE("report envelope") {
  const std::string bytes = read_file(fixture_path("f1_blown_up_twice"));
  CHECK(input_digest(bytes) == input_digest(bytes));
  CHECK(input_digest(bytes) != input_digest(bytes + " "));
  CHECK(input_digest("").rfind("fnv1a64:", 0) == 0);
  CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");
  const Json rep = make_report("t1", {"f1_blown_up_twice.json", "--all"}, input_digest(bytes), Json{{"total", 3}}, {"note"});
  std::vector<std::string> keys;
  for (const auto& item : rep.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "command", "args", "input_digest", "result", "warnings"});
  CHECK(rep["version"] == kVersion);
}

TEST_CASE("validation report json") {
  const Json ok = to_json(load_fan_file(fixture_path("f1_blown_up_twice")).validate());
  CHECK(ok["valid"] == true);
  CHECK(ok["fano_status"] == "NEITHER");
  const Json bad = to_json(load_fan_file(fixture_path("not_complete")).validate());
  CHECK(bad["valid"] == false);
  CHECK(bad.dump().find("NOT_COMPLETE") != std::string::npos);
}

TEST_CASE("svg output") {
  const Fan blown = *load_fan_file(fixture_path("f1_blown_up_twice")).validate().fan;
  const std::string plain = fan_svg(blown);
  CHECK(plain == fan_svg(blown));
  CHECK(plain.find("<svg xmlns") != std::string::npos);
  CHECK(plain.find("stroke-dasharray") == std::string::npos);
  const std::string with_degree = fan_svg(blown, weight({0, -1}));
  CHECK(with_degree.find("stroke-dasharray") != std::string::npos);
  CHECK(with_degree == fan_svg(blown, weight({0, -1})));
  CHECK_THROWS_AS(fan_svg(*load_fan_file(fixture_path("threefold_h1_two")).validate().fan), Error);

  const Slice s = compute_slice(order_surface(blown), weight({0, 1}));
  const std::string slice = slice_svg(s, realize(s, pi_tuple(s, 3)));
  CHECK(slice == slice_svg(s, realize(s, pi_tuple(s, 3))));
  CHECK(slice.find("1/2") != std::string::npos);
  CHECK(slice.find("</svg>") != std::string::npos);
}

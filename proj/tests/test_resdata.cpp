#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "specjump/error.hpp"
#include "specjump/parse.hpp"
#include "specjump/resolution_json.hpp"
#include "specjump/resolver.hpp"
#include "support.hpp"

using namespace specjump;
using specjump::testing::data_path;

namespace {

bool flags(const std::vector<Violation>& v, const std::string& identity, const std::string& id) {
  return std::any_of(v.begin(), v.end(),
                     [&](const Violation& x) { return x.identity == identity && x.component == id; });
}

std::optional<ErrorKind> kind_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("corpus files load and validate") {
  for (const char* name : {"cusp.json", "node.json", "three_lines.json"}) {
    CAPTURE(name);
    const ResolutionData data = load_resolution(data_path(name));
    CHECK(validate(data).empty());
    CHECK_FALSE(data.has_charts());
  }
}

TEST_CASE("resolver output matches the hand-built files") {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"x^2 + y^3", "cusp.json"}, {"x*y", "node.json"}, {"x^3 + y^3", "three_lines.json"}};
  for (const auto& [germ, file] : pairs) {
    CAPTURE(germ);
    const ResolutionData computed = resolve_germ(parse_poly(germ));
    const ResolutionData hand = load_resolution(data_path(file));
    CHECK(computed.components() == hand.components());
    CHECK(computed.intersections() == hand.intersections());
  }
}

TEST_CASE("mutations are caught by validate") {
  const ResolutionData cusp = load_resolution(data_path("cusp.json"));

  ResolutionData wrong_m = cusp;
  wrong_m.component("E3").m = 5;
  const auto vm = validate(wrong_m);
  CHECK(flags(vm, "principality", "E1"));
  CHECK(flags(vm, "principality", "E2"));
  CHECK(flags(vm, "principality", "E3"));

  ResolutionData wrong_k = cusp;
  wrong_k.component("E2").k = 3;
  const auto vk = validate(wrong_k);
  CHECK(flags(vk, "adjunction", "E2"));
  CHECK(flags(vk, "adjunction", "E3"));
  CHECK_FALSE(flags(vk, "principality", "E2"));

  ResolutionData wrong_self = cusp;
  wrong_self.component("E1").self_intersection = -2;
  CHECK(flags(validate(wrong_self), "principality", "E1"));

  ResolutionData strict_k = cusp;
  strict_k.component("S1").k = 1;
  CHECK(flags(validate(strict_k), "structure", "S1"));

  ResolutionData double_meet = cusp;
  double_meet.set_intersection("E1", "E3", 2);
  CHECK(flags(validate(double_meet), "structure", "E1"));
}

TEST_CASE("every single-step perturbation of a corpus resolution is caught") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData data = resolve_germ(parse_poly(germ));
    for (const auto& c : data.components()) {
      for (int delta : {-1, 1}) {
        ResolutionData m = data;
        m.component(c.id).m += delta;
        CHECK_FALSE(validate(m).empty());
        if (c.exceptional()) {
          ResolutionData k = data;
          k.component(c.id).k += delta;
          CHECK_FALSE(validate(k).empty());
        }
      }
    }
  }
}

TEST_CASE("extra_blowup on the cusp") {
  const ResolutionData cusp = load_resolution(data_path("cusp.json"));
  const ResolutionData blown = extra_blowup(cusp, "E3");
  REQUIRE(blown.contains("E4"));
  const Component& e4 = blown.component("E4");
  CHECK(e4.m == 6);
  CHECK(e4.k == 5);
  CHECK(e4.self_intersection == -1);
  CHECK(blown.component("E3").self_intersection == -2);
  CHECK(blown.intersection("E3", "E4") == 1);
  CHECK(validate(blown).empty());

  const ResolutionData node = extra_blowup(load_resolution(data_path("node.json")), "E1");
  CHECK(node.component("E2").m == 2);
  CHECK(node.component("E2").k == 2);
  CHECK(validate(node).empty());

  CHECK(kind_of([&] { extra_blowup(cusp, "S1"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { extra_blowup(cusp, "E9"); }) == ErrorKind::UnknownComponent);
}

TEST_CASE("extra_blowup preserves validity everywhere, repeatedly") {
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    ResolutionData data = resolve_germ(parse_poly(germ));
    for (int round = 0; round < 3; ++round) {
      std::vector<std::string> exceptional;
      for (const auto& c : data.components()) {
        if (c.exceptional()) exceptional.push_back(c.id);
      }
      const std::string& id = exceptional[static_cast<std::size_t>(
          testing::uniform(0, static_cast<long>(exceptional.size()) - 1))];
      data = extra_blowup(data, id);
      CHECK(validate(data).empty());
      CHECK(data.has_charts());
    }
  }
}

TEST_CASE("JSON round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "specjump_resdata_test";
  std::filesystem::create_directories(dir);
  for (const auto& germ : testing::corpus()) {
    CAPTURE(germ);
    const ResolutionData data = resolve_germ(parse_poly(germ));
    const std::string path = (dir / "roundtrip.json").string();
    store_resolution(data, path);
    CHECK(load_resolution(path) == data);
    CHECK(parse_resolution(resolution_to_json(data)) == data);
  }
  const ResolutionData cusp = load_resolution(data_path("cusp.json"));
  CHECK(parse_resolution(resolution_to_json(cusp)) == cusp);
  std::filesystem::remove_all(dir);
}

TEST_CASE("schema and parse errors") {
  CHECK(kind_of([] { load_resolution(data_path("bad_missing_self.json")); }) == ErrorKind::Schema);
  CHECK(kind_of([] { parse_resolution(R"({"components": [], "intersections": [], "extra": 1})"); }) ==
        ErrorKind::Schema);
  CHECK(kind_of([] {
          parse_resolution(R"({"components": [{"id": "S1", "kind": "strict", "m": 1, "k": 0,
                               "over_origin": false, "colour": "red"}], "intersections": []})");
        }) == ErrorKind::Schema);
  CHECK(kind_of([] {
          parse_resolution(R"({"components": [{"id": "E1", "kind": "curve", "m": 1, "k": 0,
                               "over_origin": true}], "intersections": []})");
        }) == ErrorKind::Schema);
  CHECK(kind_of([] {
          parse_resolution(R"({"components": [{"id": "E1", "kind": "exceptional", "m": 1, "k": 1,
                               "over_origin": true, "self_intersection": -1}],
                               "intersections": [{"a": "E1", "b": "Z", "points": 1}]})");
        }) == ErrorKind::UnknownComponent);
  try {
    parse_resolution("{\"components\": [,]}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("line 1, column 17") != std::string::npos);
  }
}

TEST_CASE("invalid data is rejected unless forced") {
  const std::string text = R"({"components": [
      {"id": "E1", "kind": "exceptional", "m": 3, "k": 1, "over_origin": true, "self_intersection": -1},
      {"id": "S1", "kind": "strict", "m": 1, "k": 0, "over_origin": false}],
    "intersections": [{"a": "E1", "b": "S1", "points": 1}]})";
  try {
    parse_resolution(text);
    FAIL("expected a validation failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ValidationFailed);
    CHECK(std::string(e.what()).find("principality at E1") != std::string::npos);
  }
  LoadOptions force;
  force.force = true;
  CHECK(parse_resolution(text, force).component("E1").m == 3);
}

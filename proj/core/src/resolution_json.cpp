#include "specjump/resolution_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "specjump/error.hpp"
#include "specjump/parse.hpp"

namespace specjump {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Schema, where + ": " + what);
}

void only_fields(const Json& object, const std::string& where,
                 std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) schema_error(where, "expected an object");
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) schema_error(where, "unknown field '" + key + "'");
  }
}

const Json& required(const Json& object, const std::string& where, const char* field) {
  auto it = object.find(field);
  if (it == object.end()) schema_error(where, std::string("missing field '") + field + "'");
  return *it;
}

std::int64_t integer(const Json& value, const std::string& where, const char* field) {
  if (!value.is_number_integer()) schema_error(where, std::string("'") + field + "' must be an integer");
  return value.get<std::int64_t>();
}

std::string text(const Json& value, const std::string& where, const char* field) {
  if (!value.is_string()) schema_error(where, std::string("'") + field + "' must be a string");
  return value.get<std::string>();
}

Component read_component(const Json& j, std::size_t index) {
  const std::string where = "components[" + std::to_string(index) + "]";
  only_fields(j, where, {"id", "kind", "m", "k", "over_origin", "self_intersection", "cluster_degree"});
  Component c;
  c.id = text(required(j, where, "id"), where, "id");
  const std::string kind = text(required(j, where, "kind"), where, "kind");
  if (kind == "exceptional") {
    c.kind = ComponentKind::Exceptional;
  } else if (kind == "strict") {
    c.kind = ComponentKind::Strict;
  } else {
    schema_error(where, "kind must be \"exceptional\" or \"strict\"");
  }
  c.m = integer(required(j, where, "m"), where, "m");
  c.k = integer(required(j, where, "k"), where, "k");
  const Json& over = required(j, where, "over_origin");
  if (!over.is_boolean()) schema_error(where, "'over_origin' must be a boolean");
  c.over_origin = over.get<bool>();
  if (auto it = j.find("self_intersection"); it != j.end()) {
    if (!c.exceptional()) schema_error(where, "self_intersection given for a strict component");
    c.self_intersection = integer(*it, where, "self_intersection");
  } else if (c.exceptional()) {
    schema_error(where, "exceptional component '" + c.id + "' lacks self_intersection");
  }
  if (auto it = j.find("cluster_degree"); it != j.end()) {
    c.cluster_degree = integer(*it, where, "cluster_degree");
  }
  return c;
}

ResolutionData from_json(const Json& root) {
  only_fields(root, "resolution", {"components", "intersections", "germ", "charts"});
  const Json& components = required(root, "resolution", "components");
  if (!components.is_array()) schema_error("resolution", "'components' must be an array");
  ResolutionData data;
  for (std::size_t i = 0; i < components.size(); ++i) data.add_component(read_component(components[i], i));

  const Json& intersections = required(root, "resolution", "intersections");
  if (!intersections.is_array()) schema_error("resolution", "'intersections' must be an array");
  for (std::size_t i = 0; i < intersections.size(); ++i) {
    const std::string where = "intersections[" + std::to_string(i) + "]";
    const Json& j = intersections[i];
    only_fields(j, where, {"a", "b", "points"});
    const std::string a = text(required(j, where, "a"), where, "a");
    const std::string b = text(required(j, where, "b"), where, "b");
    if (a != b && data.contains(a) && data.contains(b) && data.intersection(a, b) != 0) {
      schema_error(where, "pair listed twice");
    }
    data.set_intersection(a, b, integer(required(j, where, "points"), where, "points"));
  }

  if (auto it = root.find("germ"); it != root.end()) {
    data.set_germ(parse_poly(text(*it, "resolution", "germ")));
  }
  if (auto it = root.find("charts"); it != root.end()) {
    if (!it->is_array()) schema_error("resolution", "'charts' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "charts[" + std::to_string(i) + "]";
      const Json& j = (*it)[i];
      only_fields(j, where, {"id", "x", "y"});
      const std::string id = text(required(j, where, "id"), where, "id");
      ChartMap chart{parse_poly(text(required(j, where, "x"), where, "x"), kUV),
                     parse_poly(text(required(j, where, "y"), where, "y"), kUV)};
      data.set_chart(id, std::move(chart));
    }
  }
  return data;
}

Json to_json(const ResolutionData& data) {
  Json root;
  Json components = Json::array();
  for (const auto& c : data.components()) {
    Json j;
    j["id"] = c.id;
    j["kind"] = std::string(to_string(c.kind));
    j["m"] = c.m;
    j["k"] = c.k;
    j["over_origin"] = c.over_origin;
    if (c.self_intersection) j["self_intersection"] = *c.self_intersection;
    j["cluster_degree"] = c.cluster_degree;
    components.push_back(std::move(j));
  }
  root["components"] = std::move(components);
  Json intersections = Json::array();
  for (const auto& [pair, points] : data.intersections()) {
    intersections.push_back(Json{{"a", pair.first}, {"b", pair.second}, {"points", points}});
  }
  root["intersections"] = std::move(intersections);
  if (data.germ()) root["germ"] = data.germ()->str();
  if (!data.charts().empty()) {
    Json charts = Json::array();
    for (const auto& [id, chart] : data.charts()) {
      charts.push_back(Json{{"id", id}, {"x", chart.x.str(kUV)}, {"y", chart.y.str(kUV)}});
    }
    root["charts"] = std::move(charts);
  }
  return root;
}

}  // namespace

ResolutionData parse_resolution(std::string_view text, const LoadOptions& options) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Drop the library's "[json.exception...] " tag; its text carries line and column.
    std::string detail = e.what();
    if (auto tag = detail.find("] "); tag != std::string::npos) detail.erase(0, tag + 2);
    throw Error(ErrorKind::Parse, "invalid JSON, " + detail);
  }
  ResolutionData data = from_json(root);
  if (!options.force) {
    const auto violations = validate(data);
    if (!violations.empty()) {
      std::ostringstream msg;
      msg << "resolution data fails validation:";
      for (const auto& v : violations) {
        msg << "\n  " << v.identity;
        if (!v.component.empty()) msg << " at " << v.component;
        msg << ": " << v.detail;
      }
      throw Error(ErrorKind::ValidationFailed, msg.str());
    }
  }
  return data;
}

ResolutionData load_resolution(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_resolution(buffer.str(), options);
}

std::string resolution_to_json(const ResolutionData& data) { return to_json(data).dump(2) + "\n"; }

void store_resolution(const ResolutionData& data, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << resolution_to_json(data);
  if (!out) throw Error(ErrorKind::InvalidArgument, "write to '" + path + "' failed");
}

}  // namespace specjump

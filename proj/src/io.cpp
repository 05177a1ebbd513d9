#include "digifix/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "digifix/error.hpp"

namespace digifix::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InvalidInput(where + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

Vertex index(const json& j, const std::string& where) {
  const auto v = integer(j, where);
  if (v < 0 || v > static_cast<long long>(std::numeric_limits<Vertex>::max())) fail(where, "index out of range");
  return static_cast<Vertex>(v);
}

void expect_format(const json& j, const std::string& where, const char* format) {
  const auto& f = field(j, where, "format");
  if (!f.is_string() || f.get<std::string>() != format)
    fail(where + ".format", std::string("expected \"") + format + "\"");
}

json adjacency_to_json(const AdjacencySpec& spec) {
  if (const auto* cu = std::get_if<CuAdjacency>(&spec)) return {{"kind", "cu"}, {"u", cu->u}};
  if (const auto* ex = std::get_if<ExplicitAdjacency>(&spec)) {
    json edges = json::array();
    for (auto [a, b] : ex->edges) edges.push_back({a, b});
    return {{"kind", "explicit"}, {"edges", edges}};
  }
  const auto& np = std::get<NpuAdjacency>(spec);
  json factors = json::array();
  for (const auto& f : np.factors) factors.push_back(image_to_json(f));
  return {{"kind", "npu"}, {"u", np.u}, {"factors", factors}};
}

AdjacencySpec adjacency_from_json(const json& j, const std::string& where) {
  const auto& kind = field(j, where, "kind");
  if (!kind.is_string()) fail(where + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "cu") return CuAdjacency{static_cast<int>(integer(field(j, where, "u"), where + ".u"))};
  if (k == "explicit") {
    const auto& edges = field(j, where, "edges");
    if (!edges.is_array()) fail(where + ".edges", "expected an array");
    ExplicitAdjacency ex;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto at = where + ".edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != 2) fail(at, "expected a pair of indices");
      ex.edges.emplace_back(index(edges[i][0], at), index(edges[i][1], at));
    }
    return ex;
  }
  if (k == "npu") {
    NpuAdjacency np;
    np.u = static_cast<int>(integer(field(j, where, "u"), where + ".u"));
    const auto& factors = field(j, where, "factors");
    if (!factors.is_array()) fail(where + ".factors", "expected an array");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      try {
        np.factors.push_back(image_from_json(factors[i]));
      } catch (const InvalidInput& e) {
        fail(where + ".factors[" + std::to_string(i) + "]", e.what());
      }
    }
    return np;
  }
  fail(where + ".kind", "unknown adjacency kind '" + k + "'");
}

}  // namespace

json image_to_json(const DigitalImage& x) {
  json j = {{"format", kImageFormat},
            {"name", x.name()},
            {"size", x.size()},
            {"dimension", x.dimension()},
            {"adjacency", adjacency_to_json(x.spec())}};
  if (x.has_points()) j["points"] = x.points();
  return j;
}

DigitalImage image_from_json(const json& j) {
  const std::string where = "image";
  expect_format(j, where, kImageFormat);
  const auto& name = field(j, where, "name");
  if (!name.is_string()) fail(where + ".name", "expected a string");
  const auto dimension = integer(field(j, where, "dimension"), where + ".dimension");
  auto spec = adjacency_from_json(field(j, where, "adjacency"), where + ".adjacency");
  std::optional<long long> size;
  if (j.contains("size")) size = integer(j["size"], where + ".size");

  if (j.contains("points")) {
    const auto& pts = j["points"];
    if (!pts.is_array()) fail(where + ".points", "expected an array");
    std::vector<Point> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto at = where + ".points[" + std::to_string(i) + "]";
      if (!pts[i].is_array()) fail(at, "expected an array of integers");
      Point p;
      for (const auto& c : pts[i]) p.push_back(static_cast<int>(integer(c, at)));
      if (static_cast<long long>(p.size()) != dimension)
        fail(at, "has " + std::to_string(p.size()) + " coordinates, dimension is " + std::to_string(dimension));
      points.push_back(std::move(p));
    }
    if (size && *size != static_cast<long long>(points.size()))
      fail(where + ".size", "does not match the number of points");
    return build_image(name.get<std::string>(), std::move(points), std::move(spec));
  }
  if (dimension != 0) fail(where + ".points", "missing for an image of dimension " + std::to_string(dimension));
  if (std::holds_alternative<CuAdjacency>(spec)) fail(where + ".points", "required by cu adjacency");
  if (!size) fail(where, "missing field 'size'");
  if (*size < 0) fail(where + ".size", "must be non-negative");
  return build_image(name.get<std::string>(), static_cast<std::size_t>(*size), std::move(spec));
}

json map_to_json(const SelfMap& f) {
  return {{"format", kMapFormat}, {"targets", std::vector<Vertex>(f.targets().begin(), f.targets().end())}};
}

SelfMap map_from_json(const json& j) {
  const std::string where = "map";
  expect_format(j, where, kMapFormat);
  const auto& targets = field(j, where, "targets");
  if (!targets.is_array()) fail(where + ".targets", "expected an array");
  std::vector<Vertex> t;
  for (std::size_t i = 0; i < targets.size(); ++i) t.push_back(index(targets[i], where + ".targets[" + std::to_string(i) + "]"));
  return SelfMap(std::move(t));
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InvalidInput("error writing '" + path.string() + "'");
}

template <class T, class Parse>
T load_with_context(const std::filesystem::path& path, Parse parse) {
  const auto j = read_json_file(path);
  try {
    return parse(j);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

}  // namespace

DigitalImage load_image(const std::filesystem::path& path) {
  return load_with_context<DigitalImage>(path, image_from_json);
}

void save_image(const std::filesystem::path& path, const DigitalImage& x) {
  write_file(path, image_to_json(x).dump(1) + "\n");
}

SelfMap load_map(const std::filesystem::path& path) { return load_with_context<SelfMap>(path, map_from_json); }

void save_map(const std::filesystem::path& path, const SelfMap& f) { write_file(path, canonical(map_to_json(f)) + "\n"); }

std::string canonical(const json& j) { return j.dump(); }

}  // namespace digifix::io

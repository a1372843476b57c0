#include "isobound/domain_json.hpp"

#include <fstream>
#include <sstream>

#include "isobound/errors.hpp"
#include "json.hpp"

namespace isobound {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("domain spec field \"" + field + "\": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + key, "missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> optional_numbers(const json& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) return {};
  return numbers(*it, "params." + key);
}

void check_length(const std::vector<double>& v, int dim, const std::string& path) {
  if (v.size() != static_cast<std::size_t>(dim))
    fail(path, "expected " + std::to_string(dim) + " entries, got " + std::to_string(v.size()));
}

// Flattens a nested 0/1 array of depth `dim`, checking it is rectangular.
void flatten_mask(const json& v, int depth, int dim, std::vector<std::size_t>& shape,
                  std::vector<std::uint8_t>& cells, const std::string& path) {
  if (depth == dim) {
    if (!v.is_number_integer() || (v.get<long>() != 0 && v.get<long>() != 1))
      fail(path, "expected 0 or 1");
    cells.push_back(static_cast<std::uint8_t>(v.get<long>()));
    return;
  }
  if (!v.is_array() || v.empty()) fail(path, "expected a non-empty array");
  const auto d = static_cast<std::size_t>(depth);
  if (shape.size() <= d)
    shape.push_back(v.size());
  else if (shape[d] != v.size())
    fail(path, "mask is not rectangular");
  for (std::size_t i = 0; i < v.size(); ++i)
    flatten_mask(v[i], depth + 1, dim, shape, cells, path + "[" + std::to_string(i) + "]");
}

json mask_to_json(const RasterMaskShape& m, std::size_t axis, std::size_t& cursor) {
  json arr = json::array();
  for (std::size_t i = 0; i < m.shape[axis]; ++i) {
    if (axis + 1 == m.shape.size())
      arr.push_back(static_cast<int>(m.cells[cursor++]));
    else
      arr.push_back(mask_to_json(m, axis + 1, cursor));
  }
  return arr;
}

}  // namespace

Domain parse_domain_spec(std::string_view json_text) {
  json spec;
  try {
    spec = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("domain spec is not valid JSON: ") + e.what());
  }
  if (!spec.is_object()) throw InputError("domain spec must be a JSON object");

  const json& kind_node = member(spec, "kind", "");
  if (!kind_node.is_string()) fail("kind", "expected a string");
  const std::string kind_name = kind_node.get<std::string>();
  DomainKind kind;
  try {
    kind = parse_domain_kind(kind_name);
  } catch (const InputError&) {
    fail("kind", "unknown kind \"" + kind_name + "\"");
  }

  const json& dim_node = member(spec, "dim", "");
  if (!dim_node.is_number_integer()) fail("dim", "expected an integer");
  const int dim = dim_node.get<int>();
  if (dim < 1 || dim > 3) fail("dim", "must be 1, 2 or 3");

  const json& params = member(spec, "params", "");
  if (!params.is_object()) fail("params", "expected an object");

  try {
    switch (kind) {
      case DomainKind::interval: {
        if (dim != 1) fail("dim", "an interval has dim 1");
        return Domain::interval(number(member(params, "a", "params."), "params.a"),
                                number(member(params, "b", "params."), "params.b"));
      }
      case DomainKind::box: {
        auto lower = numbers(member(params, "lower", "params."), "params.lower");
        auto upper = numbers(member(params, "upper", "params."), "params.upper");
        check_length(lower, dim, "params.lower");
        check_length(upper, dim, "params.upper");
        return Domain::box(std::move(lower), std::move(upper));
      }
      case DomainKind::ball: {
        const double r = number(member(params, "radius", "params."), "params.radius");
        auto center = optional_numbers(params, "center");
        if (!center.empty()) check_length(center, dim, "params.center");
        return Domain::ball(dim, r, std::move(center));
      }
      case DomainKind::ellipse: {
        auto axes = numbers(member(params, "half_axes", "params."), "params.half_axes");
        check_length(axes, dim, "params.half_axes");
        auto center = optional_numbers(params, "center");
        if (!center.empty()) check_length(center, dim, "params.center");
        return Domain::ellipse(std::move(axes), std::move(center));
      }
      case DomainKind::polygon: {
        if (dim != 2) fail("dim", "a polygon has dim 2");
        const json& vs = member(params, "vertices", "params.");
        if (!vs.is_array()) fail("params.vertices", "expected an array of [x, y] pairs");
        std::vector<Vertex2> vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
          const std::string path = "params.vertices[" + std::to_string(i) + "]";
          auto xy = numbers(vs[i], path);
          check_length(xy, 2, path);
          vertices.push_back({xy[0], xy[1]});
        }
        return Domain::polygon(std::move(vertices));
      }
      case DomainKind::raster_mask: {
        RasterMaskShape m;
        m.cell_size = number(member(params, "cell_size", "params."), "params.cell_size");
        m.origin = optional_numbers(params, "origin");
        if (!m.origin.empty()) check_length(m.origin, dim, "params.origin");
        flatten_mask(member(params, "mask", "params."), 0, dim, m.shape, m.cells,
                     "params.mask");
        return Domain::raster_mask(std::move(m));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("domain spec: ") + e.what());
  }
  throw InputError("unhandled domain kind");
}

Domain load_domain_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read domain spec " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_domain_spec(text.str());
}

std::string dump_domain_spec(const Domain& domain) {
  json params = json::object();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IntervalShape>) {
          params["a"] = s.a;
          params["b"] = s.b;
        } else if constexpr (std::is_same_v<T, BoxShape>) {
          params["lower"] = s.lower;
          params["upper"] = s.upper;
        } else if constexpr (std::is_same_v<T, BallShape>) {
          params["radius"] = s.radius;
          params["center"] = s.center;
        } else if constexpr (std::is_same_v<T, EllipseShape>) {
          params["half_axes"] = s.half_axes;
          params["center"] = s.center;
        } else if constexpr (std::is_same_v<T, PolygonShape>) {
          json vs = json::array();
          for (const auto& v : s.vertices) vs.push_back({v[0], v[1]});
          params["vertices"] = vs;
        } else {
          std::size_t cursor = 0;
          params["cell_size"] = s.cell_size;
          params["origin"] = s.origin;
          params["mask"] = mask_to_json(s, 0, cursor);
        }
      },
      domain.shape());
  json spec = {{"kind", std::string(to_string(domain.kind()))},
               {"dim", domain.dim()},
               {"params", params}};
  return spec.dump();
}

}  // namespace isobound

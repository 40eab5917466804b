#include "toricdef/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toricdef {

namespace {

using nlohmann::json;

long as_long(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<long>();
}

const json& field(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError("missing field \"" + key + "\"");
  return *it;
}

template <typename Range>
std::string join(const Range& values) {
  std::string out = "[";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ", ";
    out += v;
    first = false;
  }
  return out + "]";
}

}  // namespace

FanFile parse_fan_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  FanFile file;
  const long dim = as_long(field(doc, "dim"), "dim");
  if (dim <= 0) throw ParseError("dim must be positive");
  file.dim = static_cast<std::size_t>(dim);

  const json& rays = field(doc, "rays");
  if (!rays.is_array()) throw ParseError("rays must be an array");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const json& r = rays[i];
    if (!r.is_array()) throw ParseError("ray " + std::to_string(i) + " must be an array");
    std::vector<long> coords;
    for (const auto& c : r) coords.push_back(as_long(c, "ray " + std::to_string(i)));
    if (coords.size() != file.dim) {
      throw ParseError("ray " + std::to_string(i) + " has " + std::to_string(coords.size()) + " coordinates, dim is " +
                       std::to_string(file.dim));
    }
    file.rays.push_back(lattice_vector(coords));
  }

  if (auto it = doc.find("cones"); it != doc.end()) {
    if (!it->is_array()) throw ParseError("cones must be an array");
    std::vector<std::vector<std::size_t>> cones;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const json& c = (*it)[k];
      if (!c.is_array()) throw ParseError("cone " + std::to_string(k) + " must be an array");
      std::vector<std::size_t> idx;
      for (const auto& v : c) {
        const long i = as_long(v, "cone " + std::to_string(k));
        if (i < 0 || static_cast<std::size_t>(i) >= file.rays.size())
          throw ParseError("cone " + std::to_string(k) + ": ray index " + std::to_string(i) + " out of range");
        idx.push_back(static_cast<std::size_t>(i));
      }
      cones.push_back(std::move(idx));
    }
    file.cones = std::move(cones);
  } else if (file.dim != 2) {
    throw ParseError("missing field \"cones\" (only optional for dim 2)");
  }

  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("name must be a string");
    file.name = it->get<std::string>();
  }
  return file;
}

std::string dump_fan_json(const FanFile& file) {
  std::vector<std::string> rays;
  for (const auto& r : file.rays) {
    std::vector<std::string> coords;
    for (Eigen::Index k = 0; k < r.size(); ++k) coords.push_back(to_string(r(k)));
    rays.push_back(join(coords));
  }
  std::string out = "{\n  \"dim\": " + std::to_string(file.dim) + ",\n  \"rays\": " + join(rays);
  if (file.cones) {
    std::vector<std::string> cones;
    for (const auto& c : *file.cones) {
      std::vector<std::string> idx;
      for (auto i : c) idx.push_back(std::to_string(i));
      cones.push_back(join(idx));
    }
    out += ",\n  \"cones\": " + join(cones);
  }
  if (file.name) out += ",\n  \"name\": " + json(*file.name).dump();
  return out + "\n}\n";
}

FanFile from_fan(const Fan& fan, std::optional<std::string> name) {
  FanFile file;
  file.dim = fan.dim();
  file.rays = fan.rays();
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : fan.max_cones()) cones.push_back(c.ray_indices);
  file.cones = std::move(cones);
  file.name = std::move(name);
  return file;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  if (!out) throw IoError("write failed for " + path);
}

FanFile load_fan_file(const std::string& path) { return parse_fan_json(read_file(path)); }

void save_fan_file(const std::string& path, const FanFile& file) { write_file(path, dump_fan_json(file)); }

}  // namespace toricdef

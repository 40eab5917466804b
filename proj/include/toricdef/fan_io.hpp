// Fan JSON files: {"dim": n, "rays": [[..], ..], "cones": [[..], ..], "name": ".."}
// with 0-based ray indices. "cones" may be omitted for dim 2, "name" always.

#ifndef TORICDEF_FAN_IO_HPP
#define TORICDEF_FAN_IO_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toricdef/lattice_fan.hpp"

namespace toricdef {

/// The file could not be read or written.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The text is not a well-formed fan file.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FanFile {
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::optional<std::vector<std::vector<std::size_t>>> cones;
  std::optional<std::string> name;

  ValidationReport validate() const { return validate_fan(dim, rays, cones); }
};

FanFile parse_fan_json(const std::string& text);
/// Canonical form: fields in the order dim, rays, cones, name, one line each.
std::string dump_fan_json(const FanFile& file);

FanFile from_fan(const Fan& fan, std::optional<std::string> name = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

FanFile load_fan_file(const std::string& path);
void save_fan_file(const std::string& path, const FanFile& file);

}  // namespace toricdef

#endif  // TORICDEF_FAN_IO_HPP

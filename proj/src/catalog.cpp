#include "tradespace/catalog.hpp"

#include "tradespace/common.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tradespace {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::vector<CameraSpec> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("catalog: cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw ConfigError("catalog: empty file " + path);
  const auto header = split_csv(line);
  const std::vector<std::string> expected = {"id", "manufacturer", "res_x", "res_y"};
  if (header.size() < expected.size()) throw ConfigError("catalog: missing column in header");
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (header[i] != expected[i])
      throw ConfigError("catalog: expected column '" + expected[i] + "', got '" + header[i] + "'");
  }

  std::vector<CameraSpec> catalog;
  std::set<std::string> seen;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() < 4)
      throw ConfigError("catalog: line " + std::to_string(lineno) + ": expected 4 fields");
    CameraSpec spec;
    spec.id = fields[0];
    spec.manufacturer = fields[1];
    try {
      spec.res_x = std::stoi(fields[2]);
      spec.res_y = std::stoi(fields[3]);
    } catch (const std::exception&) {
      throw ConfigError("catalog: line " + std::to_string(lineno) + ": bad resolution");
    }
    if (spec.res_x < 1 || spec.res_y < 1)
      throw ConfigError("catalog: line " + std::to_string(lineno) + ": non-positive resolution");
    if (!seen.insert(spec.id).second)
      throw ConfigError("catalog: duplicate id '" + spec.id + "'");
    catalog.push_back(std::move(spec));
  }
  if (catalog.empty()) throw ConfigError("catalog: no cameras in " + path);
  return catalog;
}

double sensor_cost(const CameraSpec& spec, const CostParams& params) {
  return params.k_res * spec.megapixels();
}

double mission_cost(int n_uav, const CameraSpec& spec, const CostParams& params) {
  if (n_uav < 1) throw std::invalid_argument("mission_cost: n_uav must be >= 1");
  return n_uav * (params.platform_cost + sensor_cost(spec, params)) + params.support_cost;
}

int find_camera(const std::vector<CameraSpec>& catalog, const std::string& id) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (catalog[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace tradespace

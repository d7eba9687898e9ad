#pragma once

#include <string>
#include <vector>

namespace tradespace {

/// One catalog camera. Cost and megapixel figures are derived from the pixel
/// resolution; `manufacturer` is carried as metadata only.
struct CameraSpec {
  std::string id;  // part number, unique within a catalog
  std::string manufacturer;
  int res_x = 0;
  int res_y = 0;

  double megapixels() const { return static_cast<double>(res_x) * res_y / 1e6; }
};

struct CostParams {
  double k_res = 12.698;  // $/MP, fitted resolution-price slope
  double platform_cost = 500.0;
  double support_cost = 0.0;
};

/// Loads a camera catalog CSV with header `id,manufacturer,res_x,res_y`.
/// Preserves file order; rejects duplicate ids and non-positive resolutions.
std::vector<CameraSpec> load_catalog(const std::string& path);

/// Payload cost: k_res * MP.
double sensor_cost(const CameraSpec& spec, const CostParams& params);

/// Total mission cost: n_uav * (platform + sensor) + support.
double mission_cost(int n_uav, const CameraSpec& spec, const CostParams& params);

/// Index of the camera with the given id, or -1.
int find_camera(const std::vector<CameraSpec>& catalog, const std::string& id);

}  // namespace tradespace

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "jetbound/morse.hpp"

namespace jetbound {

inline constexpr const char* kEngineVersion = "jetbound-0.1.0/engine-1";

// Report schema: dim, order, geometry, weights, total_dim, polynomial
// (ascending decimal strings), leading_coeff (decimal string), threshold
// (integer or null), elapsed_ms. Coefficients are strings because they
// overflow 64 bits from n = 5 on.
nlohmann::ordered_json report_to_json(const MorseReport& report, bool with_elapsed = true);
MorseReport report_from_json(const nlohmann::json& j);

// Content-addressed cache of MorseReports. Entries omit elapsed time, so a
// hit serializes byte-identically to a fresh computation.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // $JETBOUND_CACHE, else .jetbound-cache under the working directory.
  static std::filesystem::path default_dir();

  // Everything that determines a report, engine version included.
  static std::string key_material(int n, int k, const WeightVector& a, GeometryKind geometry);
  static std::string digest(const std::string& material);

  std::optional<MorseReport> load(int n, int k, const WeightVector& a, GeometryKind geometry) const;
  // Write-temp-then-rename, so readers never see a partial entry.
  void store(const MorseReport& report) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path entry_path(const std::string& material) const;

  std::filesystem::path dir_;
};

}  // namespace jetbound

#include "jetbound/report.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "jetbound/errors.hpp"

namespace jetbound {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json report_to_json(const MorseReport& report, bool with_elapsed) {
  ordered_json j;
  j["dim"] = report.n;
  j["order"] = report.k;
  j["geometry"] = std::string(to_string(report.geometry));
  j["weights"] = std::vector<std::int64_t>(report.weights.values().begin(), report.weights.values().end());
  j["total_dim"] = report.total_dim;
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : report.morse_poly.coefficients()) coeffs.push_back(c.get_str());
  j["polynomial"] = std::move(coeffs);
  j["leading_coeff"] = report.leading_coeff.get_str();
  if (report.threshold) {
    j["threshold"] = report.threshold->get_si();
  } else {
    j["threshold"] = nullptr;
  }
  if (with_elapsed) j["elapsed_ms"] = report.elapsed.count();
  return j;
}

MorseReport report_from_json(const json& j) {
  try {
    MorseReport r;
    r.n = j.at("dim").get<int>();
    r.k = j.at("order").get<int>();
    const auto geometry = parse_geometry(j.at("geometry").get<std::string>());
    if (!geometry) throw InputError("unknown geometry in report");
    r.geometry = *geometry;
    r.weights = WeightVector(j.at("weights").get<std::vector<std::int64_t>>());
    r.total_dim = j.at("total_dim").get<int>();
    std::vector<Polynomial::Term> terms;
    const auto& coeffs = j.at("polynomial");
    for (std::size_t e = 0; e < coeffs.size(); ++e)
      terms.emplace_back(Monomial::of(VariableId::d(), static_cast<unsigned>(e)),
                         Integer(coeffs[e].get<std::string>()));
    r.morse_poly = EvaluatedClass(Polynomial::from_terms(std::move(terms)));
    r.leading_coeff = Integer(j.at("leading_coeff").get<std::string>());
    if (!j.at("threshold").is_null()) r.threshold = Integer(j.at("threshold").get<long>());
    if (j.contains("elapsed_ms")) r.elapsed = std::chrono::milliseconds(j["elapsed_ms"].get<long>());
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::filesystem::path ReportCache::default_dir() {
  if (const char* env = std::getenv("JETBOUND_CACHE"); env && *env) return env;
  return std::filesystem::current_path() / ".jetbound-cache";
}

std::string ReportCache::key_material(int n, int k, const WeightVector& a, GeometryKind geometry) {
  std::ostringstream out;
  out << "engine=" << kEngineVersion << '\n'
      << "geometry=" << to_string(geometry) << '\n'
      << "weights=" << a.to_string() << '\n'
      << build_relations(TowerContext(n, k)).canonical_text();
  return out.str();
}

std::string ReportCache::digest(const std::string& material) {
  // FNV-1a, 64 bit. The full key material is stored in the entry and
  // compared on load, so collisions only cost a recomputation.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : material) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

std::filesystem::path ReportCache::entry_path(const std::string& material) const {
  return dir_ / (digest(material) + ".json");
}

std::optional<MorseReport> ReportCache::load(int n, int k, const WeightVector& a, GeometryKind geometry) const {
  const std::string material = key_material(n, k, a, geometry);
  std::ifstream in(entry_path(material));
  if (!in) return std::nullopt;
  try {
    const json entry = json::parse(in);
    if (entry.at("key").get<std::string>() != material) return std::nullopt;
    return report_from_json(entry.at("report"));
  } catch (const std::exception&) {
    // Unreadable entries are treated as misses and overwritten later.
    return std::nullopt;
  }
}

void ReportCache::store(const MorseReport& report) const {
  const std::string material = key_material(report.n, report.k, report.weights, report.geometry);
  std::filesystem::create_directories(dir_);
  ordered_json entry;
  entry["key"] = material;
  entry["report"] = report_to_json(report, false);

  const auto target = entry_path(material);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << entry.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace jetbound

#pragma once

#include "mlab/cyclotomic.hpp"
#include "mlab/family.hpp"

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace mlab {

inline constexpr const char* kCacheSchema = "mlab-poly/1";

using Json = nlohmann::ordered_json;

struct CacheEntry {
  std::string schema_version;
  FamilySpec spec;
  std::int64_t degree = -1;
  CycPoly poly;
};

/// Canonical object: schema_version, d, m, n, zeta_order, zeta_power, degree, coeffs.
/// Gleason polynomials use zeta_order 1 and zeta_power 0.
Json poly_to_json(const CycPoly& p, const FamilySpec& meta);

/// Newline-terminated compact rendering of poly_to_json.
std::string serialize_poly(const CycPoly& p, const FamilySpec& meta);

/// ParseError on malformed text, a foreign schema, or a violated invariant.
CacheEntry parse_cache_entry(const std::string& text);

/// Human-readable rendering such as "c^2 + (z + 1)*c - 2".
std::string render_poly(const CycPoly& p, const std::string& var = "c", const std::string& zeta = "z");
std::string render_poly(const IntPoly& p, const std::string& var = "c");

std::filesystem::path cache_path(const std::filesystem::path& dir, const FamilySpec& spec);

/// Writes through a temporary file in the same directory and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Cached polynomial when a valid entry for spec exists, else builds and stores it.
/// Invalid entries are reported through warn and overwritten.
CycPoly load_or_build(FamilyBuilder& builder, const FamilySpec& spec,
                      const std::optional<std::filesystem::path>& cache_dir,
                      const std::function<void(const std::string&)>& warn = {});

}  // namespace mlab

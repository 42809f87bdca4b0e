#include "mlab/serialize.hpp"

#include "mlab/certify.hpp"
#include "mlab/error.hpp"
#include "mlab/number_theory.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace mlab {

namespace {

std::int64_t get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) fail(ErrorKind::ParseError, std::string("missing integer field ") + key);
  return j.at(key).get<std::int64_t>();
}

std::string monomial(long i, const std::string& var) {
  if (i == 0) return "";
  if (i == 1) return var;
  return var + "^" + std::to_string(i);
}

}  // namespace

Json poly_to_json(const CycPoly& p, const FamilySpec& meta) {
  Json j;
  j["schema_version"] = kCacheSchema;
  j["d"] = meta.d;
  j["m"] = meta.m;
  j["n"] = meta.n;
  j["zeta_order"] = meta.zeta ? meta.zeta->order : 1;
  j["zeta_power"] = meta.zeta ? meta.zeta->power : 0;
  j["degree"] = p.degree();
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    Json inner = Json::array();
    for (const auto& x : c.coeffs()) inner.push_back(to_decimal(x));
    coeffs.push_back(std::move(inner));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::string serialize_poly(const CycPoly& p, const FamilySpec& meta) { return poly_to_json(p, meta).dump() + "\n"; }

CacheEntry parse_cache_entry(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed cache entry: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version") || !j.at("schema_version").is_string())
    fail(ErrorKind::ParseError, "cache entry lacks schema_version");
  CacheEntry e{j.at("schema_version").get<std::string>(), {}, -1, CycPoly(CyclotomicRing(1))};
  if (e.schema_version != kCacheSchema) fail(ErrorKind::ParseError, "schema " + e.schema_version + " is not " + kCacheSchema);
  e.spec.d = get_int(j, "d");
  e.spec.m = get_int(j, "m");
  e.spec.n = get_int(j, "n");
  const std::int64_t k = get_int(j, "zeta_order");
  const std::int64_t s = get_int(j, "zeta_power");
  if (e.spec.m != 0) e.spec.zeta = ZetaDescriptor{k, s};
  else if (k != 1 || s != 0) fail(ErrorKind::ParseError, "Gleason entry must have zeta_order 1, zeta_power 0");
  try {
    e.spec.validate();
  } catch (const Error& err) {
    fail(ErrorKind::ParseError, err.what());
  }
  e.degree = get_int(j, "degree");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) fail(ErrorKind::ParseError, "missing coeffs");
  const CyclotomicRing ring(k);
  const std::size_t phi = ring.field()->degree();
  std::vector<CyclotomicElement> coeffs;
  for (const auto& inner : j.at("coeffs")) {
    if (!inner.is_array() || inner.size() != phi) fail(ErrorKind::ParseError, "coefficient has the wrong number of coordinates");
    std::vector<Integer> coords;
    for (const auto& x : inner) {
      Integer v;
      if (!x.is_string() || !parse_decimal(x.get<std::string>(), v)) fail(ErrorKind::ParseError, "coordinate is not a decimal string");
      coords.push_back(std::move(v));
    }
    coeffs.emplace_back(ring.field(), std::move(coords));
  }
  const std::size_t outer = coeffs.size();
  e.poly = CycPoly(ring, std::move(coeffs));
  if (e.poly.degree() + 1 != static_cast<long>(outer)) fail(ErrorKind::ParseError, "trailing zero coefficient");
  if (e.degree != e.poly.degree()) fail(ErrorKind::ParseError, "degree field disagrees with coeffs");
  if (!e.poly.is_monic()) fail(ErrorKind::ParseError, "leading coefficient is not 1");
  return e;
}

std::string render_poly(const CycPoly& p, const std::string& var, const std::string& zeta) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const auto& c = p.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    std::string term;
    bool negative = false;
    if (c.is_rational_integer()) {
      Integer v = c.coeffs()[0];
      negative = v < 0;
      v = abs(v);
      if (v != 1 || i == 0) term = to_decimal(v);
    } else {
      term = "(" + to_string(c, zeta) + ")";
    }
    const std::string mono = monomial(i, var);
    if (!mono.empty()) term += term.empty() ? mono : "*" + mono;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

std::string render_poly(const IntPoly& p, const std::string& var) {
  return render_poly(promote(p, CyclotomicRing(1)), var);
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const FamilySpec& spec) {
  const std::int64_t k = spec.zeta ? spec.zeta->order : 1;
  const std::int64_t s = spec.zeta ? spec.zeta->power : 0;
  return dir / ("mlab-poly-d" + std::to_string(spec.d) + "-m" + std::to_string(spec.m) + "-n" + std::to_string(spec.n) +
                "-k" + std::to_string(k) + "-s" + std::to_string(s) + ".json");
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  static std::atomic<unsigned long> counter{0};
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) fail(ErrorKind::InvalidArgument, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(ErrorKind::InvalidArgument, "rename failed for " + path.string() + ": " + ec.message());
  }
}

CycPoly load_or_build(FamilyBuilder& builder, const FamilySpec& spec, const std::optional<std::filesystem::path>& cache_dir,
                      const std::function<void(const std::string&)>& warn) {
  spec.validate();
  if (!cache_dir) return family_polynomial(builder, spec);
  const auto path = cache_path(*cache_dir, spec);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      CacheEntry e = parse_cache_entry(buf.str());
      if (e.spec == spec) return e.poly;
      if (warn) warn("cache entry " + path.string() + " names a different spec; rebuilding");
    } catch (const Error& err) {
      if (warn) warn("cache entry " + path.string() + " is invalid (" + err.what() + "); rebuilding");
    }
  }
  CycPoly p = family_polynomial(builder, spec);
  write_atomic(path, serialize_poly(p, spec));
  return p;
}

}  // namespace mlab

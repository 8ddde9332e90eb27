#include "rr5/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "rr5/errors.hpp"

namespace rr5::cache {

using nlohmann::json;
using pipeline::DiscReport;
using pipeline::PipelineResult;

namespace {

json poly_json(const exact::QPoly& p) { return exact::coeff_strings(p); }

exact::QPoly poly_from(const json& j) {
  return exact::qpoly_from_strings(j.get<std::vector<std::string>>());
}

json disc_json(const DiscReport& r) {
  json factors = json::array();
  for (const auto& [p, e] : r.factors) factors.push_back({p.get_str(), e});
  return {{"sign", r.sign},
          {"factors", factors},
          {"cofactor", r.cofactor.get_str()},
          {"exponent_law", r.exponent_law},
          {"small_primes", r.small_primes}};
}

DiscReport disc_from(const json& j) {
  DiscReport r;
  r.sign = j.at("sign").get<int>();
  for (const auto& f : j.at("factors"))
    r.factors.emplace_back(exact::Integer(f.at(0).get<std::string>()), f.at(1).get<unsigned>());
  r.cofactor = exact::Integer(j.at("cofactor").get<std::string>());
  r.exponent_law = j.at("exponent_law").get<bool>();
  r.small_primes = j.at("small_primes").get<bool>();
  return r;
}

std::mutex& write_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::string render(const PipelineResult& r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["d"] = r.d;
  j["f"] = r.f;
  j["h"] = r.h;
  j["v"] = r.v;
  j["v_relaxed"] = r.v_relaxed;
  j["H"] = poly_json(r.H);
  j["R"] = poly_json(r.R);
  j["S"] = poly_json(r.S);
  j["Q"] = poly_json(r.Q);
  j["p"] = poly_json(r.p);
  j["q"] = poly_json(r.q);
  j["checks"] = {{"F", r.F_check},         {"G", r.G_check},         {"div", r.div_check},
                 {"R_sym", r.R_sym_check}, {"T", r.T_check},         {"sym", r.sym_check},
                 {"j", r.j_check},         {"zs", r.zs_check}};
  j["irreducible"] = r.irreducible ? json(*r.irreducible) : json(nullptr);
  j["disc_p"] = disc_json(r.disc_p);
  j["precision_used"] = r.precision_used;
  return j.dump(1) + "\n";
}

PipelineResult parse(const std::string& text) {
  try {
    json j = json::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw DomainError("unsupported cache schema version");
    PipelineResult r;
    r.d = j.at("d").get<long>();
    r.f = j.at("f").get<long>();
    r.h = j.at("h").get<long>();
    r.v = j.at("v").get<long>();
    r.v_relaxed = j.at("v_relaxed").get<bool>();
    r.H = poly_from(j.at("H"));
    r.R = poly_from(j.at("R"));
    r.S = poly_from(j.at("S"));
    r.Q = poly_from(j.at("Q"));
    r.p = poly_from(j.at("p"));
    r.q = poly_from(j.at("q"));
    const json& c = j.at("checks");
    r.F_check = c.at("F").get<bool>();
    r.G_check = c.at("G").get<bool>();
    r.div_check = c.at("div").get<bool>();
    r.R_sym_check = c.at("R_sym").get<bool>();
    r.T_check = c.at("T").get<bool>();
    r.sym_check = c.at("sym").get<bool>();
    r.j_check = c.at("j").get<bool>();
    r.zs_check = c.at("zs").get<bool>();
    if (!j.at("irreducible").is_null()) r.irreducible = j.at("irreducible").get<bool>();
    r.disc_p = disc_from(j.at("disc_p"));
    r.precision_used = j.at("precision_used").get<hp::prec_t>();
    return r;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed cache entry: ") + e.what());
  }
}

bool same(const PipelineResult& a, const PipelineResult& b) {
  auto disc_eq = [](const DiscReport& x, const DiscReport& y) {
    return x.sign == y.sign && x.factors == y.factors && x.cofactor == y.cofactor &&
           x.exponent_law == y.exponent_law && x.small_primes == y.small_primes;
  };
  return a.d == b.d && a.f == b.f && a.h == b.h && a.v == b.v && a.v_relaxed == b.v_relaxed &&
         a.H == b.H && a.R == b.R && a.S == b.S && a.Q == b.Q && a.p == b.p && a.q == b.q &&
         a.F_check == b.F_check && a.G_check == b.G_check && a.div_check == b.div_check &&
         a.R_sym_check == b.R_sym_check && a.T_check == b.T_check && a.sym_check == b.sym_check &&
         a.j_check == b.j_check && a.zs_check == b.zs_check && a.irreducible == b.irreducible &&
         disc_eq(a.disc_p, b.disc_p) && a.precision_used == b.precision_used;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path Cache::resolve_dir(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("RR5_CACHE_DIR"); env && *env) return env;
  if (flag && !flag->empty()) return *flag;
  return ".rr5-cache";
}

std::filesystem::path Cache::path_for(long d) const {
  char name[32];
  std::snprintf(name, sizeof name, "d%04ld.json", d);
  return dir_ / name;
}

std::optional<PipelineResult> Cache::load(long d) const {
  std::ifstream in(path_for(d));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  PipelineResult r = parse(ss.str());
  if (r.d != d) throw DomainError("cache entry " + path_for(d).string() + " holds another d");
  return r;
}

void Cache::store(const PipelineResult& r) const {
  static std::atomic<unsigned> counter{0};
  std::lock_guard<std::mutex> lock(write_mutex());
  std::filesystem::create_directories(dir_);
  auto target = path_for(r.d);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << render(r);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

PipelineResult Cache::fetch(long d) const {
  try {
    if (auto hit = load(d)) return *hit;
  } catch (const DomainError&) {
    // stale schema or damaged file: recompute and overwrite
  }
  PipelineResult r = pipeline::run_pipeline(d);
  store(r);
  return r;
}

}  // namespace rr5::cache

#include "resmirror/cache.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>

namespace resmirror {

using nlohmann::json;

namespace {

std::string dump_key(json key) {
  key["v"] = kCacheSchema;
  return key.dump();  // object keys are sorted, so this is canonical
}

json params_of(const GeometrySpec& g) {
  switch (g.kind) {
    case GeometryKind::cpn: return {{"N", g.N}, {"k", g.k}};
    case GeometryKind::kf0: return {{"k", g.ring_k.get_str()}};
    default: return json::object();
  }
}

}  // namespace

std::string two_point_key(const GeometrySpec& g, BiDegree d, const Insertion& a, const Insertion& b) {
  return dump_key({{"geometry", g.name()},
                   {"params", params_of(g)},
                   {"degree", {d.da, d.db}},
                   {"insertions", {{a.s, a.t}, {b.s, b.t}}}});
}

std::string vsc_key(int N, int k, int d, int n) {
  return dump_key({{"geometry", "vsc"}, {"params", {{"N", N}, {"k", k}}}, {"degree", {d, 0}}, {"insertions", {n}}});
}

Cache::Cache(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
    return;
  }
  std::ifstream in(path_);
  if (!in) {
    warnings_.push_back("cache " + path_.string() + " is unreadable; values will be recomputed");
    writable_ = false;
    return;
  }
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    try {
      const json rec = json::parse(line);
      const std::string key = dump_key(rec.at("key"));
      const Rational value = parse_rational(rec.at("value").get<std::string>());
      auto [it, fresh] = values_.emplace(key, value);
      if (!fresh && it->second != value)
        throw CacheCorruption("cache " + path_.string() + " holds two values for " + key);
    } catch (const CacheCorruption&) {
      throw;
    } catch (const std::exception&) {
      warnings_.push_back("cache " + path_.string() + ": skipping malformed line " + std::to_string(no));
    }
  }
}

std::filesystem::path Cache::default_path() {
  if (const char* p = std::getenv("RESMIRROR_CACHE"); p && *p) return p;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "resmirror" / "cache.jsonl";
  if (const char* h = std::getenv("HOME"); h && *h) return std::filesystem::path(h) / ".cache" / "resmirror" / "cache.jsonl";
  return "resmirror-cache.jsonl";
}

std::optional<Rational> Cache::lookup(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::size_t Cache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

void Cache::store(const std::string& key, const Rational& value, const std::string& provenance) {
  std::lock_guard lock(mutex_);
  auto [it, fresh] = values_.emplace(key, value);
  if (!fresh) {
    if (it->second != value)
      throw CacheCorruption("conflicting value for " + key + ": " + it->second.get_str() + " vs " + value.get_str());
    return;
  }
  if (!writable_) return;
  const std::string line =
      json{{"key", json::parse(key)}, {"value", value.get_str()}, {"provenance", provenance}}.dump() + "\n";
  // one write() on an O_APPEND descriptor keeps the line whole
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0 || ::write(fd, line.data(), line.size()) != static_cast<ssize_t>(line.size())) {
    warnings_.push_back("cache " + path_.string() + " is not writable: " + std::strerror(errno));
    writable_ = false;
  }
  if (fd >= 0) ::close(fd);
}

TwoPointFn cached_two_point(Cache& cache) {
  return [&cache](const GeometrySpec& g, BiDegree d, const Insertion& a, const Insertion& b) {
    const std::string key = two_point_key(g, d, a, b);
    if (auto v = cache.lookup(key)) return *v;
    Rational v = two_point(g, d, a, b);
    cache.store(key, v, "two_point/" + g.name());
    return v;
  };
}

}  // namespace resmirror

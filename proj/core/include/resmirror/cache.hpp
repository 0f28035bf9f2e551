#pragma once

#include "resmirror/errors.hpp"
#include "resmirror/series.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace resmirror {

inline constexpr int kCacheSchema = 1;

// Canonical key strings; they embed the schema version.
std::string two_point_key(const GeometrySpec& g, BiDegree d, const Insertion& a, const Insertion& b);
std::string vsc_key(int N, int k, int d, int n);

// Append-only JSON-lines memo file. Each line is
// {"key":{...},"value":"p/q","provenance":"..."}.
class Cache {
 public:
  explicit Cache(std::filesystem::path path);

  // $RESMIRROR_CACHE, else $XDG_CACHE_HOME or ~/.cache, resmirror/cache.jsonl.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const { return path_; }
  std::optional<Rational> lookup(const std::string& key) const;
  // No-op for a known key with the same value; CacheCorruption if it differs.
  void store(const std::string& key, const Rational& value, const std::string& provenance);
  std::size_t size() const;
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::string, Rational> values_;
  std::vector<std::string> warnings_;
  bool writable_ = true;
};

// two_point backed by the cache.
TwoPointFn cached_two_point(Cache& cache);

}  // namespace resmirror

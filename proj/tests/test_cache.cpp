#include <doctest.h>

#include "resmirror/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace resmirror;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) : path(fs::temp_directory_path() / ("resmirror-test-" + name)) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  return n;
}

}  // namespace

TEST_CASE("store and lookup") {
  TempFile f("basic.jsonl");
  const std::string key = two_point_key(cpn(5, 5), {1, 0}, {0, 0}, {2, 0});
  {
    Cache c(f.path);
    CHECK_FALSE(c.lookup(key).has_value());
    c.store(key, 3850, "test");
    CHECK(c.lookup(key) == Rational(3850));
    c.store(key, 3850, "test");
    CHECK_THROWS_AS(c.store(key, 3851, "test"), CacheCorruption);
  }
  CHECK(line_count(f.path) == 1);
  Cache again(f.path);
  CHECK(again.size() == 1);
  CHECK(again.lookup(key) == Rational(3850));
  CHECK(again.warnings().empty());
}

TEST_CASE("keys separate geometry, parameters and insertions") {
  const auto a = two_point_key(cpn(5, 5), {1, 0}, {0, 0}, {2, 0});
  CHECK(a != two_point_key(cpn(6, 5), {1, 0}, {0, 0}, {2, 0}));
  CHECK(a != two_point_key(cpn(5, 5), {1, 0}, {2, 0}, {0, 0}));
  CHECK(a != two_point_key(cpn(5, 5), {2, 0}, {0, 0}, {2, 0}));
  CHECK(vsc_key(5, 5, 1, 1) != vsc_key(5, 5, 1, 2));
  CHECK(a.find("\"v\":1") != std::string::npos);
}

TEST_CASE("malformed lines are skipped with a warning") {
  TempFile f("malformed.jsonl");
  const std::string key = vsc_key(5, 5, 1, 1);
  {
    Cache c(f.path);
    c.store(key, 770, "test");
  }
  {
    std::ofstream out(f.path, std::ios::app);
    out << "not json\n{\"key\":{}}\n";
  }
  Cache c(f.path);
  CHECK(c.lookup(key) == Rational(770));
  CHECK(c.warnings().size() == 2);
}

TEST_CASE("conflicting records in the file are reported") {
  TempFile f("conflict.jsonl");
  const std::string key = vsc_key(5, 5, 1, 1);
  {
    Cache c(f.path);
    c.store(key, 770, "test");
  }
  {
    std::ifstream in(f.path);
    std::string line;
    std::getline(in, line);
    const auto pos = line.find("\"770\"");
    REQUIRE(pos != std::string::npos);
    line.replace(pos, 5, "\"771\"");
    std::ofstream out(f.path, std::ios::app);
    out << line << "\n";
  }
  CHECK_THROWS_AS(Cache{f.path}, CacheCorruption);
}

TEST_CASE("cached two-point evaluation") {
  TempFile f("tp.jsonl");
  Cache c(f.path);
  auto tp = cached_two_point(c);
  CHECK(tp(cpn(5, 5), {1, 0}, {0, 0}, {2, 0}) == 3850);
  CHECK(c.size() == 1);
  CHECK(tp(cpn(5, 5), {1, 0}, {0, 0}, {2, 0}) == 3850);
  CHECK(line_count(f.path) == 1);
}

TEST_CASE("default path honours the environment") {
  const char* old = std::getenv("RESMIRROR_CACHE");
  const std::string saved = old ? old : "";
  ::setenv("RESMIRROR_CACHE", "/tmp/resmirror-env.jsonl", 1);
  CHECK(Cache::default_path() == fs::path("/tmp/resmirror-env.jsonl"));
  if (old)
    ::setenv("RESMIRROR_CACHE", saved.c_str(), 1);
  else
    ::unsetenv("RESMIRROR_CACHE");
}

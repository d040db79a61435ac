#include <filesystem>
#include <fstream>
#include <random>

#include "branchdim/chain_cache.hpp"
#include "branchdim/quotients.hpp"
#include "branchdim/wordparse.hpp"
#include "doctest.h"

using namespace branchdim;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("branchdim-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("cache round trip") {
  TempDir dir;
  const ChainCache cache(dir.path);
  const auto key = ChainCache::key(*grigorchuk2(), 3);
  CHECK_FALSE(cache.load(key));
  const LevelQuotient q = quotient(grigorchuk2(), 3);
  cache.store(key, q.chain);
  CHECK(fs::exists(cache.file_for(key)));
  const auto hit = cache.load(key);
  REQUIRE(hit);
  CHECK(hit->order() == q.order());
  CHECK(hit->base() == q.chain.base());
  CHECK(hit->contains(level_perm(parse_word("a b a^-1 b^2", grigorchuk2()), 3)));
  CHECK(cache.info().files == 1);
  CHECK(cache.info().bytes > 0);
  CHECK(cache.clear() == 1);
  CHECK(cache.info().files == 0);
}

TEST_CASE("cache keys separate levels and definitions") {
  const auto g = grigorchuk2();
  const auto other = parse_group_def("alphabet 4\ngen a = ((1 2 3 4); e, e, e, e)\ngen b = (e; a, e, e, b)\n");
  CHECK(ChainCache::key(*g, 3) != ChainCache::key(*g, 4));
  CHECK(ChainCache::key(*g, 3) != ChainCache::key(*other, 3));
  CHECK(ChainCache::key(*g, 3) == ChainCache::key(*parse_group_def(kGrigorchuk2Source), 3));
}

TEST_CASE("corrupt cache files are misses") {
  TempDir dir;
  const ChainCache cache(dir.path);
  const auto key = ChainCache::key(*grigorchuk2(), 2);
  cache.store(key, quotient(grigorchuk2(), 2).chain);
  const fs::path file = cache.file_for(key);

  SUBCASE("flipped byte") {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(20);
    f.put('\x7f');
  }
  SUBCASE("truncated") { fs::resize_file(file, fs::file_size(file) / 2); }
  SUBCASE("wrong magic") {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.put('X');
  }
  SUBCASE("empty") { fs::resize_file(file, 0); }
  CHECK_FALSE(cache.load(key));

  // quotient() falls back to a fresh build and repairs the entry.
  const LevelQuotient q = quotient(grigorchuk2(), 2, {kDefaultChainCap, dir.path});
  CHECK(q.order() == 64);
  CHECK(cache.load(key));
}

TEST_CASE("quotient uses the cache transparently") {
  TempDir dir;
  const QuotientOptions opts{kDefaultChainCap, dir.path};
  const auto cold = quotient(grigorchuk2(), 4, opts);
  CHECK(ChainCache(dir.path).info().files == 1);
  const auto warm = quotient(grigorchuk2(), 4, opts);
  CHECK(warm.order() == cold.order());
  CHECK(warm.chain.base() == cold.chain.base());
}

TEST_CASE("unwritable cache directory is ignored") {
  const QuotientOptions opts{kDefaultChainCap, "/proc/branchdim-no-such-dir"};
  CHECK(quotient(grigorchuk2(), 2, opts).order() == 64);
}

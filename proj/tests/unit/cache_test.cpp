#include <doctest.h>

#include <algorithm>
#include <thread>

#include "osn/cache/result_cache.hpp"
#include "osn/ingestion/query.hpp"
#include "support/cache_schedule.hpp"

using namespace osn;
using namespace osn::cache;
using std::chrono::seconds;

namespace {

Instant at_s(std::int64_t s) { return Instant{std::chrono::milliseconds{s * 1000}}; }

ResultSet posts(std::size_t n) {
  std::vector<ClassifiedPost> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(testing::classified(testing::make_post(std::to_string(i), "t"), 0.0));
  return std::make_shared<const std::vector<ClassifiedPost>>(std::move(v));
}

ingestion::Query query(std::vector<std::string> terms) {
  ingestion::RawQuery r;
  r.terms = std::move(terms);
  r.language = "en";
  return ingestion::normalize_query(r);
}

CacheKey key_of(const std::string& s) { return cache_key(query({s}), sentiment::kValenceRule); }

}  // namespace

TEST_CASE("cache_key canonicalization") {
  const auto ab = cache_key(query({"a", "b"}), sentiment::kValenceRule);
  CHECK(ab.digest.size() == 64);
  CHECK(ab == cache_key(query({"b", "a"}), sentiment::kValenceRule));
  CHECK(ab == cache_key(query({"B", " a "}), sentiment::kValenceRule));
  CHECK_FALSE(ab == cache_key(query({"a", "b"}), sentiment::kPatternAverage));

  auto other_lang = query({"a", "b"});
  other_lang.language = "de";
  CHECK_FALSE(ab == cache_key(other_lang, sentiment::kValenceRule));
  auto clamped = query({"a", "b"});
  clamped.clamped = true;
  CHECK(ab == cache_key(clamped, sentiment::kValenceRule));
  auto more = query({"a", "b"});
  more.max_results = 5;
  CHECK_FALSE(ab == cache_key(more, sentiment::kValenceRule));
  CHECK_FALSE(cache_key(query({"a"}), sentiment::kValenceRule) == cache_key(query({"#a"}), sentiment::kValenceRule));

  // Canonical form pins the field order.
  CHECK(canonical_query(query({"b", "#a"}), sentiment::kValenceRule) ==
        R"([["algorithm","valence-rule"],["terms",["hashtag:#a","keyword:b"]],["lang","en"],)"
        R"(["from",null],["to",null],["origin",null],["max_results",100]])");
}

TEST_CASE("cache_key is invariant under term permutations") {
  testing::Rng rng(17);
  static const std::vector<std::string> pool = {"solar", "#wind", "@bob", "grid power", "nuclear", "#energy",
                                                "@grid_watch", "battery", "prices", "#climate"};
  for (int round = 0; round < 500; ++round) {
    std::vector<std::string> terms;
    for (std::size_t i = 0, n = 1 + rng.below(pool.size()); i < n; ++i) terms.push_back(rng.pick(pool));
    const auto want = cache_key(query(terms), sentiment::kValenceRule);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(terms.begin(), terms.end(), rng.engine());
      REQUIRE(cache_key(query(terms), sentiment::kValenceRule) == want);
    }
  }
}

TEST_CASE("ttl boundary") {
  ResultCache cache;
  CHECK(cache.config().ttl == seconds{60});
  CHECK(cache.config().capacity == 1024);
  const auto k = key_of("x");
  const auto v = posts(2);
  cache.put(k, v, at_s(0));
  CHECK(cache.get(k, at_s(59)) == v);
  CHECK(cache.get(k, Instant{std::chrono::milliseconds{59'999}}) == v);
  CHECK_FALSE(cache.get(k, at_s(60)));
  CHECK_FALSE(cache.get(k, at_s(59)));  // expired entries are dropped, not resurrected
  CHECK_FALSE(cache.get(key_of("never"), at_s(0)));
}

TEST_CASE("put semantics") {
  ResultCache cache;
  const auto k = key_of("x");
  cache.put(k, posts(1), at_s(0));
  cache.put(k, posts(3), at_s(30));
  const auto hit = cache.get(k, at_s(80));
  REQUIRE(hit);
  CHECK((*hit)->size() == 3);
  CHECK(cache.size() == 1);

  cache.put(key_of("empty"), posts(0), at_s(0));
  const auto e = cache.get(key_of("empty"), at_s(1));
  REQUIRE(e);
  CHECK((*e)->empty());
}

TEST_CASE("eviction drops the oldest store") {
  ResultCache cache({seconds{60}, 3});
  cache.put(key_of("a"), posts(1), at_s(0));
  cache.put(key_of("b"), posts(1), at_s(1));
  cache.put(key_of("c"), posts(1), at_s(2));
  cache.put(key_of("a"), posts(1), at_s(3));  // refresh moves a to the back
  cache.put(key_of("d"), posts(1), at_s(4));
  CHECK(cache.size() == 3);
  CHECK_FALSE(cache.get(key_of("b"), at_s(5)));
  CHECK(cache.get(key_of("a"), at_s(5)));
  CHECK(cache.get(key_of("c"), at_s(5)));
  CHECK(cache.get(key_of("d"), at_s(5)));
  CHECK(cache.stats().evictions == 1);

  ResultCache none({seconds{60}, 0});
  none.put(key_of("a"), posts(1), at_s(0));
  CHECK(none.size() == 0);
  CHECK_FALSE(none.get(key_of("a"), at_s(0)));
}

TEST_CASE("randomized schedule against the model") {
  for (std::size_t capacity : {1u, 8u, 64u, 1024u}) {
    const auto r = testing::run_cache_schedule(10'000, capacity, std::chrono::milliseconds{60'000}, capacity);
    INFO("capacity ", capacity, ": ", r.first_problem);
    CHECK(r.operations == 10'000);
    CHECK(r.stale_served == 0);
    CHECK(r.model_mismatch == 0);
    CHECK(r.over_capacity == 0);
    CHECK(r.hits > 0);
    CHECK(r.max_size <= capacity);
  }
}

TEST_CASE("concurrent callers") {
  ResultCache cache({seconds{60}, 50});
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int i = 0; i < 2000; ++i) {
        const auto k = key_of("k" + std::to_string((i * 7 + t) % 120));
        if (i % 3 == 0)
          cache.put(k, posts(1), at_s(i / 100));
        else
          cache.get(k, at_s(i / 100));
      }
    });
  for (auto& th : threads) th.join();
  CHECK(cache.size() <= 50);
  const auto s = cache.stats();
  CHECK(s.hits + s.misses == 8 * 2000 - 8 * 667);
}

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <httplib.h>
#include <fmt/format.h>

#include <barrier>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "osn/analytics/analytics.hpp"
#include "osn/cache/result_cache.hpp"
#include "osn/eval/sentiment140.hpp"
#include "osn/gateway/http_server.hpp"
#include "osn/ingestion/synthetic_corpus.hpp"
#include "support/cache_schedule.hpp"
#include "support/csv_reader.hpp"
#include "support/engine_properties.hpp"
#include "support/gateway_harness.hpp"
#include "support/hostile_posts.hpp"

using namespace osn;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// ---------------------------------------------------------------------------

Outcome sentiment140_accuracy() {
  std::filesystem::path path = testing::data_dir() / "sentiment140" / "training.1600000.processed.noemoticon.csv";
  if (const char* env = std::getenv("OSN_SENTIMENT140")) path = env;
  if (!std::filesystem::exists(path))
    return {false, fmt::format("dataset not found at {} (set OSN_SENTIMENT140)", path.string())};

  const auto started = Clock::now();
  const auto data = eval::load_sentiment140(path, 2000, 42);
  const auto registry = testing::registry();
  const auto valence = eval::evaluate(registry->get(sentiment::kValenceRule), data.posts);
  const auto pattern = eval::evaluate(registry->get(sentiment::kPatternAverage), data.posts);
  const double took = seconds_since(started);

  const bool v_ok = std::abs(valence.accuracy - 72.29) <= 5.0;
  const bool p_ok = std::abs(pattern.accuracy - 65.06) <= 5.0;
  return {v_ok && p_ok && took < 10.0,
          fmt::format("valence-rule {:.2f} (72.29±5), pattern-average {:.2f} (65.06±5), {:.2f} s (<10)",
                      valence.accuracy, pattern.accuracy, took)};
}

Outcome oracle_equivalence() {
  std::string detail;
  bool ok = true;
  for (const auto& id : {sentiment::kValenceRule, sentiment::kPatternAverage}) {
    const auto r = testing::check_oracle_equivalence(id, 1000, 777);
    ok = ok && r.ok() && r.cases == 1000;
    detail += fmt::format("{} {}/{} ", id.str(), r.cases - r.failures, r.cases);
    if (!r.ok()) detail += "[" + r.first_failure + "] ";
  }
  return {ok, detail};
}

Outcome engine_invariants() {
  std::size_t total = 0;
  bool ok = true;
  std::string failed;
  for (const auto& r : testing::engine_invariants()) {
    total += r.cases;
    if (!r.ok()) {
      ok = false;
      failed += fmt::format(" {}: {}", r.name, r.first_failure);
    }
  }
  return {ok && total >= 10'000, fmt::format("{} cases (>=10000){}", total, failed)};
}

Outcome cache_ttl_and_capacity() {
  using std::chrono::milliseconds;
  cache::ResultCache cache;
  ingestion::RawQuery raw;
  raw.terms = {"#energy"};
  const auto key = cache::cache_key(ingestion::normalize_query(raw), sentiment::kValenceRule);
  auto at = [](std::int64_t ms) { return Instant{milliseconds{ms}}; };
  const std::int64_t t0 = 1'650'000'000'000;
  cache.put(key, std::make_shared<const std::vector<ClassifiedPost>>(), at(t0));
  const bool hit59 = cache.get(key, at(t0 + 59'000)).has_value();
  const bool miss60 = !cache.get(key, at(t0 + 60'000)).has_value();

  bool sched_ok = true;
  std::string sched;
  for (std::size_t capacity : {1u, 16u, 256u}) {
    const auto r = testing::run_cache_schedule(10'000, capacity, milliseconds{60'000}, 4242 + capacity);
    sched_ok = sched_ok && r.over_capacity == 0 && r.stale_served == 0 && r.model_mismatch == 0 &&
               r.operations == 10'000 && r.max_size <= capacity;
    sched += fmt::format(" cap {}: max {}", capacity, r.max_size);
    if (!r.first_problem.empty()) sched += " [" + r.first_problem + "]";
  }
  return {hit59 && miss60 && sched_ok,
          fmt::format("hit@59s {}, miss@60s {};{}", hit59, miss60, sched)};
}

Outcome concurrency() {
  testing::TempDir dir;
  ingestion::SyntheticCorpusOptions opts;
  opts.posts = 20'000;
  {
    std::ofstream out(dir / "corpus.jsonl");
    for (const auto& p : ingestion::make_synthetic_corpus(opts)) out << ingestion::corpus_line(p) << '\n';
  }
  testing::HarnessOptions ho;
  ho.corpus = dir / "corpus.jsonl";
  testing::GatewayHarness h(ho);
  gateway::HttpServer server(*h.gateway, 128);
  const int port = server.bind("127.0.0.1", 0);
  std::thread loop([&] { server.listen(); });
  server.wait_until_ready();

  constexpr int kClients = 100;
  std::vector<double> latency(kClients, -1);
  std::vector<std::string> problems(kClients);
  std::barrier start(kClients);
  std::vector<std::thread> clients;
  for (int i = 0; i < kClients; ++i)
    clients.emplace_back([&, i] {
      httplib::Client c("127.0.0.1", port);
      c.set_read_timeout(120, 0);
      // Distinct algorithm/window per client so each request does real work.
      const std::string path = fmt::format(
          "/api/v1/analysis/posts?q=energy&q=solar&q=wind&q=nuclear&q=battery%20storage&max_results=1000"
          "&from=2022-04-1{}T00:00:{:02d}Z&algorithm={}",
          4, i % 60, i % 2 ? "pattern-average" : "valence-rule");
      start.arrive_and_wait();
      const auto t = Clock::now();
      const auto res = c.Get(path, {{"Authorization", "Bearer " + h.creds.reader}});
      latency[i] = seconds_since(t);
      if (!res) {
        problems[i] = "transport error";
      } else if (res->status != 200) {
        problems[i] = fmt::format("status {}", res->status);
      } else {
        const auto n = json::parse(res->body)["posts"].size();
        if (n != 1000) problems[i] = fmt::format("{} posts", n);
      }
    });
  for (auto& t : clients) t.join();
  server.stop();
  loop.join();

  std::size_t ok = 0;
  std::string first;
  for (int i = 0; i < kClients; ++i) {
    if (problems[i].empty() && latency[i] <= 50.0) ++ok;
    else if (first.empty()) first = fmt::format(" first problem: client {} {} {:.2f}s", i, problems[i], latency[i]);
  }
  const double worst = *std::max_element(latency.begin(), latency.end());
  return {ok == kClients, fmt::format("{}/{} succeeded, max latency {:.3f} s (<=50){}", ok, kClients, worst, first)};
}

Outcome security_contract() {
  testing::TempDir dir;
  testing::GatewayHarness h;
  // Route audit through a file so the scan covers what actually lands on disk.
  auto file_sink = std::make_shared<gateway::FileAuditSink>(dir / "audit.log");
  auto audit = std::make_shared<gateway::AuditLog>(file_sink);
  gateway::Gateway gw(h.service, testing::harness_tokens(h.creds), audit);

  testing::Rng rng(31337);
  const std::vector<std::string> paths = {"/api/v1/health", "/api/v1/algorithms", "/api/v1/analysis/summary",
                                          "/api/v1/analysis/timeline", "/api/v1/analysis/tagcloud",
                                          "/api/v1/analysis/map", "/api/v1/analysis/posts",
                                          "/api/v1/analysis/export.csv", "/api/v1/admin/stats",
                                          "/api/v1/openapi.json", "/api/v1/nope"};
  const std::vector<std::optional<std::string>> creds = {
      std::nullopt, h.creds.reader, h.creds.exporter, h.creds.admin, h.creds.disabled,
      std::string("reader.") + "wrong-" + h.creds.secrets()[0], "admin." + h.creds.secrets()[1]};
  using Params = std::vector<std::pair<std::string, std::string>>;
  const std::vector<std::pair<Params, bool>> param_sets = {
      {{{"q", "#energy"}}, true},
      {{{"q", "solar"}, {"lang", "en"}}, true},
      {{{"q", "#energy"}, {"algorithm", "pattern-average"}}, true},
      {{}, false},
      {{{"q", "#energy"}, {"lang", "klingon"}}, false},
      {{{"q", "#energy"}, {"algorithm", "magic"}}, false},
      {{{"q", "#energy"}, {"secret", h.creds.secrets()[2]}}, false},
      {{{"q", "#energy"}, {"max_results", "-5"}}, false},
      {{{"q", "#energy"}, {"from", "yesterday"}}, false}};

  std::size_t requests = 0, invalid = 0, invalid_with_source = 0, scope_checks = 0, scope_wrong = 0;
  for (int i = 0; i < 1000; ++i) {
    gateway::ApiRequest req;
    req.path = rng.pick(paths);
    if (rng.chance(0.05)) req.method = "DELETE";
    const auto cred = creds[rng.below(creds.size())];
    if (cred) req.headers["authorization"] = (rng.chance(0.1) ? "Basic " : "Bearer ") + *cred;
    const auto& [params, valid] = param_sets[rng.below(param_sets.size())];
    for (const auto& [k, v] : params) req.params.emplace(k, v);
    h.clock.advance(std::chrono::seconds{1 + rng.below(90)});  // lets the cache expire now and then

    const auto opens_before = h.source->opens();
    const auto res = gw.handle(req);
    ++requests;
    const bool search = req.path.find("/analysis/") != std::string::npos;
    if (search && !valid && res.status != 401 && res.status != 403 && res.status != 405) {
      ++invalid;
      if (h.source->opens() != opens_before) ++invalid_with_source;
    }
  }

  // Scope-missing: authenticated but under-privileged callers.
  const std::vector<std::pair<std::string, std::string>> under = {
      {h.creds.reader, "/api/v1/analysis/export.csv"},
      {h.creds.reader, "/api/v1/admin/stats"},
      {h.creds.exporter, "/api/v1/admin/stats"}};
  for (const auto& [cred, path] : under) {
    gateway::ApiRequest req;
    req.path = path;
    req.params.emplace("q", "#energy");
    req.headers["authorization"] = "Bearer " + cred;
    ++scope_checks;
    ++requests;
    if (gw.handle(req).status != 403) ++scope_wrong;
  }

  std::ifstream in(dir / "audit.log");
  std::string log((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto lines = static_cast<std::size_t>(std::count(log.begin(), log.end(), '\n'));
  std::size_t leaks = 0;
  for (const auto& s : h.creds.secrets())
    if (log.find(s) != std::string::npos) ++leaks;

  const bool ok = lines == requests && audit->written() == requests && leaks == 0 && scope_wrong == 0 &&
                  invalid > 0 && invalid_with_source == 0;
  return {ok, fmt::format("{} requests / {} audit lines, {} secret leaks, {}/{} scope-missing got 403, "
                          "{} invalid searches with {} source opens",
                          requests, lines, leaks, scope_checks - scope_wrong, scope_checks, invalid,
                          invalid_with_source)};
}

Outcome csv_round_trip() {
  testing::Rng rng(500);
  std::vector<ClassifiedPost> posts;
  for (std::size_t i = 0; i < 500; ++i) posts.push_back(testing::hostile_post(rng, i));
  const auto rows = testing::parse_csv(analytics::to_csv(posts));
  if (!rows) return {false, "export did not parse as CSV"};
  if (rows->size() != posts.size() + 1) return {false, fmt::format("{} records for 500 posts", rows->size() - 1)};
  std::size_t good = 0;
  for (std::size_t i = 0; i < posts.size(); ++i) {
    const auto& r = (*rows)[i + 1];
    const auto& p = posts[i];
    if (r.size() == 9 && r[0] == p.post.id && r[5] == p.post.text &&
        r[8] == sentiment::to_string(p.score.label) && std::abs(std::stod(r[7]) - p.score.compound) <= 5e-5)
      ++good;
  }
  return {good == posts.size(), fmt::format("{}/{} posts recovered (id, text, label, compound ±5e-5)", good,
                                            posts.size())};
}

// Widget payloads for a fixed query set over a fixed synthetic corpus.
std::string widget_dump(const std::filesystem::path& corpus) {
  testing::HarnessOptions ho;
  ho.corpus = corpus;
  testing::GatewayHarness h(ho);
  std::string out;
  for (const char* algo : {"valence-rule", "pattern-average"})
    for (const char* w : {"summary", "timeline", "tagcloud", "map", "posts", "export.csv"}) {
      const auto r = h.get(std::string("/api/v1/analysis/") + w,
                           {{"q", "#energy"}, {"q", "solar"}, {"algorithm", algo}, {"max_results", "500"}},
                           h.creds.admin);
      out += fmt::format("{} {} {}\n{}\n", algo, w, r.status, r.body);
    }
  return out;
}

std::string run_child(const std::string& self, const std::filesystem::path& corpus) {
  const std::string cmd = fmt::format("'{}' --widget-dump '{}'", self, corpus.string());
  std::string out;
  if (FILE* p = popen(cmd.c_str(), "r")) {
    char buf[65536];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    if (pclose(p) != 0) return "<child failed>";
  }
  return out;
}

Outcome determinism(const std::string& self) {
  testing::TempDir dir;
  ingestion::SyntheticCorpusOptions opts;
  opts.posts = 3000;
  opts.seed = 7;
  {
    std::ofstream out(dir / "corpus.jsonl");
    for (const auto& p : ingestion::make_synthetic_corpus(opts)) out << ingestion::corpus_line(p) << '\n';
  }
  const auto a = run_child(self, dir / "corpus.jsonl");
  const auto b = run_child(self, dir / "corpus.jsonl");
  const auto local = widget_dump(dir / "corpus.jsonl");
  const bool ok = !a.empty() && a.find(" 200\n") != std::string::npos && a == b && a == local;
  return {ok, fmt::format("12 payloads, {} bytes; run A {} run B, in-process {}", a.size(), a == b ? "==" : "!=",
                          a == local ? "==" : "!=")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::string(argv[1]) == "--widget-dump") {
    fmt::print("{}", widget_dump(argv[2]));
    return 0;
  }
  const std::string self = std::filesystem::canonical("/proc/self/exe").string();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sentiment140-accuracy", sentiment140_accuracy},
      {"engine-oracle-equivalence", oracle_equivalence},
      {"engine-invariants", engine_invariants},
      {"cache-ttl-capacity", cache_ttl_and_capacity},
      {"concurrency-100x1000", concurrency},
      {"security-contract", security_contract},
      {"csv-round-trip", csv_round_trip},
      {"widget-determinism", [&] { return determinism(self); }},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto t = Clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    fmt::print("{} {} ({:.2f} s): {}\n", o.pass ? "PASS" : "FAIL", name, seconds_since(t), o.detail);
    std::fflush(stdout);
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

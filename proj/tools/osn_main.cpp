// Command-line front end: HTTP service, evaluation harness and small helpers.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "osn/analytics/analytics.hpp"
#include "osn/common/digest.hpp"
#include "osn/eval/sentiment140.hpp"
#include "osn/gateway/api.hpp"
#include "osn/gateway/http_server.hpp"
#include "osn/ingestion/source.hpp"
#include "osn/ingestion/synthetic_corpus.hpp"
#include "osn/sentiment/registry.hpp"

namespace {

osn::gateway::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

struct ServeOptions {
  int port = 8080;
  std::string bind = "127.0.0.1";
  std::vector<std::string> allow_cidrs;
  std::string offline_corpus;
  std::string upstream_url = "https://api.twitter.com";
  std::string upstream_token_env = "OSN_UPSTREAM_BEARER";
  std::string lexicon_dir = std::string(OSN_DEFAULT_DATA_DIR) + "/lexicons";
  std::string stopwords = std::string(OSN_DEFAULT_DATA_DIR) + "/stopwords_en.txt";
  int cache_ttl = 60;
  std::size_t cache_capacity = 1024;
  int max_results = 1000;
  int rate_capacity = 450;
  int rate_window = 900;
  std::string tokens_file;
  std::string audit_log = "audit.log";
  std::size_t threads = 0;
};

int serve(const ServeOptions& o) {
  using namespace osn;
  auto registry = std::make_shared<const sentiment::Registry>(sentiment::make_default_registry(o.lexicon_dir));

  std::shared_ptr<const ingestion::PostSource> source;
  if (!o.offline_corpus.empty()) {
    source = std::make_shared<ingestion::OfflineCorpusSource>(o.offline_corpus);
  } else {
    const char* bearer = std::getenv(o.upstream_token_env.c_str());
    if (!bearer || !*bearer) {
      std::cerr << "no offline corpus given and $" << o.upstream_token_env << " is not set\n";
      return 2;
    }
    ingestion::LiveUpstreamConfig cfg;
    cfg.base_url = o.upstream_url;
    cfg.bearer_token = bearer;
    auto limiter = std::make_shared<ingestion::RateLimiter>(o.rate_capacity, std::chrono::seconds{o.rate_window});
    source = std::make_shared<ingestion::LiveUpstreamSource>(std::move(cfg), std::move(limiter));
  }

  gateway::ServiceConfig cfg;
  cfg.limits.hard_limit = o.max_results;
  cfg.limits.default_results = std::min(cfg.limits.default_results, o.max_results);
  cfg.cache.ttl = std::chrono::seconds{o.cache_ttl};
  cfg.cache.capacity = o.cache_capacity;
  auto service = std::make_shared<gateway::AnalysisService>(registry, source, cfg,
                                                            analytics::load_stopwords(o.stopwords));
  auto audit = std::make_shared<gateway::AuditLog>(std::make_shared<gateway::FileAuditSink>(o.audit_log));
  gateway::Gateway gw(service, gateway::TokenStore::load(o.tokens_file), audit,
                      gateway::NetworkPolicy(o.allow_cidrs));

  gateway::HttpServer server(gw, o.threads);
  const int port = server.bind(o.bind, o.port);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << fmt::format("listening on http://{}:{}{}\n", o.bind, port, gateway::kDescriptionPath);
  server.listen();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social-network post sentiment analysis service"};
  app.require_subcommand(1);

  ServeOptions so;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", so.port, "Listen port (0 = ephemeral)");
  serve_cmd->add_option("--bind", so.bind, "Bind address");
  serve_cmd->add_option("--allow-cidr", so.allow_cidrs, "Accept requests only from these networks (repeatable)");
  serve_cmd->add_option("--offline-corpus", so.offline_corpus, "Replay posts from a JSON-lines corpus");
  serve_cmd->add_option("--upstream-url", so.upstream_url, "Base URL of the recent-search API");
  serve_cmd->add_option("--upstream-token-env", so.upstream_token_env, "Env var holding the upstream bearer token");
  serve_cmd->add_option("--lexicon-dir", so.lexicon_dir, "Lexicon directory");
  serve_cmd->add_option("--stopwords", so.stopwords, "Tag cloud stopword file");
  serve_cmd->add_option("--cache-ttl", so.cache_ttl, "Result cache TTL in seconds")->check(CLI::NonNegativeNumber);
  serve_cmd->add_option("--cache-capacity", so.cache_capacity, "Result cache entries");
  serve_cmd->add_option("--max-results", so.max_results, "Hard limit on posts per search")->check(CLI::PositiveNumber);
  serve_cmd->add_option("--rate-capacity", so.rate_capacity, "Upstream requests per window");
  serve_cmd->add_option("--rate-window", so.rate_window, "Upstream rate window in seconds")->check(CLI::PositiveNumber);
  serve_cmd->add_option("--tokens-file", so.tokens_file, "API token file")->required()->check(CLI::ExistingFile);
  serve_cmd->add_option("--audit-log", so.audit_log, "Audit log path (JSON lines)");
  serve_cmd->add_option("--threads", so.threads, "Worker threads (0 = auto)");

  std::string data_path, engine = "valence-rule", format = "both";
  std::string eval_lexicons = std::string(OSN_DEFAULT_DATA_DIR) + "/lexicons";
  std::size_t sample = 2000;
  std::uint64_t seed = 42;
  auto* eval_cmd = app.add_subcommand("eval", "Accuracy of an engine on Sentiment140-format data");
  eval_cmd->add_option("--data", data_path, "Sentiment140 CSV")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--engine", engine, "Engine id, or 'all'");
  eval_cmd->add_option("--sample", sample, "Stratified sample size (0 = whole file)");
  eval_cmd->add_option("--seed", seed, "Sampling seed");
  eval_cmd->add_option("--lexicon-dir", eval_lexicons, "Lexicon directory");
  eval_cmd->add_option("--format", format, "table, json or both")->check(CLI::IsMember({"table", "json", "both"}));

  std::string score_engine = "valence-rule", score_text;
  auto* score_cmd = app.add_subcommand("score", "Score one text");
  score_cmd->add_option("--engine", score_engine, "Engine id");
  score_cmd->add_option("--lexicon-dir", eval_lexicons, "Lexicon directory");
  score_cmd->add_option("text", score_text, "Text to score")->required();

  auto* algos_cmd = app.add_subcommand("algorithms", "List registered engines");
  algos_cmd->add_option("--lexicon-dir", eval_lexicons, "Lexicon directory");

  std::string token_id, token_secret;
  std::vector<std::string> token_scopes{"search"};
  auto* token_cmd = app.add_subcommand("hash-token", "Print a token file entry for a new API token");
  token_cmd->add_option("--id", token_id, "Token id")->required();
  token_cmd->add_option("--secret", token_secret, "Secret (generated when omitted)");
  token_cmd->add_option("--scope", token_scopes, "search, export or admin (repeatable)");

  std::string corpus_out;
  osn::ingestion::SyntheticCorpusOptions corpus_opts;
  auto* corpus_cmd = app.add_subcommand("gen-corpus", "Write a deterministic synthetic offline corpus");
  corpus_cmd->add_option("--out", corpus_out, "Output path")->required();
  corpus_cmd->add_option("--posts", corpus_opts.posts, "Number of posts");
  corpus_cmd->add_option("--seed", corpus_opts.seed, "Seed");

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace osn;
    if (*serve_cmd) return serve(so);

    if (*eval_cmd) {
      const auto registry = sentiment::make_default_registry(eval_lexicons);
      const auto started = std::chrono::steady_clock::now();
      const auto data = eval::load_sentiment140(data_path, sample ? std::optional(sample) : std::nullopt, seed);
      std::vector<eval::AccuracyReport> reports;
      for (const auto& a : registry.list())
        if (engine == "all" || engine == a.id.str()) reports.push_back(eval::evaluate(registry.get(a.id), data.posts));
      if (reports.empty()) throw sentiment::UnknownAlgorithm(sentiment::AlgorithmId(engine));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      if (format != "json") std::cout << eval::format_table(reports);
      if (format != "table") {
        nlohmann::json j = {{"rows_read", data.rows}, {"skipped", data.skipped}, {"sample", data.posts.size()},
                            {"seed", seed}, {"seconds", secs}, {"reports", nlohmann::json::array()}};
        for (const auto& r : reports) j["reports"].push_back(eval::to_json(r));
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*score_cmd || *algos_cmd) {
      const auto registry = sentiment::make_default_registry(eval_lexicons);
      if (*algos_cmd) {
        for (const auto& a : registry.list()) std::cout << a.id.str() << "\t" << a.description << "\n";
        return 0;
      }
      const auto s = registry.get(sentiment::AlgorithmId(score_engine)).score(score_text);
      std::cout << fmt::format("{:.4f}\t{}\n", s.compound, sentiment::to_string(s.label));
      return 0;
    }

    if (*token_cmd) {
      std::set<gateway::Scope> scopes;
      for (const auto& s : token_scopes) {
        auto scope = gateway::parse_scope(s);
        if (!scope) throw std::invalid_argument("unknown scope " + s);
        scopes.insert(*scope);
      }
      const std::string secret = token_secret.empty() ? random_hex(24) : token_secret;
      gateway::TokenStore store;
      store.add(gateway::make_token_record(token_id, secret, scopes));
      std::cout << store.to_json()["tokens"][0].dump(2) << "\n";
      std::cerr << "bearer credential: " << token_id << "." << secret << "\n";
      return 0;
    }

    if (*corpus_cmd) {
      std::ofstream out(corpus_out);
      if (!out) throw std::runtime_error("cannot write " + corpus_out);
      for (const auto& p : ingestion::make_synthetic_corpus(corpus_opts)) out << ingestion::corpus_line(p) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

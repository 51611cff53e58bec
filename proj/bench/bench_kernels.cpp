// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <map>

#include "osn/eval/sentiment140.hpp"
#include "osn/ingestion/synthetic_corpus.hpp"
#include "osn/sentiment/batch.hpp"

namespace {

const osn::sentiment::Registry& registry() {
  static const auto r = osn::sentiment::make_default_registry(std::filesystem::path(OSN_BENCH_DATA_DIR) / "lexicons");
  return r;
}

const std::vector<osn::Post>& corpus(std::size_t n) {
  static std::map<std::size_t, std::vector<osn::Post>> cache;
  auto& v = cache[n];
  if (v.empty()) {
    osn::ingestion::SyntheticCorpusOptions o;
    o.posts = n;
    v = osn::ingestion::make_synthetic_corpus(o);
  }
  return v;
}

std::vector<osn::eval::LabeledPost> labelled(std::size_t n) {
  std::vector<osn::eval::LabeledPost> out;
  for (const auto& p : corpus(n))
    out.push_back({p.text, p.id.back() % 2 ? osn::eval::BinaryLabel::positive : osn::eval::BinaryLabel::negative});
  return out;
}

const osn::sentiment::Analyzer& engine(std::int64_t i) {
  return registry().get(i == 0 ? osn::sentiment::kValenceRule : osn::sentiment::kPatternAverage);
}

template <auto Kernel>
void BM_analyze(benchmark::State& state) {
  const auto& a = engine(state.range(0));
  const auto& posts = corpus(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, posts));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(a.id().str());
}

template <auto Kernel>
void BM_evaluate(benchmark::State& state) {
  const auto& a = engine(state.range(0));
  const auto data = labelled(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, data));
  state.SetItemsProcessed(state.iterations() * state.range(1));
  state.SetLabel(a.id().str());
}

// Pin the overload set to the Analyzer form.
std::vector<osn::ClassifiedPost> batch_parallel(const osn::sentiment::Analyzer& a, std::span<const osn::Post> p) {
  return osn::sentiment::analyze_batch(a, p);
}

}  // namespace

#define OSN_ARGS ->ArgsProduct({{0, 1}, {1000, 20000}})->Unit(benchmark::kMillisecond)->UseRealTime()

BENCHMARK(BM_analyze<osn::sentiment::analyze_batch_serial>)->Name("analyze_batch/serial") OSN_ARGS;
BENCHMARK(BM_analyze<batch_parallel>)->Name("analyze_batch/openmp") OSN_ARGS;
BENCHMARK(BM_evaluate<osn::eval::evaluate_serial>)->Name("evaluate/serial") OSN_ARGS;
BENCHMARK(BM_evaluate<osn::eval::evaluate>)->Name("evaluate/openmp") OSN_ARGS;

BENCHMARK_MAIN();

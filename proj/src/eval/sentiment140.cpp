#include "osn/eval/sentiment140.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "osn/common/text.hpp"

namespace osn::eval {

std::string_view to_string(BinaryLabel l) { return l == BinaryLabel::positive ? "positive" : "negative"; }

std::optional<std::vector<std::string>> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  std::size_t i = 0;
  while (true) {
    cur.clear();
    if (i < line.size() && line[i] == '"') {
      ++i;
      while (true) {
        if (i >= line.size()) return std::nullopt;
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cur.push_back('"');
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        cur.push_back(line[i++]);
      }
      if (i < line.size() && line[i] != ',') return std::nullopt;
    } else {
      while (i < line.size() && line[i] != ',') {
        if (line[i] == '"') return std::nullopt;
        cur.push_back(line[i++]);
      }
    }
    fields.push_back(cur);
    if (i >= line.size()) break;
    ++i;  // comma
  }
  return fields;
}

template <class T>
void deterministic_shuffle(std::vector<T>& items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    std::swap(items[i - 1], items[r % bound]);
  }
}

template void deterministic_shuffle<LabeledPost>(std::vector<LabeledPost>&, std::uint64_t);
template void deterministic_shuffle<int>(std::vector<int>&, std::uint64_t);

Dataset load_sentiment140(std::istream& in, std::optional<std::size_t> sample_n, std::uint64_t seed) {
  Dataset data;
  std::vector<LabeledPost> neg, pos;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    ++data.rows;
    if (!text::is_valid_utf8(line)) line = text::latin1_to_utf8(line);
    auto fields = split_csv_record(line);
    if (!fields || fields->size() != 6)
      throw DatasetError(data.rows, fmt::format("row {}: expected 6 CSV fields", data.rows));
    const auto polarity = text::trim((*fields)[0]);
    if (polarity == "0") {
      neg.push_back({std::move((*fields)[5]), BinaryLabel::negative});
    } else if (polarity == "4") {
      pos.push_back({std::move((*fields)[5]), BinaryLabel::positive});
    } else {
      ++data.skipped;
    }
  }

  if (sample_n) {
    const std::size_t want_neg = *sample_n / 2;
    const std::size_t want_pos = *sample_n - want_neg;
    if (neg.size() < want_neg || pos.size() < want_pos)
      throw std::invalid_argument(fmt::format("sample of {} needs {} negative and {} positive rows; file has {}/{}",
                                              *sample_n, want_neg, want_pos, neg.size(), pos.size()));
    deterministic_shuffle(neg, seed);
    deterministic_shuffle(pos, seed ^ 0x9E3779B97F4A7C15ULL);
    neg.resize(want_neg);
    pos.resize(want_pos);
  }
  data.posts = std::move(neg);
  data.posts.insert(data.posts.end(), std::make_move_iterator(pos.begin()), std::make_move_iterator(pos.end()));
  return data;
}

Dataset load_sentiment140(const std::filesystem::path& path, std::optional<std::size_t> sample_n,
                          std::uint64_t seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset " + path.string());
  return load_sentiment140(in, sample_n, seed);
}

BinaryLabel binary_prediction(double compound) {
  return compound >= 0.0 ? BinaryLabel::positive : BinaryLabel::negative;
}

namespace {

AccuracyReport assemble(const sentiment::Analyzer& analyzer, std::span<const LabeledPost> data,
                        const std::vector<BinaryLabel>& predicted) {
  AccuracyReport r;
  r.engine = analyzer.id().str();
  r.total = data.size();
  for (std::size_t i = 0; i < data.size(); ++i) {
    const bool gold_pos = data[i].gold == BinaryLabel::positive;
    const bool pred_pos = predicted[i] == BinaryLabel::positive;
    if (gold_pos && pred_pos) ++r.true_positive;
    else if (gold_pos) ++r.false_negative;
    else if (pred_pos) ++r.false_positive;
    else ++r.true_negative;
  }
  r.correct = r.true_positive + r.true_negative;
  r.accuracy = std::round(10000.0 * static_cast<double>(r.correct) / static_cast<double>(r.total)) / 100.0;
  return r;
}

}  // namespace

AccuracyReport evaluate_serial(const sentiment::Analyzer& analyzer, std::span<const LabeledPost> data) {
  if (data.empty()) throw std::invalid_argument("evaluation data is empty");
  std::vector<BinaryLabel> predicted(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    predicted[i] = binary_prediction(analyzer.score(data[i].text).compound);
  return assemble(analyzer, data, predicted);
}

AccuracyReport evaluate(const sentiment::Analyzer& analyzer, std::span<const LabeledPost> data) {
  if (data.empty()) throw std::invalid_argument("evaluation data is empty");
  const auto n = static_cast<std::ptrdiff_t>(data.size());
  std::vector<BinaryLabel> predicted(data.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) predicted[i] = binary_prediction(analyzer.score(data[i].text).compound);
  return assemble(analyzer, data, predicted);
}

nlohmann::json to_json(const AccuracyReport& r, std::string_view dataset) {
  return {{"engine", r.engine},
          {"dataset", dataset},
          {"total", r.total},
          {"correct", r.correct},
          {"accuracy", r.accuracy},
          {"confusion",
           {{"true_positive", r.true_positive},
            {"false_negative", r.false_negative},
            {"false_positive", r.false_positive},
            {"true_negative", r.true_negative}}}};
}

std::string format_table(std::span<const AccuracyReport> reports, std::string_view dataset) {
  std::size_t name_w = 4;
  for (const auto& r : reports) name_w = std::max(name_w, r.engine.size());
  const std::size_t data_w = std::max<std::size_t>(7, dataset.size());
  std::string out = fmt::format("{:<8} | {:<{}} | {:<{}} | {:>8}\n", "Model", "Name", name_w, "Dataset", data_w,
                                "Accuracy");
  out += fmt::format("{:-<8}-+-{:-<{}}-+-{:-<{}}-+-{:->8}\n", "", "", name_w, "", data_w, "");
  for (const auto& r : reports)
    out += fmt::format("{:<8} | {:<{}} | {:<{}} | {:>8.2f}\n", "Lexicon", r.engine, name_w, dataset, data_w,
                       r.accuracy);
  return out;
}

}  // namespace osn::eval

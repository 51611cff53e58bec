#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "osn/sentiment/registry.hpp"

namespace osn::eval {

enum class BinaryLabel { negative, positive };

std::string_view to_string(BinaryLabel l);

struct LabeledPost {
  std::string text;
  BinaryLabel gold = BinaryLabel::negative;
};

struct Dataset {
  std::vector<LabeledPost> posts;
  std::size_t rows = 0;     // data rows read
  std::size_t skipped = 0;  // rows whose polarity was neither 0 nor 4
};

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t row, const std::string& what) : std::runtime_error(what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Splits one RFC-4180 record; quoted fields may not span lines here.
/// Returns nullopt for a malformed record.
std::optional<std::vector<std::string>> split_csv_record(std::string_view line);

/// Reads a 6-column Sentiment140 CSV (polarity,id,date,query,user,text).
/// Latin-1 rows are re-encoded as UTF-8. With sample_n, draws a stratified
/// sample: sample_n/2 negatives and the rest positives, each class shuffled
/// with a seeded Fisher-Yates pass.
Dataset load_sentiment140(std::istream& in, std::optional<std::size_t> sample_n = std::nullopt,
                          std::uint64_t seed = 42);
Dataset load_sentiment140(const std::filesystem::path& path, std::optional<std::size_t> sample_n = std::nullopt,
                          std::uint64_t seed = 42);

/// Seeded shuffle with a fixed algorithm (mt19937_64, rejection-sampled
/// bounded draws), identical on every platform.
template <class T>
void deterministic_shuffle(std::vector<T>& items, std::uint64_t seed);

struct AccuracyReport {
  std::string engine;
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;  // percent, rounded to two decimals
  std::size_t true_positive = 0;
  std::size_t false_negative = 0;
  std::size_t false_positive = 0;
  std::size_t true_negative = 0;

  bool operator==(const AccuracyReport&) const = default;
};

/// Binary collapse: compound >= 0 predicts positive.
BinaryLabel binary_prediction(double compound);

/// Throws std::invalid_argument on empty data.
AccuracyReport evaluate(const sentiment::Analyzer& analyzer, std::span<const LabeledPost> data);
/// Single-threaded reference for evaluate.
AccuracyReport evaluate_serial(const sentiment::Analyzer& analyzer, std::span<const LabeledPost> data);

nlohmann::json to_json(const AccuracyReport& r, std::string_view dataset = "Sentiment140");

/// Model | Name | Dataset | Accuracy, one row per report.
std::string format_table(std::span<const AccuracyReport> reports, std::string_view dataset = "Sentiment140");

}  // namespace osn::eval

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace osn::sentiment {

enum class Polarity { positive, negative, neutral };

std::string_view to_string(Polarity p);
/// Throws std::invalid_argument for anything but "positive", "negative", "neutral".
Polarity parse_polarity(std::string_view s);

/// Name of a registered engine, e.g. "valence-rule".
class AlgorithmId {
 public:
  AlgorithmId() = default;
  explicit AlgorithmId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  auto operator<=>(const AlgorithmId&) const = default;

 private:
  std::string value_;
};

inline const AlgorithmId kValenceRule{"valence-rule"};
inline const AlgorithmId kPatternAverage{"pattern-average"};

/// Dead band around zero separating neutral from polar scores.
struct Thresholds {
  double positive = 0.05;
  double negative = -0.05;
};

struct SentimentScore {
  double compound = 0.0;  // [-1, 1]
  Polarity label = Polarity::neutral;
  AlgorithmId algorithm;
  bool truncated = false;  // input exceeded kMaxTextLength and was cut

  bool operator==(const SentimentScore&) const = default;
};

/// compound >= positive -> positive; compound <= negative -> negative; else neutral.
/// Throws std::invalid_argument when negative > positive.
Polarity classify(double compound, double positive_threshold, double negative_threshold);
inline Polarity classify(double compound, const Thresholds& t = {}) {
  return classify(compound, t.positive, t.negative);
}

}  // namespace osn::sentiment

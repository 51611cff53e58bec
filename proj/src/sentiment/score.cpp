#include "osn/sentiment/score.hpp"

#include <stdexcept>
#include <string>

namespace osn::sentiment {

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::positive: return "positive";
    case Polarity::negative: return "negative";
    case Polarity::neutral: return "neutral";
  }
  return "neutral";
}

Polarity parse_polarity(std::string_view s) {
  if (s == "positive") return Polarity::positive;
  if (s == "negative") return Polarity::negative;
  if (s == "neutral") return Polarity::neutral;
  throw std::invalid_argument("not a polarity label: " + std::string(s));
}

Polarity classify(double compound, double positive_threshold, double negative_threshold) {
  if (negative_threshold > positive_threshold)
    throw std::invalid_argument("negative threshold exceeds positive threshold");
  if (compound >= positive_threshold) return Polarity::positive;
  if (compound <= negative_threshold) return Polarity::negative;
  return Polarity::neutral;
}

}  // namespace osn::sentiment

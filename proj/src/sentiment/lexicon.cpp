#include "osn/sentiment/lexicon.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <fstream>

#include "osn/common/text.hpp"

namespace osn::sentiment {

namespace {

// Calls fn(line_number, line) for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line.front() == '#') continue;
    fn(number, std::string_view(line));
  }
}

struct Pair {
  std::string token;
  double value;
};

Pair parse_pair(std::size_t number, std::string_view line) {
  const auto tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos)
    throw LexiconError(LexiconError::Kind::parse, number,
                       fmt::format("line {}: expected token<TAB>value", number));
  const auto token = text::trim(line.substr(0, tab));
  const auto field = text::trim(line.substr(tab + 1));
  if (token.empty())
    throw LexiconError(LexiconError::Kind::parse, number, fmt::format("line {}: empty token", number));
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty() || !std::isfinite(value))
    throw LexiconError(LexiconError::Kind::parse, number,
                       fmt::format("line {}: '{}' is not a number", number, field));
  return {text::to_lower_ascii(token), value};
}

void check_range(std::size_t number, double value, ValenceRange range) {
  if (value < range.min || value > range.max)
    throw LexiconError(LexiconError::Kind::range, number,
                       fmt::format("line {}: {} outside [{}, {}]", number, value, range.min, range.max));
}

std::ifstream open(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open lexicon file " + p.string());
  return in;
}

}  // namespace

ValenceRange valence_range(const AlgorithmId& kind) {
  if (kind == kValenceRule) return {-4.0, 4.0};
  if (kind == kPatternAverage) return {-1.0, 1.0};
  throw UnknownAlgorithm(kind);
}

Lexicon load_lexicon(std::istream& in, const AlgorithmId& kind) {
  const ValenceRange range = valence_range(kind);
  Lexicon lex;
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    auto [token, value] = parse_pair(number, line);
    check_range(number, value, range);
    lex.entries.insert_or_assign(std::move(token), value);
  });
  return lex;
}

void load_boosters(std::istream& in, Lexicon& lexicon) {
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    auto [token, value] = parse_pair(number, line);
    check_range(number, value, {-1.0, 1.0});
    lexicon.boosters.insert_or_assign(std::move(token), value);
  });
}

void load_negators(std::istream& in, Lexicon& lexicon) {
  for_each_record(in, [&](std::size_t number, std::string_view line) {
    const auto token = text::trim(line);
    if (token.find('\t') != std::string_view::npos || token.find(' ') != std::string_view::npos)
      throw LexiconError(LexiconError::Kind::parse, number,
                         fmt::format("line {}: negator must be a single token", number));
    lexicon.negators.insert(text::to_lower_ascii(token));
  });
}

Lexicon load_lexicon_dir(const std::filesystem::path& dir, const AlgorithmId& kind) {
  valence_range(kind);  // rejects unknown kinds before touching the filesystem
  const auto base = dir / kind.str();
  const auto main_file = kind == kPatternAverage ? base / "polarity.tsv" : base / "valence.tsv";
  auto in = open(main_file);
  Lexicon lex = load_lexicon(in, kind);
  if (const auto p = base / "boosters.tsv"; std::filesystem::exists(p)) {
    auto b = open(p);
    load_boosters(b, lex);
  }
  if (const auto p = base / "negators.txt"; std::filesystem::exists(p)) {
    auto n = open(p);
    load_negators(n, lex);
  }
  return lex;
}

}  // namespace osn::sentiment

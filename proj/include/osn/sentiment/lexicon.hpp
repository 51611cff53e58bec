#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "osn/sentiment/score.hpp"

namespace osn::sentiment {

struct TransparentHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept { return std::hash<std::string_view>{}(s); }
};

/// Token valences plus the modifier word lists an engine consults.
/// Keys are lowercase. Immutable once loaded; share it freely between threads.
struct Lexicon {
  template <class V>
  using Map = std::unordered_map<std::string, V, TransparentHash, std::equal_to<>>;

  Map<double> entries;
  Map<double> boosters;
  std::unordered_set<std::string, TransparentHash, std::equal_to<>> negators;

  std::optional<double> valence(std::string_view lower) const {
    auto it = entries.find(lower);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  }
  std::optional<double> booster(std::string_view lower) const {
    auto it = boosters.find(lower);
    if (it == boosters.end()) return std::nullopt;
    return it->second;
  }
  bool is_negator(std::string_view lower) const { return negators.find(lower) != negators.end(); }
};

class LexiconError : public std::runtime_error {
 public:
  enum class Kind { parse, range };

  LexiconError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }  // 1-based

 private:
  Kind kind_;
  std::size_t line_;
};

class UnknownAlgorithm : public std::invalid_argument {
 public:
  explicit UnknownAlgorithm(const AlgorithmId& id)
      : std::invalid_argument("unknown algorithm: " + id.str()), id_(id) {}
  const AlgorithmId& id() const { return id_; }

 private:
  AlgorithmId id_;
};

/// Inclusive valence range accepted for an engine's lexicon.
struct ValenceRange {
  double min;
  double max;
};
ValenceRange valence_range(const AlgorithmId& kind);

/// Reads `token<TAB>valence` lines. Blank lines and lines starting with '#'
/// are skipped; duplicate tokens keep the last value.
Lexicon load_lexicon(std::istream& in, const AlgorithmId& kind);

/// `token<TAB>increment` lines, increments in [-1, 1].
void load_boosters(std::istream& in, Lexicon& lexicon);

/// One token per line.
void load_negators(std::istream& in, Lexicon& lexicon);

/// Loads `<dir>/<kind>/`: valence.tsv or polarity.tsv, plus optional
/// boosters.tsv and negators.txt.
Lexicon load_lexicon_dir(const std::filesystem::path& dir, const AlgorithmId& kind);

}  // namespace osn::sentiment

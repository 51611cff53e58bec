#pragma once

// Generators and property checks for the sentiment engines. Shared by the
// unit suite and the acceptance gate so both exercise the same cases.

#include <fmt/format.h>

#include <cmath>
#include <string>
#include <vector>

#include "oracle/brute_force_scorer.hpp"
#include "osn/sentiment/engines.hpp"
#include "support/test_support.hpp"

namespace testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

inline bool alphabetic(const std::string& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

/// Vocabulary a generator draws from, built once per lexicon.
struct Vocabulary {
  std::vector<std::string> entries;  // scoring lexicon words
  std::vector<std::string> boosters;
  std::vector<std::string> negators;
  std::vector<std::string> alpha_entries;  // entries made of a-z only, not modifiers

  explicit Vocabulary(const osn::sentiment::Lexicon& lex)
      : entries(sorted_keys(lex.entries)), boosters(sorted_keys(lex.boosters)), negators(sorted_keys(lex.negators)) {
    for (const auto& e : entries)
      if (alphabetic(e) && e != "but" && !lex.boosters.count(e) && !lex.negators.count(e)) alpha_entries.push_back(e);
    if (boosters.empty()) boosters.push_back("very");
  }
};

/// True when the engine would draw a valence from `w` on its own.
inline bool scoring_word(const osn::sentiment::AlgorithmId& engine, const osn::sentiment::Lexicon& lex,
                         const std::string& w) {
  if (!lex.entries.count(w) || lex.negators.count(w)) return false;
  return engine != osn::sentiment::kValenceRule || !lex.boosters.count(w);
}

inline std::vector<std::string> non_scoring(const osn::sentiment::AlgorithmId& engine,
                                            const osn::sentiment::Lexicon& lex, const std::vector<std::string>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws)
    if (!scoring_word(engine, lex, w)) out.push_back(w);
  if (out.empty()) out.push_back("zzz");
  return out;
}

inline std::string upper(std::string s) {
  for (char& c : s)
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  return s;
}

inline std::string decorate(Rng& rng, std::string w) {
  const auto r = rng.below(100);
  if (r < 15) w = upper(w);
  else if (r < 25 && !w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 'a' + 'A');
  static const std::vector<std::string> tails = {",", ".", "!", "?", "!!", "...", ";", "\""};
  const auto t = rng.below(100);
  if (t < 12) w += rng.pick(tails);
  else if (t < 17) w = "(" + w + ")";
  else if (t < 20) w = "\"" + w + "\"";
  return w;
}

/// Random token sequence of length <= max_len mixing lexicon hits, modifiers,
/// "but", fillers, hashtags, emoticons and exclamation runs.
inline std::string random_sequence(Rng& rng, const Vocabulary& v, std::size_t max_len = 12) {
  static const std::vector<std::string> fillers = {"the", "zqv", "blorf", "x", "rt", "@user", "http://t.co/x1",
                                                   "123", "and", "of", "it", "wind", "solar"};
  static const std::vector<std::string> emoticons = {":)", ":(", ":-)", ":D", "<3", ":/", ";)", ":'("};
  static const std::vector<std::string> contractions = {"don't", "isn't", "wasn't", "can't", "doesn't"};
  const std::size_t len = rng.below(max_len + 1);
  std::string out;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out += rng.chance(0.1) ? "  " : (rng.chance(0.05) ? "\t" : " ");
    const auto r = rng.below(100);
    if (r < 40) out += decorate(rng, rng.pick(v.entries));
    else if (r < 54) out += decorate(rng, rng.pick(v.boosters));
    else if (r < 66) out += decorate(rng, rng.pick(v.negators));
    else if (r < 71) out += rng.chance(0.5) ? "but" : "BUT";
    else if (r < 81) out += rng.pick(fillers);
    else if (r < 86) out += "#" + rng.pick(v.alpha_entries.empty() ? v.entries : v.alpha_entries);
    else if (r < 91) out += rng.pick(emoticons);
    else if (r < 95) out += std::string(1 + rng.below(5), '!');
    else out += rng.pick(contractions);
  }
  return out;
}

inline double oracle_score(const osn::sentiment::AlgorithmId& engine, const osn::sentiment::Lexicon& lex,
                           const std::string& text) {
  return engine == osn::sentiment::kValenceRule ? oracle::valence_rule(lex, text)
                                                : oracle::pattern_average(lex, text);
}

inline PropertyResult check_oracle_equivalence(const osn::sentiment::AlgorithmId& engine, std::size_t n,
                                               std::uint64_t seed) {
  PropertyResult r{"oracle equivalence (" + engine.str() + ")"};
  const auto& lex = lexicon(engine);
  const Vocabulary vocab(lex);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto text = random_sequence(rng, vocab);
    const double got = osn::sentiment::score_text(engine, lex, text).compound;
    const double want = oracle_score(engine, lex, text);
    ++r.cases;
    if (got != want) r.fail(fmt::format("'{}': engine {:.17g} oracle {:.17g}", text, got, want));
  }
  return r;
}

inline PropertyResult check_range(const osn::sentiment::AlgorithmId& engine, std::size_t n, std::uint64_t seed) {
  PropertyResult r{"range bound (" + engine.str() + ")"};
  const auto& lex = lexicon(engine);
  const Vocabulary vocab(lex);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text = random_sequence(rng, vocab, 60);
    if (i % 10 == 0) {
      // Saturating inputs: long runs of one strong word.
      const auto& w = rng.pick(vocab.entries);
      text.clear();
      for (std::size_t k = 0, m = 1 + rng.below(200); k < m; ++k) text += upper(w) + "!!! ";
    }
    const auto s = osn::sentiment::score_text(engine, lex, text);
    ++r.cases;
    if (!(s.compound >= -1.0 && s.compound <= 1.0) || s.label != osn::sentiment::classify(s.compound))
      r.fail(fmt::format("'{}' -> {}", text.substr(0, 80), s.compound));
  }
  return r;
}

/// Every matched word is swapped for a twin entry of opposite valence.
inline PropertyResult check_sign_symmetry(const osn::sentiment::AlgorithmId& engine, std::size_t n,
                                          std::uint64_t seed) {
  PropertyResult r{"sign symmetry (" + engine.str() + ")"};
  osn::sentiment::Lexicon lex = lexicon(engine);
  const Vocabulary vocab(lex);
  for (const auto& w : vocab.alpha_entries) lex.entries["anti-" + w] = -lex.entries.at(w);
  const auto boosters = non_scoring(engine, lex, vocab.boosters);
  static const std::vector<std::string> fillers = {"the", "zqv", "wind", "and", "@user"};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text, twin;
    for (std::size_t k = 0, len = 1 + rng.below(12); k < len; ++k) {
      std::string a, b;
      const auto c = rng.below(100);
      if (c < 45) {
        a = rng.pick(vocab.alpha_entries);
        b = "anti-" + a;
        if (rng.chance(0.15)) {
          a = upper(a);
          b = upper(b);
        }
      } else if (c < 60) {
        a = b = rng.pick(boosters);
      } else if (c < 72) {
        a = b = rng.pick(vocab.negators);
      } else if (c < 78) {
        a = b = "but";
      } else if (c < 88) {
        a = b = rng.pick(fillers);
      } else {
        a = b = std::string(1 + rng.below(3), '!');
      }
      if (k) {
        text += ' ';
        twin += ' ';
      }
      text += a;
      twin += b;
    }
    const double x = osn::sentiment::score_text(engine, lex, text).compound;
    const double y = osn::sentiment::score_text(engine, lex, twin).compound;
    ++r.cases;
    if (y != -x) r.fail(fmt::format("'{}' -> {:.17g}, twin -> {:.17g}", text, x, y));
  }
  return r;
}

inline PropertyResult check_booster_monotonicity() {
  const auto engine = osn::sentiment::kValenceRule;
  PropertyResult r{"booster monotonicity (" + engine.str() + ")"};
  const auto& lex = lexicon(engine);
  std::vector<std::string> positive_boosters;
  for (const auto& b : sorted_keys(lex.boosters))
    if (lex.boosters.at(b) > 0 && b.find(' ') == std::string::npos) positive_boosters.push_back(b);
  std::size_t next = 0;
  for (const auto& w : sorted_keys(lex.entries)) {
    if (lex.entries.at(w) <= 0) continue;
    const auto& b = positive_boosters[next++ % positive_boosters.size()];
    const double plain = osn::sentiment::score_text(engine, lex, w).compound;
    const double boosted = osn::sentiment::score_text(engine, lex, b + " " + w).compound;
    ++r.cases;
    if (boosted < plain) r.fail(fmt::format("'{}' {} < '{}' {}", b + " " + w, boosted, w, plain));
  }
  return r;
}

inline PropertyResult check_negation_flip(const osn::sentiment::AlgorithmId& engine) {
  PropertyResult r{"negation flip (" + engine.str() + ")"};
  const auto& lex = lexicon(engine);
  for (const auto& w : sorted_keys(lex.entries)) {
    const double plain = osn::sentiment::score_text(engine, lex, w).compound;
    if (plain == 0.0) continue;  // not a single-token hit once tokenized
    const double negated = osn::sentiment::score_text(engine, lex, "not " + w).compound;
    ++r.cases;
    if (!((plain > 0 && negated < 0) || (plain < 0 && negated > 0)))
      r.fail(fmt::format("'{}' {} vs 'not {}' {}", w, plain, w, negated));
  }
  return r;
}

inline PropertyResult check_neutral_identity(const osn::sentiment::AlgorithmId& engine, std::size_t n,
                                             std::uint64_t seed) {
  PropertyResult r{"neutral identity (" + engine.str() + ")"};
  const auto& lex = lexicon(engine);
  const Vocabulary vocab(lex);
  const auto boosters = non_scoring(engine, lex, vocab.boosters);
  static const std::string letters = "bcdfghjklmnpqrstvwxz";
  static const std::vector<std::string> marks = {"!!!", "...", "?", "http://x.co/a", "@bob", "1234"};
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    for (std::size_t k = 0, len = rng.below(15); k < len; ++k) {
      if (k) text += ' ';
      const auto c = rng.below(100);
      if (c < 15) {
        text += rng.pick(boosters);
      } else if (c < 25) {
        text += rng.pick(vocab.negators);
      } else if (c < 35) {
        text += rng.pick(marks);
      } else {
        std::string w;
        do {
          w.clear();
          for (std::size_t j = 0, m = 3 + rng.below(6); j < m; ++j) w += letters[rng.below(letters.size())];
        } while (lex.entries.count(w));
        text += rng.chance(0.2) ? upper(w) : w;
      }
    }
    const auto s = osn::sentiment::score_text(engine, lex, text);
    ++r.cases;
    if (s.compound != 0.0 || s.label != osn::sentiment::Polarity::neutral)
      r.fail(fmt::format("'{}' -> {}", text, s.compound));
  }
  return r;
}

inline PropertyResult check_determinism(const osn::sentiment::AlgorithmId& engine, std::size_t n,
                                        std::uint64_t seed) {
  PropertyResult r{"determinism (" + engine.str() + ")"};
  const auto& lex = lexicon(engine);
  const Vocabulary vocab(lex);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const auto text = random_sequence(rng, vocab, 30);
    ++r.cases;
    if (!(osn::sentiment::score_text(engine, lex, text) == osn::sentiment::score_text(engine, lex, text)))
      r.fail(text);
  }
  return r;
}

/// The full invariant suite, in a fixed order.
inline std::vector<PropertyResult> engine_invariants(std::uint64_t seed = 20240611) {
  using osn::sentiment::kPatternAverage;
  using osn::sentiment::kValenceRule;
  return {
      check_range(kValenceRule, 2000, seed + 1),
      check_range(kPatternAverage, 2000, seed + 2),
      check_sign_symmetry(kValenceRule, 1500, seed + 3),
      check_sign_symmetry(kPatternAverage, 500, seed + 4),
      check_negation_flip(kValenceRule),
      check_negation_flip(kPatternAverage),
      check_booster_monotonicity(),
      check_neutral_identity(kValenceRule, 1500, seed + 5),
      check_neutral_identity(kPatternAverage, 1500, seed + 6),
  };
}

}  // namespace testing

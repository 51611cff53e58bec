#pragma once

// Reference scorers written straight from the rule list, sharing no code with
// the engines beyond the Lexicon container. One pass over the tokens, every
// rule spelled out inline.

#include <cmath>
#include <string>
#include <vector>

#include "osn/sentiment/lexicon.hpp"

namespace oracle {

inline bool space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

inline bool punct(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u > 32 && u < 127 && !((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'));
}

inline std::string lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}

inline std::vector<std::string> words(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (space(c)) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string strip(const std::string& w, bool keep_hash) {
  std::size_t b = 0, e = w.size();
  while (b < e && punct(w[b]) && !(keep_hash && w[b] == '#')) ++b;
  while (e > b && punct(w[e - 1]) && !(keep_hash && w[e - 1] == '#')) --e;
  return w.substr(b, e - b);
}

inline bool shouting(const std::string& t) {
  bool letter = false;
  for (char c : t) {
    if (c >= 'a' && c <= 'z') return false;
    if (c >= 'A' && c <= 'Z') letter = true;
  }
  return letter;
}

inline std::vector<std::string> valence_tokens(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& w : words(text)) {
    if (w[0] == '#') {
      const auto tag = strip(w, true);
      const char c = tag.size() > 1 ? tag[1] : ' ';
      if (tag.size() > 1 && tag[0] == '#' &&
          ((c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) {
        out.push_back(tag);
        continue;
      }
    }
    const auto s = strip(w, false);
    out.push_back(s.size() <= 2 ? w : s);
  }
  return out;
}

inline double valence_rule(const osn::sentiment::Lexicon& lex, const std::string& text) {
  const auto toks = valence_tokens(text);
  std::vector<std::string> low;
  std::size_t shouted = 0;
  for (const auto& t : toks) {
    low.push_back(lower(t));
    shouted += shouting(t) ? 1 : 0;
  }
  const bool emphasis = shouted > 0 && shouted < toks.size();
  std::size_t but = toks.size();
  for (std::size_t i = 0; i < low.size(); ++i)
    if (low[i] == "but") {
      but = i;
      break;
    }

  auto is_booster = [&](const std::string& w) { return lex.boosters.count(w) > 0; };
  auto is_negator = [&](const std::string& w) { return lex.negators.count(w) > 0; };

  double s = 0.0;
  bool hit = false;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (is_booster(low[i]) || is_negator(low[i])) continue;
    auto it = lex.entries.find(low[i]);
    if (it == lex.entries.end()) continue;
    hit = true;
    double v = it->second;
    const double sign = v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
    if (emphasis && shouting(toks[i]) && sign != 0.0) v = sign > 0 ? v + 0.733 : v - 0.733;
    const double scale[3] = {1.0, 0.95, 0.90};
    for (std::size_t d = 1; d <= 3 && d <= i; ++d) {
      auto b = lex.boosters.find(low[i - d]);
      if (b == lex.boosters.end()) continue;
      // A dampener can push v through zero; the sign is read fresh each time.
      const double inc = b->second * scale[d - 1];
      if (v > 0) v = v + inc;
      else if (v < 0) v = v - inc;
    }
    for (std::size_t d = 1; d <= 3 && d <= i; ++d)
      if (is_negator(low[i - d])) v = v * -0.74;
    if (but < toks.size()) {
      if (i < but) v = v * 0.5;
      if (i > but) v = v * 1.5;
    }
    s += v;
  }
  if (!hit) return 0.0;

  int bangs = 0;
  for (char c : text)
    if (c == '!' && bangs < 4) ++bangs;
  const double boost = 0.292 * bangs;
  if (s > 0) s += boost;
  if (s < 0) s -= boost;

  double c = s / std::sqrt(s * s + 15.0);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return c;
}

inline std::vector<std::string> plain_tokens(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& w : words(text)) {
    const auto t = lower(strip(w, false));
    if (t.empty()) continue;
    if (t.size() > 3 && t.compare(t.size() - 3, 3, "n't") == 0) {
      out.push_back(t.substr(0, t.size() - 3));
      out.push_back("n't");
    } else {
      out.push_back(t);
    }
  }
  return out;
}

inline double pattern_average(const osn::sentiment::Lexicon& lex, const std::string& text) {
  const auto toks = plain_tokens(text);
  double total = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (lex.negators.count(toks[i])) continue;
    auto it = lex.entries.find(toks[i]);
    if (it == lex.entries.end()) continue;
    double p = it->second;
    if (i > 0 && lex.negators.count(toks[i - 1])) p = p * -0.5;
    total += p;
    ++n;
  }
  if (n == 0) return 0.0;
  double c = total / n;
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return c;
}

}  // namespace oracle

#include "osn/sentiment/tokenize.hpp"

#include "osn/common/text.hpp"

namespace osn::sentiment {

std::vector<std::string> tokenize_valence(std::string_view text) {
  std::vector<std::string> tokens;
  for (std::string_view raw : text::split_whitespace(text)) {
    if (raw.front() == '#') {
      const auto tag = text::strip_punct(raw, "#");
      if (tag.size() > 1 && tag.front() == '#' && text::is_ascii_alnum(tag[1])) {
        tokens.emplace_back(tag);
        continue;
      }
    }
    const auto stripped = text::strip_punct(raw);
    tokens.emplace_back(stripped.size() <= 2 ? raw : stripped);
  }
  return tokens;
}

std::vector<std::string> tokenize_plain(std::string_view text) {
  std::vector<std::string> tokens;
  for (std::string_view raw : text::split_whitespace(text)) {
    auto word = text::to_lower_ascii(text::strip_punct(raw));
    if (word.empty()) continue;
    if (word.size() > 3 && word.ends_with("n't")) {
      tokens.push_back(word.substr(0, word.size() - 3));
      tokens.emplace_back("n't");
    } else {
      tokens.push_back(std::move(word));
    }
  }
  return tokens;
}

std::string_view truncate_text(std::string_view text, std::size_t max_chars, bool& truncated) {
  truncated = false;
  std::size_t chars = 0;
  std::size_t cut = text.size();
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) == 0x80) continue;
    if (chars == max_chars) {
      cut = i;
      break;
    }
    ++chars;
  }
  if (cut == text.size()) return text;
  truncated = true;
  // Back up to whitespace so no word is split; keep the hard cut when the
  // prefix has no whitespace at all.
  std::size_t boundary = cut;
  while (boundary > 0 && !text::is_ascii_space(text[boundary])) --boundary;
  if (boundary == 0 && !text::is_ascii_space(text[0])) return text.substr(0, cut);
  return text.substr(0, boundary);
}

}  // namespace osn::sentiment

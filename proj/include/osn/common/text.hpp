#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace osn::text {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

/// ASCII punctuation as classified by the C locale's ispunct().
inline bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

inline bool is_ascii_alnum(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string to_lower_ascii(std::string_view s);
std::string to_upper_ascii(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on ASCII whitespace; never yields empty pieces.
std::vector<std::string_view> split_whitespace(std::string_view s);

/// Removes leading and trailing ASCII punctuation, except characters in `keep`.
std::string_view strip_punct(std::string_view s, std::string_view keep = {});

/// True when `s` has at least one ASCII letter and no lowercase ASCII letter.
bool is_all_caps(std::string_view s);

bool is_valid_utf8(std::string_view s);

/// Reinterprets ISO-8859-1 bytes as UTF-8.
std::string latin1_to_utf8(std::string_view s);

std::size_t utf8_length(std::string_view s);

}  // namespace osn::text

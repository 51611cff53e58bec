#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace osn::sentiment {

/// Whitespace tokens with leading/trailing punctuation removed. A token whose
/// stripped form is two characters or shorter is kept verbatim, which leaves
/// emoticons such as ":)" or ":-(" intact. Hashtags keep their '#'.
/// Case is preserved.
std::vector<std::string> tokenize_valence(std::string_view text);

/// Lowercase whitespace tokens stripped of punctuation; "n't" contractions are
/// split off ("don't" -> "do", "n't").
std::vector<std::string> tokenize_plain(std::string_view text);

/// Cuts `text` to at most `max_chars` code points, backing up to the last
/// whitespace boundary when one exists.
std::string_view truncate_text(std::string_view text, std::size_t max_chars, bool& truncated);

}  // namespace osn::sentiment

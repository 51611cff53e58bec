#pragma once

#include <string_view>

namespace osn::ingestion {

/// ISO 639-1 two-letter language code, lowercase.
bool is_language_code(std::string_view code);

/// ISO 3166-1 alpha-2 country code, uppercase.
bool is_country_code(std::string_view code);

}  // namespace osn::ingestion

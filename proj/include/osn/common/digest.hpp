#pragma once

#include <string>
#include <string_view>

namespace osn {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Comparison whose running time depends only on the lengths involved.
bool constant_time_equal(std::string_view a, std::string_view b);

std::string random_hex(std::size_t bytes);

}  // namespace osn

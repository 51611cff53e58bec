#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace osn::gateway {

/// IPv4 or IPv6 network in CIDR notation. IPv4 is held as IPv4-mapped IPv6.
class CidrBlock {
 public:
  /// "10.0.0.0/8", "::1/128" or a bare address. Throws std::invalid_argument.
  static CidrBlock parse(std::string_view text);

  bool contains(std::string_view address) const;
  const std::string& text() const { return text_; }

 private:
  std::array<unsigned char, 16> network_{};
  int prefix_ = 128;
  std::string text_;
};

std::optional<std::array<unsigned char, 16>> parse_ip(std::string_view address);

/// Empty list admits everyone.
class NetworkPolicy {
 public:
  NetworkPolicy() = default;
  explicit NetworkPolicy(const std::vector<std::string>& cidrs);

  bool allows(std::string_view address) const;
  bool restricted() const { return !blocks_.empty(); }

 private:
  std::vector<CidrBlock> blocks_;
};

}  // namespace osn::gateway

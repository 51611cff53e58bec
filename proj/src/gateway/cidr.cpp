#include "osn/gateway/cidr.hpp"

#include <arpa/inet.h>

#include <charconv>
#include <stdexcept>

namespace osn::gateway {

std::optional<std::array<unsigned char, 16>> parse_ip(std::string_view address) {
  const std::string s(address);
  std::array<unsigned char, 16> out{};
  unsigned char v4[4];
  if (inet_pton(AF_INET, s.c_str(), v4) == 1) {
    out[10] = 0xFF;
    out[11] = 0xFF;
    std::copy(v4, v4 + 4, out.begin() + 12);
    return out;
  }
  if (inet_pton(AF_INET6, s.c_str(), out.data()) == 1) return out;
  return std::nullopt;
}

CidrBlock CidrBlock::parse(std::string_view text) {
  CidrBlock b;
  b.text_ = std::string(text);
  const auto slash = text.find('/');
  const auto addr = text.substr(0, slash);
  auto ip = parse_ip(addr);
  if (!ip) throw std::invalid_argument("bad network address: " + std::string(text));
  b.network_ = *ip;
  const bool v4 = addr.find(':') == std::string_view::npos;
  const int max_prefix = v4 ? 32 : 128;
  int prefix = max_prefix;
  if (slash != std::string_view::npos) {
    const auto p = text.substr(slash + 1);
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), prefix);
    if (ec != std::errc() || ptr != p.data() + p.size() || prefix < 0 || prefix > max_prefix)
      throw std::invalid_argument("bad prefix length: " + std::string(text));
  }
  b.prefix_ = v4 ? prefix + 96 : prefix;
  return b;
}

bool CidrBlock::contains(std::string_view address) const {
  const auto ip = parse_ip(address);
  if (!ip) return false;
  int bits = prefix_;
  for (std::size_t i = 0; i < 16 && bits > 0; ++i, bits -= 8) {
    const unsigned char mask = bits >= 8 ? 0xFF : static_cast<unsigned char>(0xFF << (8 - bits));
    if (((*ip)[i] & mask) != (network_[i] & mask)) return false;
  }
  return true;
}

NetworkPolicy::NetworkPolicy(const std::vector<std::string>& cidrs) {
  for (const auto& c : cidrs) blocks_.push_back(CidrBlock::parse(c));
}

bool NetworkPolicy::allows(std::string_view address) const {
  if (blocks_.empty()) return true;
  for (const auto& b : blocks_)
    if (b.contains(address)) return true;
  return false;
}

}  // namespace osn::gateway

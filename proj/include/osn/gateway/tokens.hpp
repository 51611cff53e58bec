#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace osn::gateway {

enum class Scope { search, export_csv, admin };

std::string_view to_string(Scope s);
std::optional<Scope> parse_scope(std::string_view s);

/// Stored form of an API token. Only a salted hash of the secret is kept.
struct TokenRecord {
  std::string token_id;
  std::string salt;
  std::string secret_hash;  // sha256_hex(salt + ":" + secret)
  std::set<Scope> scopes;
  bool disabled = false;
};

struct Identity {
  std::string token_id;
  std::set<Scope> scopes;

  bool has(Scope s) const { return scopes.count(s) > 0; }
};

class AuthError : public std::runtime_error {
 public:
  AuthError(int status, std::string code, const std::string& what)
      : std::runtime_error(what), status_(status), code_(std::move(code)) {}
  int status() const { return status_; }  // 401 or 403
  const std::string& code() const { return code_; }

 private:
  int status_;
  std::string code_;
};

std::string hash_secret(std::string_view salt, std::string_view secret);

/// Builds a record for `secret`, generating a random salt when none is given.
TokenRecord make_token_record(std::string token_id, std::string_view secret, std::set<Scope> scopes,
                              std::optional<std::string> salt = std::nullopt);

/// Bearer credentials have the form "<token_id>.<secret>".
class TokenStore {
 public:
  TokenStore() = default;

  static TokenStore from_json(const nlohmann::json& doc);
  static TokenStore load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  void add(TokenRecord record);
  std::size_t size() const { return tokens_.size(); }

  /// Resolves an Authorization header value. Throws AuthError(401).
  Identity authenticate(const std::optional<std::string>& authorization) const;

  /// authenticate() plus a scope check; throws AuthError(403) when missing.
  Identity authorize(const std::optional<std::string>& authorization, Scope required) const;

 private:
  std::map<std::string, TokenRecord, std::less<>> tokens_;
};

}  // namespace osn::gateway

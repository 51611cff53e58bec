#include "osn/gateway/tokens.hpp"

#include <fstream>

#include "osn/common/digest.hpp"
#include "osn/common/text.hpp"

namespace osn::gateway {

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::search: return "search";
    case Scope::export_csv: return "export";
    case Scope::admin: return "admin";
  }
  return "search";
}

std::optional<Scope> parse_scope(std::string_view s) {
  if (s == "search") return Scope::search;
  if (s == "export") return Scope::export_csv;
  if (s == "admin") return Scope::admin;
  return std::nullopt;
}

std::string hash_secret(std::string_view salt, std::string_view secret) {
  std::string material;
  material.reserve(salt.size() + secret.size() + 1);
  material.append(salt).append(":").append(secret);
  return sha256_hex(material);
}

TokenRecord make_token_record(std::string token_id, std::string_view secret, std::set<Scope> scopes,
                              std::optional<std::string> salt) {
  TokenRecord r;
  r.token_id = std::move(token_id);
  r.salt = salt ? *salt : random_hex(16);
  r.secret_hash = hash_secret(r.salt, secret);
  r.scopes = std::move(scopes);
  return r;
}

TokenStore TokenStore::from_json(const nlohmann::json& doc) {
  TokenStore store;
  const auto& list = doc.at("tokens");
  if (!list.is_array()) throw std::invalid_argument("token file: 'tokens' must be an array");
  for (const auto& t : list) {
    TokenRecord r;
    r.token_id = t.at("id").get<std::string>();
    r.salt = t.at("salt").get<std::string>();
    r.secret_hash = t.at("secret_sha256").get<std::string>();
    r.disabled = t.value("disabled", false);
    for (const auto& s : t.at("scopes")) {
      auto scope = parse_scope(s.get<std::string>());
      if (!scope) throw std::invalid_argument("token file: unknown scope '" + s.get<std::string>() + "'");
      r.scopes.insert(*scope);
    }
    store.add(std::move(r));
  }
  return store;
}

TokenStore TokenStore::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open token file " + path.string());
  return from_json(nlohmann::json::parse(in));
}

nlohmann::json TokenStore::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [id, r] : tokens_) {
    nlohmann::json scopes = nlohmann::json::array();
    for (Scope s : r.scopes) scopes.push_back(to_string(s));
    list.push_back({{"id", r.token_id},
                    {"salt", r.salt},
                    {"secret_sha256", r.secret_hash},
                    {"scopes", scopes},
                    {"disabled", r.disabled}});
  }
  return {{"tokens", list}};
}

void TokenStore::add(TokenRecord record) {
  if (record.token_id.empty() || record.token_id.find('.') != std::string::npos)
    throw std::invalid_argument("token id must be non-empty and contain no '.'");
  if (tokens_.count(record.token_id)) throw std::invalid_argument("duplicate token id " + record.token_id);
  auto id = record.token_id;
  tokens_.emplace(std::move(id), std::move(record));
}

Identity TokenStore::authenticate(const std::optional<std::string>& authorization) const {
  if (!authorization) throw AuthError(401, "unauthorized", "missing Authorization header");
  const auto value = text::trim(*authorization);
  if (value.size() < 7 || text::to_lower_ascii(value.substr(0, 7)) != "bearer ")
    throw AuthError(401, "unauthorized", "expected a bearer token");
  const auto credential = text::trim(value.substr(7));
  const auto dot = credential.find('.');
  const auto id = credential.substr(0, dot == std::string_view::npos ? 0 : dot);
  const auto secret = dot == std::string_view::npos ? std::string_view{} : credential.substr(dot + 1);

  auto it = tokens_.find(id);
  // Hash even when the id is unknown so both paths cost the same.
  const std::string_view salt = it != tokens_.end() ? std::string_view(it->second.salt) : "unknown";
  const std::string presented = hash_secret(salt, secret);
  const bool known = it != tokens_.end();
  const bool match = constant_time_equal(presented, known ? it->second.secret_hash : std::string(64, '0'));
  if (!known || !match || it->second.disabled || secret.empty())
    throw AuthError(401, "unauthorized", "invalid or disabled token");
  return {it->second.token_id, it->second.scopes};
}

Identity TokenStore::authorize(const std::optional<std::string>& authorization, Scope required) const {
  Identity id = authenticate(authorization);
  if (!id.has(required))
    throw AuthError(403, "forbidden", "token lacks the '" + std::string(to_string(required)) + "' scope");
  return id;
}

}  // namespace osn::gateway

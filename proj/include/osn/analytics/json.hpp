#pragma once

#include <nlohmann/json.hpp>

#include "osn/analytics/analytics.hpp"

namespace osn {
void to_json(nlohmann::json& j, const Post& p);
void to_json(nlohmann::json& j, const ClassifiedPost& p);
}  // namespace osn

namespace osn::analytics {
void to_json(nlohmann::json& j, const LabelCounts& c);
void to_json(nlohmann::json& j, const Distribution& d);
void to_json(nlohmann::json& j, const TimeBin& b);
void to_json(nlohmann::json& j, const TermWeight& t);
void to_json(nlohmann::json& j, const CountrySentiment& c);
}  // namespace osn::analytics

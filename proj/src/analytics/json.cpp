#include "osn/analytics/json.hpp"

namespace osn {

void to_json(nlohmann::json& j, const Post& p) {
  j = {{"id", p.id},
       {"text", p.text},
       {"author", p.author},
       {"created_at", format_iso8601(p.created_at)},
       {"lang", p.language},
       {"country", p.country ? nlohmann::json(*p.country) : nlohmann::json(nullptr)}};
}

void to_json(nlohmann::json& j, const ClassifiedPost& p) {
  to_json(j, p.post);
  j["algorithm"] = p.score.algorithm.str();
  j["compound"] = p.score.compound;
  j["label"] = sentiment::to_string(p.score.label);
  if (p.score.truncated) j["truncated"] = true;
}

}  // namespace osn

namespace osn::analytics {

void to_json(nlohmann::json& j, const LabelCounts& c) {
  j = {{"positive", c.positive}, {"negative", c.negative}, {"neutral", c.neutral}, {"total", c.total()}};
}

void to_json(nlohmann::json& j, const Distribution& d) {
  j = {{"counts", d.counts},
       {"fractions", {{"positive", d.positive}, {"negative", d.negative}, {"neutral", d.neutral}}}};
}

void to_json(nlohmann::json& j, const TimeBin& b) {
  j = {{"bin_start", format_iso8601(b.bin_start)}, {"counts", b.counts}, {"mean_compound", b.mean_compound}};
}

void to_json(nlohmann::json& j, const TermWeight& t) { j = {{"term", t.term}, {"weight", t.weight}}; }

void to_json(nlohmann::json& j, const CountrySentiment& c) {
  j = {{"country", c.country}, {"counts", c.counts}, {"mean_compound", c.mean_compound}};
}

}  // namespace osn::analytics

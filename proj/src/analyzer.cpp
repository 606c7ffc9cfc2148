#include "headliner/analyzer.hpp"

#include <algorithm>

#include "headliner/text.hpp"

namespace headliner {

using nlohmann::json;

AnalyzeResponse analyze(const AnalyzeRequest& request, const Resources& resources,
                        const AnalysisConfig& config) {
  if (trim(request.body).empty()) {
    throw RequestError("empty_body", "article body is empty");
  }
  Article article;
  article.headline = request.headline;
  article.subheadline = request.subheadline;
  article.body = request.body;

  AnalyzeResponse out;
  auto resolved = extract_keywords(article.body, resources.db, resources.entities);
  out.keywords = rank_keywords(article, resolved, resources.db, config.ranking);

  if (resources.fb_model && resources.tw_model) {
    auto tokens = tokenize(request.headline);
    bool has_word = std::any_of(tokens.begin(), tokens.end(), [](const Token& t) {
      return !is_punctuation_token(t.text);
    });
    if (has_word) {
      out.shareability = score_headline(request.headline,
                                        resources.shareability(config.sentiment_dead_zone),
                                        *resources.fb_model, *resources.tw_model,
                                        config.thresholds);
    }
  }
  return out;
}

json to_json(const AnalyzeResponse& response) {
  json keywords = json::array();
  for (const auto& s : response.keywords) {
    keywords.push_back({{"canonical", s.keyword.canonical},
                        {"weight", s.weight},
                        {"frequency", s.frequency},
                        {"seo_score", s.seo_score},
                        {"in_headline", s.in_headline}});
  }
  json share = nullptr;
  if (response.shareability) {
    const auto& r = *response.shareability;
    share = {{"fb_score", r.fb_score},
             {"tw_score", r.tw_score},
             {"fb_alert", r.fb_alert},
             {"tw_alert", r.tw_alert}};
  }
  return {{"keywords", std::move(keywords)}, {"shareability", std::move(share)}};
}

std::string response_body(const AnalyzeResponse& response) {
  return to_json(response).dump() + "\n";
}

AnalyzeRequest parse_analyze_request(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw RequestError("malformed_json", e.what());
  }
  if (!j.is_object()) throw RequestError("invalid_request", "request must be a JSON object");
  AnalyzeRequest r;
  auto field = [&](const char* key, std::string& out, bool required) {
    if (!j.contains(key) || j[key].is_null()) {
      if (required) throw RequestError("invalid_request", std::string("missing field '") + key + "'");
      return;
    }
    if (!j[key].is_string()) {
      throw RequestError("invalid_request", std::string("field '") + key + "' must be a string");
    }
    out = j[key].get<std::string>();
  };
  field("headline", r.headline, false);
  field("subheadline", r.subheadline, false);
  field("body", r.body, true);
  return r;
}

AnalyzeRequest to_request(const Article& article) {
  return {article.headline, article.subheadline, article.body};
}

}  // namespace headliner

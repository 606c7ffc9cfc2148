#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "headliner/corpus_store.hpp"
#include "headliner/gbt.hpp"
#include "headliner/keyword_ranking.hpp"
#include "headliner/shareability.hpp"
#include "headliner/text_pipeline.hpp"

namespace headliner {

struct AnalysisConfig {
  RankingParams ranking;
  Thresholds thresholds;
  double sentiment_dead_zone = kDefaultSentimentDeadZone;
};

// Everything the analysis reads. Loaded once and shared read-only.
struct Resources {
  KeywordDb db;
  EntityResources entities;
  SentimentLexicon lexicon;
  std::optional<GbtModel> fb_model;
  std::optional<GbtModel> tw_model;

  ShareabilityResources shareability(double dead_zone) const {
    return {&entities, &lexicon, dead_zone};
  }
};

struct AnalyzeRequest {
  std::string headline;
  std::string subheadline;
  std::string body;
};

struct AnalyzeResponse {
  std::vector<KeywordScore> keywords;
  // Absent when the headline has no words or no models are loaded.
  std::optional<ShareabilityResult> shareability;
};

// A request the analysis refuses. `code` is machine-readable.
class RequestError : public std::runtime_error {
 public:
  RequestError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Throws RequestError("empty_body") when the body has no text.
AnalyzeResponse analyze(const AnalyzeRequest& request, const Resources& resources,
                        const AnalysisConfig& config);

nlohmann::json to_json(const AnalyzeResponse& response);
// The exact bytes served by POST /api/analyze and printed by
// `headliner analyze --format json`.
std::string response_body(const AnalyzeResponse& response);

// Throws RequestError with code "malformed_json" or "invalid_request".
AnalyzeRequest parse_analyze_request(std::string_view json_text);

AnalyzeRequest to_request(const Article& article);

}  // namespace headliner

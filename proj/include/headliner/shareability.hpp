#pragma once

#include <array>
#include <span>
#include <string_view>

#include "headliner/corpus_store.hpp"
#include "headliner/gbt.hpp"
#include "headliner/text_pipeline.hpp"

namespace headliner {

enum class Sentiment { kPositive, kNegative, kNeutral };

inline constexpr double kDefaultSentimentDeadZone = 0.1;

// Polarity above +dead_zone is positive, below -dead_zone negative.
Sentiment classify_word_sentiment(std::string_view word, const SentimentLexicon& lexicon,
                                  double dead_zone = kDefaultSentimentDeadZone);

inline constexpr std::size_t kHeadlineFeatureCount = 8;

// The first six fields are counts divided by `length`.
struct HeadlineFeatures {
  double neutral = 0.0;
  double positive = 0.0;
  double negative = 0.0;
  double organizations = 0.0;
  double persons = 0.0;
  double places = 0.0;
  double day = 0.0;  // 1 when a weekday name appears
  int length = 0;    // words, punctuation excluded

  std::array<double, kHeadlineFeatureCount> to_vector() const;
};

struct ShareabilityResources {
  const EntityResources* entities = nullptr;
  const SentimentLexicon* lexicon = nullptr;
  double dead_zone = kDefaultSentimentDeadZone;
};

// Throws std::invalid_argument when the headline has no words.
HeadlineFeatures extract_features(std::string_view headline, const ShareabilityResources& res);

struct Thresholds {
  double fb = 3.7;
  double tw = 1.7;

  void validate() const;
};

struct ShareabilityResult {
  double fb_score = 0.0;
  double tw_score = 0.0;
  bool fb_alert = false;
  bool tw_alert = false;
};

// Alerts fire when a score is >= its threshold.
ShareabilityResult score_features(const HeadlineFeatures& features, const GbtModel& fb_model,
                                  const GbtModel& tw_model, const Thresholds& th);

ShareabilityResult score_headline(std::string_view headline, const ShareabilityResources& res,
                                  const GbtModel& fb_model, const GbtModel& tw_model,
                                  const Thresholds& th);

// Median share counts per platform. Throws on an empty dataset.
Thresholds median_thresholds(std::span<const ShareRecord> dataset);

}  // namespace headliner

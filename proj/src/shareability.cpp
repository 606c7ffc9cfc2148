#include "headliner/shareability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "headliner/text.hpp"

namespace headliner {

Sentiment classify_word_sentiment(std::string_view word, const SentimentLexicon& lexicon,
                                  double dead_zone) {
  const double p = lexicon.polarity(word);
  if (p > dead_zone) return Sentiment::kPositive;
  if (p < -dead_zone) return Sentiment::kNegative;
  return Sentiment::kNeutral;
}

std::array<double, kHeadlineFeatureCount> HeadlineFeatures::to_vector() const {
  return {neutral, positive, negative, organizations, persons, places, day,
          static_cast<double>(length)};
}

HeadlineFeatures extract_features(std::string_view headline, const ShareabilityResources& res) {
  if (res.entities == nullptr || res.lexicon == nullptr) {
    throw std::invalid_argument("shareability resources not set");
  }
  static const std::unordered_set<std::string> kDays = {
      "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"};

  auto tokens = tokenize_sentences(headline);
  HeadlineFeatures f;
  int pos = 0, neg = 0, neu = 0;
  for (const auto& t : tokens) {
    if (is_punctuation_token(t.text)) continue;
    ++f.length;
    switch (classify_word_sentiment(t.text, *res.lexicon, res.dead_zone)) {
      case Sentiment::kPositive: ++pos; break;
      case Sentiment::kNegative: ++neg; break;
      case Sentiment::kNeutral: ++neu; break;
    }
    if (kDays.contains(to_lower(t.text))) f.day = 1.0;
  }
  if (f.length == 0) throw std::invalid_argument("headline has no words");

  int orgs = 0, persons = 0, places = 0;
  for (const auto& m : detect_entities(headline, tokens, *res.entities)) {
    switch (m.entity_class) {
      case EntityClass::kOrganization: ++orgs; break;
      case EntityClass::kPerson: ++persons; break;
      case EntityClass::kLocation: ++places; break;
    }
  }
  const double len = f.length;
  f.neutral = neu / len;
  f.positive = pos / len;
  f.negative = neg / len;
  f.organizations = orgs / len;
  f.persons = persons / len;
  f.places = places / len;
  return f;
}

void Thresholds::validate() const {
  if (!std::isfinite(fb) || fb < 0.0 || !std::isfinite(tw) || tw < 0.0) {
    throw std::invalid_argument("thresholds must be finite and >= 0");
  }
}

ShareabilityResult score_features(const HeadlineFeatures& features, const GbtModel& fb_model,
                                  const GbtModel& tw_model, const Thresholds& th) {
  const auto x = features.to_vector();
  ShareabilityResult r;
  r.fb_score = fb_model.predict(x);
  r.tw_score = tw_model.predict(x);
  r.fb_alert = r.fb_score >= th.fb;
  r.tw_alert = r.tw_score >= th.tw;
  return r;
}

ShareabilityResult score_headline(std::string_view headline, const ShareabilityResources& res,
                                  const GbtModel& fb_model, const GbtModel& tw_model,
                                  const Thresholds& th) {
  return score_features(extract_features(headline, res), fb_model, tw_model, th);
}

namespace {

double median(std::vector<double> v) {
  const auto n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return (lower + upper) / 2.0;
}

}  // namespace

Thresholds median_thresholds(std::span<const ShareRecord> dataset) {
  if (dataset.empty()) throw std::invalid_argument("median of an empty dataset");
  std::vector<double> fb, tw;
  fb.reserve(dataset.size());
  tw.reserve(dataset.size());
  for (const auto& r : dataset) {
    fb.push_back(static_cast<double>(r.fb_shares));
    tw.push_back(static_cast<double>(r.tw_shares));
  }
  return {median(std::move(fb)), median(std::move(tw))};
}

}  // namespace headliner

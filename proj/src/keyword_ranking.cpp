#include "headliner/keyword_ranking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "headliner/text.hpp"

namespace headliner {

void RankingParams::validate() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must be in [0, 1]");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must be in [0, 1]");
  if (top_k < 1) throw std::invalid_argument("top_k must be >= 1");
}

double local_weight(const ResolvedKeyword& k, std::span<const ResolvedKeyword> all) {
  std::size_t max_count = 0;
  for (const auto& o : all) max_count = std::max(max_count, o.occurrence_count);
  if (max_count == 0) return 0.0;
  return static_cast<double>(k.occurrence_count) / static_cast<double>(max_count);
}

double global_weight(const ResolvedKeyword& k, const KeywordDb& db) {
  if (db.max_frequency() == 0) return 0.0;
  auto f = db.frequency(k.canonical);
  for (const auto& v : k.variants) f = std::max(f, db.frequency(v));
  if (f == 0) return 0.0;
  return std::log1p(static_cast<double>(f)) /
         std::log1p(static_cast<double>(db.max_frequency()));
}

double combined_weight(double w_local, double w_global, bool is_entity,
                       const RankingParams& p) {
  const double base = p.lambda * w_local + (1.0 - p.lambda) * w_global;
  return (1.0 - p.beta) * base + p.beta * (is_entity ? 1.0 : 0.0);
}

namespace {

std::vector<std::string> folded_words(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize(text)) {
    if (!is_punctuation_token(t.text)) out.push_back(to_lower(t.text));
  }
  return out;
}

bool contains_sequence(const std::vector<std::string>& hay,
                       const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > hay.size()) return false;
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

bool appears_in_headline(const ResolvedKeyword& k, std::string_view headline,
                         std::string_view subheadline) {
  auto head = folded_words(headline);
  auto sub = folded_words(subheadline);
  for (const auto& v : k.variants) {
    auto needle = folded_words(v);
    if (contains_sequence(head, needle) || contains_sequence(sub, needle)) return true;
  }
  return false;
}

std::vector<KeywordScore> rank_keywords(const Article& article,
                                        std::span<const ResolvedKeyword> resolved,
                                        const KeywordDb& db, const RankingParams& p) {
  p.validate();
  std::vector<KeywordScore> scores;
  scores.reserve(resolved.size());
  for (const auto& k : resolved) {
    const double wl = local_weight(k, resolved);
    const double wg = global_weight(k, db);
    KeywordScore s;
    s.keyword = k;
    s.weight = std::clamp(combined_weight(wl, wg, k.is_entity(), p), 0.0, 1.0);
    s.frequency = k.occurrence_count;
    s.seo_score = static_cast<int>(std::lround(100.0 * wg));
    scores.push_back(std::move(s));
  }
  std::sort(scores.begin(), scores.end(), [](const KeywordScore& a, const KeywordScore& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.keyword.canonical < b.keyword.canonical;
  });
  if (scores.size() > p.top_k) scores.resize(p.top_k);
  for (auto& s : scores) {
    s.in_headline = appears_in_headline(s.keyword, article.headline, article.subheadline);
  }
  return scores;
}

OverlapResult evaluate_overlap(std::span<const Article> corpus, const KeywordDb& db,
                               const EntityResources& resources,
                               const RankingParams& p) {
  if (corpus.empty()) throw std::invalid_argument("overlap evaluation needs a non-empty corpus");
  std::size_t at_least_1 = 0;
  std::size_t at_least_2 = 0;
  for (const auto& a : corpus) {
    if (trim(a.headline).empty()) {
      throw std::invalid_argument("article '" + a.id + "' has no headline");
    }
    auto resolved = extract_keywords(a.body, db, resources);
    auto ranked = rank_keywords(a, resolved, db, p);
    auto hits = std::count_if(ranked.begin(), ranked.end(),
                              [](const KeywordScore& s) { return s.in_headline; });
    if (hits >= 1) ++at_least_1;
    if (hits >= 2) ++at_least_2;
  }
  const auto n = static_cast<double>(corpus.size());
  return {static_cast<double>(at_least_1) / n, static_cast<double>(at_least_2) / n};
}

}  // namespace headliner

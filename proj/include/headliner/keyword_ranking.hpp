#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "headliner/corpus_store.hpp"
#include "headliner/text_pipeline.hpp"

namespace headliner {

struct RankingParams {
  double lambda = 0.6;  // local vs global balance
  double beta = 0.2;    // share of the weight reserved for the entity boost
  std::size_t top_k = 5;

  // Throws std::invalid_argument.
  void validate() const;
};

struct KeywordScore {
  ResolvedKeyword keyword;
  double weight = 0.0;
  std::size_t frequency = 0;  // occurrences in the article
  int seo_score = 0;          // round(100 * global weight)
  bool in_headline = false;
};

// occurrence_count / max occurrence_count over `all`.
double local_weight(const ResolvedKeyword& k, std::span<const ResolvedKeyword> all);

// ln(1 + f) / ln(1 + max_frequency), f being the largest DB frequency among
// the keyword's variants. 0 when unknown or when the DB is empty.
double global_weight(const ResolvedKeyword& k, const KeywordDb& db);

// (1 - beta) * (lambda * local + (1 - lambda) * global) + beta * [entity]
double combined_weight(double w_local, double w_global, bool is_entity,
                       const RankingParams& p);

// True when any variant appears, case-insensitively and token-aligned, in
// the headline or the subheadline.
bool appears_in_headline(const ResolvedKeyword& k, std::string_view headline,
                         std::string_view subheadline);

// Sorted by weight desc, then frequency desc, then canonical asc; at most
// p.top_k entries.
std::vector<KeywordScore> rank_keywords(const Article& article,
                                        std::span<const ResolvedKeyword> resolved,
                                        const KeywordDb& db, const RankingParams& p);

struct OverlapResult {
  double frac_at_least_1 = 0.0;
  double frac_at_least_2 = 0.0;
};

// For each article, ranks keywords from the body alone and counts how many
// of the top keywords the headline or subheadline already contains.
// Throws std::invalid_argument on an empty corpus or an empty headline.
OverlapResult evaluate_overlap(std::span<const Article> corpus, const KeywordDb& db,
                               const EntityResources& resources,
                               const RankingParams& p);

}  // namespace headliner

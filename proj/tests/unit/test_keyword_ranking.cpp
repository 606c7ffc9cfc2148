#include <doctest.h>

#include <cmath>
#include <random>

#include "headliner/keyword_ranking.hpp"
#include "support/fixtures.hpp"

using namespace headliner;
using namespace headliner::testing;

namespace {

std::size_t index_of(const std::vector<KeywordScore>& ranked, const std::string& canonical) {
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (ranked[i].keyword.canonical == canonical) return i;
  }
  return ranked.size();
}

bool ordered(const KeywordScore& a, const KeywordScore& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.keyword.canonical < b.keyword.canonical;
}

}  // namespace

TEST_CASE("local_weight") {
  std::vector<ResolvedKeyword> all{keyword("A", 3), keyword("B", 1)};
  CHECK(local_weight(all[0], all) == 1.0);
  CHECK(local_weight(all[1], all) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  std::vector<ResolvedKeyword> single{keyword("A", 7)};
  CHECK(local_weight(single[0], single) == 1.0);
}

TEST_CASE("global_weight") {
  auto db = parse_keyword_db("a\t9\nb\t99\n");
  CHECK(global_weight(keyword("missing", 1), db) == 0.0);
  CHECK(global_weight(keyword("b", 1), db) == 1.0);
  CHECK(global_weight(keyword("a", 1), db) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(global_weight(keyword("a", 1), KeywordDb{}) == 0.0);

  auto k = keyword("Enda Kenny", 2, EntityClass::kPerson);
  k.variants.insert("Kenny");
  auto kdb = parse_keyword_db("kenny\t99\nenda kenny\t9\n");
  CHECK(global_weight(k, kdb) == 1.0);
}

TEST_CASE("combined_weight") {
  RankingParams p;
  CHECK(combined_weight(1, 1, true, p) == 1.0);
  CHECK(std::abs(combined_weight(1, 0, false, p) - 0.48) <= 1e-12);
  CHECK(combined_weight(0, 0, false, p) == 0.0);
  CHECK(std::abs(combined_weight(0, 0, true, p) - 0.2) <= 1e-12);
}

TEST_CASE("ranking params validation") {
  RankingParams p;
  CHECK_NOTHROW(p.validate());
  p.lambda = 1.2;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.beta = -0.1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = {};
  p.top_k = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("rank_keywords flags headline containment") {
  Article a;
  a.headline = "Enda Kenny leads Dublin commemoration";
  std::vector<ResolvedKeyword> resolved{
      keyword("Enda Kenny", 4, EntityClass::kPerson), keyword("Dublin", 3, EntityClass::kLocation),
      keyword("commemoration", 3), keyword("Irish Republic", 2, EntityClass::kLocation),
      keyword("GPO", 2, EntityClass::kOrganization), keyword("rebels", 1)};
  auto db = parse_keyword_db("irish republic\t270\ngpo\t410\ndublin\t8000\ncommemoration\t60\n");
  auto ranked = rank_keywords(a, resolved, db, {});
  REQUIRE(ranked.size() == 5);
  int green = 0;
  for (const auto& s : ranked) {
    const bool expected = s.keyword.canonical != "Irish Republic" && s.keyword.canonical != "GPO";
    CHECK(s.in_headline == expected);
    green += s.in_headline;
  }
  CHECK(green == 3);
  CHECK(index_of(ranked, "rebels") == 5);
}

TEST_CASE("rank_keywords details") {
  SUBCASE("empty") { CHECK(rank_keywords({}, {}, KeywordDb{}, {}).empty()); }
  SUBCASE("frequency breaks weight ties") {
    RankingParams p;
    p.lambda = 0.0;  // weight depends on the DB only
    std::vector<ResolvedKeyword> r{keyword("alpha", 1), keyword("beta", 3)};
    auto ranked = rank_keywords({}, r, KeywordDb{}, p);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].weight == ranked[1].weight);
    CHECK(ranked[0].keyword.canonical == "beta");
  }
  SUBCASE("name breaks full ties") {
    std::vector<ResolvedKeyword> r{keyword("zeta", 1), keyword("alpha", 1)};
    auto ranked = rank_keywords({}, r, KeywordDb{}, {});
    CHECK(ranked[0].keyword.canonical == "alpha");
  }
  SUBCASE("display values") {
    auto db = parse_keyword_db("a\t9\nb\t99\n");
    std::vector<ResolvedKeyword> r{keyword("a", 2)};
    auto ranked = rank_keywords({}, r, db, {});
    CHECK(ranked[0].frequency == 2);
    CHECK(ranked[0].seo_score == 50);
  }
  SUBCASE("variants and subheadline count as containment") {
    Article a;
    a.headline = "Kenny defends plan";
    a.subheadline = "Budget row in the D\xC3\xA1il";
    auto kenny = keyword("Enda Kenny", 1, EntityClass::kPerson);
    kenny.variants.insert("Kenny");
    std::vector<ResolvedKeyword> r{kenny, keyword("d\xC3\xA1il", 1), keyword("row in", 1),
                                   keyword("plan defends", 1), keyword("Ken", 1)};
    auto ranked = rank_keywords(a, r, KeywordDb{}, {});
    CHECK(ranked[index_of(ranked, "Enda Kenny")].in_headline);
    CHECK(ranked[index_of(ranked, "row in")].in_headline);
    CHECK_FALSE(ranked[index_of(ranked, "plan defends")].in_headline);
    CHECK_FALSE(ranked[index_of(ranked, "Ken")].in_headline);
  }
}

TEST_CASE("ranking properties over random keyword sets") {
  std::mt19937_64 rng(2024);
  RankingParams p;
  p.top_k = 1000;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = 1 + rng() % 15;
    std::vector<ResolvedKeyword> r;
    KeywordDb db;
    for (std::size_t i = 0; i < n; ++i) {
      auto name = "kw" + std::to_string(i);
      r.push_back(keyword(name, 1 + rng() % 9,
                          rng() % 3 == 0 ? std::optional(EntityClass::kPerson) : std::nullopt));
      if (rng() % 4) db.add(name, 1 + rng() % 100000);
    }
    auto ranked = rank_keywords({}, r, db, p);
    REQUIRE(ranked.size() == n);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      CHECK(ranked[i].weight >= 0.0);
      CHECK(ranked[i].weight <= 1.0);
      CHECK(ranked[i].seo_score >= 0);
      CHECK(ranked[i].seo_score <= 100);
      if (i > 0) CHECK(ordered(ranked[i - 1], ranked[i]));
    }

    // Scaling every count leaves local weights unchanged.
    auto scaled = r;
    const auto factor = 2 + rng() % 5;
    for (auto& k : scaled) {
      k.occurrence_count *= factor;
      k.positions.resize(k.occurrence_count);
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(local_weight(scaled[i], scaled) == local_weight(r[i], r));

    // Raising one keyword's DB frequency never lowers it against the rest.
    const auto target = r[rng() % n].canonical;
    auto boosted = db;
    boosted.add(target, 1 + rng() % 50000);
    auto reranked = rank_keywords({}, r, boosted, p);
    const auto before = index_of(ranked, target);
    const auto after = index_of(reranked, target);
    CHECK(reranked[after].weight >= ranked[before].weight);
    for (const auto& other : ranked) {
      if (other.keyword.canonical == target) continue;
      if (index_of(ranked, other.keyword.canonical) > before) {
        CHECK(index_of(reranked, other.keyword.canonical) > after);
      }
    }
  }
}

TEST_CASE("evaluate_overlap") {
  const auto res = tiny_entities();
  auto db = parse_keyword_db("budget\t40\nhousing\t30\nstrike\t20\n");
  Article a;
  a.id = "a";
  a.body =
      "Enda Kenny met Fine Gael in Dublin. The budget and housing dominated. "
      "Kenny said the budget would pass. A strike in Cork loomed.";
  const auto top = rank_keywords(a, extract_keywords(a.body, db, res), db, {});
  REQUIRE(top.size() == 5);

  SUBCASE("headline built from the top keywords") {
    for (const auto& s : top) a.headline += s.keyword.canonical + " ";
    std::vector<Article> corpus{a};
    auto r = evaluate_overlap(corpus, db, res, {});
    CHECK(r.frac_at_least_1 == 1.0);
    CHECK(r.frac_at_least_2 == 1.0);
  }
  SUBCASE("exactly one shared keyword") {
    a.headline = "Talks on " + top[0].keyword.canonical;
    std::vector<Article> corpus{a};
    auto r = evaluate_overlap(corpus, db, res, {});
    CHECK(r.frac_at_least_1 == 1.0);
    CHECK(r.frac_at_least_2 == 0.0);
  }
  SUBCASE("mixed corpus") {
    Article none = a;
    none.headline = "Nothing relevant";
    Article one = a;
    one.headline = top[1].keyword.canonical + " latest";
    std::vector<Article> corpus{none, one, none, one};
    auto r = evaluate_overlap(corpus, db, res, {});
    CHECK(r.frac_at_least_1 == 0.5);
    CHECK(r.frac_at_least_2 == 0.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS(evaluate_overlap({}, db, res, {}));
    std::vector<Article> corpus{a};  // empty headline
    CHECK_THROWS(evaluate_overlap(corpus, db, res, {}));
  }
}

#include <doctest.h>

#include <random>

#include "headliner/text.hpp"
#include "headliner/text_pipeline.hpp"
#include "support/fixtures.hpp"

using namespace headliner;
using namespace headliner::testing;

namespace {

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

std::vector<Token> bare(std::initializer_list<const char*> words) {
  std::vector<Token> out;
  std::size_t pos = 0;
  for (auto w : words) {
    std::string s(w);
    out.push_back({s, pos, pos + s.size(), 0});
    pos += s.size() + 1;
  }
  return out;
}

std::size_t total_occurrences(const std::vector<ResolvedKeyword>& r) {
  std::size_t n = 0;
  for (const auto& k : r) n += k.occurrence_count;
  return n;
}

}  // namespace

TEST_CASE("tokenize") {
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \n\t ").empty());
  CHECK(texts(tokenize("Enda Kenny visits GPO.")) ==
        std::vector<std::string>{"Enda", "Kenny", "visits", "GPO", "."});
  CHECK(texts(tokenize("O'Brien-led group")) == std::vector<std::string>{"O'Brien-led", "group"});
  CHECK(texts(tokenize("(\"Yes,\" she said!)")) ==
        std::vector<std::string>{"(", "\"", "Yes", ",", "\"", "she", "said", "!", ")"});
  CHECK(texts(tokenize("Mr. Kenny")) == std::vector<std::string>{"Mr.", "Kenny"});
  CHECK(texts(tokenize("the 1916 Rising's legacy")) ==
        std::vector<std::string>{"the", "1916", "Rising's", "legacy"});
}

TEST_CASE("tokenize offsets reconstruct the source") {
  const std::vector<std::string> samples = {
      "Enda Kenny visits GPO.",
      "  leading and trailing  ",
      "\"Quoted,\" he said (twice)... then left!",
      "Fianna F\xC3\xA1il leader Miche\xC3\xA1l Martin \xE2\x80\x9Cwelcomed\xE2\x80\x9D it.",
      "Mr. O'Brien-led talks; Dr. Smith: no.",
  };
  std::mt19937_64 rng(3);
  const std::string alphabet = "ab C.,!?;:\"'()-\n\t";
  std::vector<std::string> all = samples;
  for (int i = 0; i < 300; ++i) {
    std::string s;
    const auto len = rng() % 40;
    for (std::size_t j = 0; j < len; ++j) s += alphabet[rng() % alphabet.size()];
    all.push_back(s);
  }
  for (const auto& src : all) {
    auto tokens = tokenize(src);
    std::string rebuilt;
    std::size_t cursor = 0;
    for (const auto& t : tokens) {
      REQUIRE(t.char_start < t.char_end);
      REQUIRE(t.char_start >= cursor);
      CHECK(src.substr(t.char_start, t.char_end - t.char_start) == t.text);
      rebuilt += src.substr(cursor, t.char_start - cursor);
      rebuilt += t.text;
      cursor = t.char_end;
    }
    rebuilt += src.substr(cursor);
    CHECK(rebuilt == src);
    CHECK(tokenize(src) == tokens);
  }
}

TEST_CASE("split_sentences") {
  auto two = split_sentences(bare({"A", ".", "B", "."}));
  CHECK(two[0].sentence_index == 0);
  CHECK(two[1].sentence_index == 0);
  CHECK(two[2].sentence_index == 1);
  CHECK(two[3].sentence_index == 1);

  auto one = split_sentences(bare({"Mr.", "Kenny", "spoke", "."}));
  for (const auto& t : one) CHECK(t.sentence_index == 0);

  CHECK(split_sentences({}).empty());

  auto tokens = tokenize_sentences("He left! \"Why?\" she asked. Dr. Who stayed.");
  std::vector<std::size_t> idx;
  for (const auto& t : tokens) idx.push_back(t.sentence_index);
  CHECK(idx == std::vector<std::size_t>{0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3});
}

TEST_CASE("detect_entities") {
  const auto res = tiny_entities();
  SUBCASE("gazetteer longest match") {
    const std::string src = "Enda Kenny visited Dublin";
    auto ents = detect_entities(src, tokenize_sentences(src), res);
    REQUIRE(ents.size() == 2);
    CHECK(ents[0].surface == "Enda Kenny");
    CHECK(ents[0].entity_class == EntityClass::kPerson);
    CHECK(ents[0].span == TokenSpan{0, 1});
    CHECK(ents[1].surface == "Dublin");
    CHECK(ents[1].entity_class == EntityClass::kLocation);
  }
  SUBCASE("no capitalized tokens") {
    const std::string src = "the quick brown fox";
    CHECK(detect_entities(src, tokenize_sentences(src), res).empty());
  }
  SUBCASE("acronym rule") {
    const std::string src = "GPO reopens";
    auto ents = detect_entities(src, tokenize_sentences(src), res);
    REQUIRE(ents.size() == 1);
    CHECK(ents[0].surface == "GPO");
    CHECK(ents[0].entity_class == EntityClass::kOrganization);
  }
  SUBCASE("capitalized runs") {
    const std::string src = "It was chaired by Mary Lou Daly and the Housing Agency.";
    auto ents = detect_entities(src, tokenize_sentences(src), res);
    REQUIRE(ents.size() == 2);
    CHECK(ents[0].surface == "Mary Lou Daly");
    CHECK(ents[0].entity_class == EntityClass::kPerson);
    CHECK(ents[1].surface == "Housing Agency");
    CHECK(ents[1].entity_class == EntityClass::kOrganization);
  }
  SUBCASE("sentence-initial plain words are not entities") {
    const std::string src = "Crowds gathered. Officials said it went well.";
    CHECK(detect_entities(src, tokenize_sentences(src), res).empty());
  }
  SUBCASE("acronym gazetteer entries are case sensitive") {
    const std::string src = "he saw rte and RTE";
    auto ents = detect_entities(src, tokenize_sentences(src), res);
    REQUIRE(ents.size() == 1);
    CHECK(ents[0].span == TokenSpan{4, 4});
  }
}

TEST_CASE("detect_entities spans never overlap") {
  const auto res = bundled_resources(false);
  for (const auto& a : load_article_dir(std::filesystem::path(HEADLINER_DATA_DIR) / "articles")) {
    auto tokens = tokenize_sentences(a.body);
    auto ents = detect_entities(a.body, tokens, res.entities);
    for (std::size_t i = 1; i < ents.size(); ++i) CHECK(ents[i - 1].span.last < ents[i].span.first);
    auto kws = match_keywords(a.body, tokens, res.db);
    for (std::size_t i = 1; i < kws.size(); ++i) CHECK(kws[i - 1].span.last < kws[i].span.first);
  }
}

TEST_CASE("match_keywords") {
  auto db = parse_keyword_db("irish republic\t270\nirish\t50\ndublin\t9\n");
  SUBCASE("longest match") {
    const std::string src = "the Irish Republic rises";
    auto m = match_keywords(src, tokenize_sentences(src), db);
    REQUIRE(m.size() == 1);
    CHECK(m[0].db_key == "irish republic");
    CHECK(m[0].surface == "Irish Republic");
    CHECK(m[0].span.size() == 2);
  }
  SUBCASE("empty db") {
    const std::string src = "the Irish Republic rises";
    CHECK(match_keywords(src, tokenize_sentences(src), KeywordDb{}).empty());
  }
  SUBCASE("repeated keyword") {
    const std::string src = "Dublin Dublin";
    auto m = match_keywords(src, tokenize_sentences(src), db);
    REQUIRE(m.size() == 2);
    CHECK(m[0].span == TokenSpan{0, 0});
    CHECK(m[1].span == TokenSpan{1, 1});
  }
  SUBCASE("matches stay within a sentence") {
    const std::string src = "He is Irish. Republic day.";
    auto m = match_keywords(src, tokenize_sentences(src), db);
    REQUIRE(m.size() == 1);
    CHECK(m[0].db_key == "irish");
  }
}

TEST_CASE("resolve_mentions merge rules") {
  auto ent = [](const char* s, EntityClass c, std::size_t first, std::size_t last) {
    return EntityMention{s, c, {first, last}};
  };
  SUBCASE("surname merges into the full name") {
    std::vector<EntityMention> e{ent("Enda Kenny", EntityClass::kPerson, 0, 1),
                                 ent("Kenny", EntityClass::kPerson, 5, 5)};
    auto r = resolve_mentions(e, {});
    REQUIRE(r.size() == 1);
    CHECK(r[0].canonical == "Enda Kenny");
    CHECK(r[0].occurrence_count == 2);
    CHECK(r[0].variants == std::set<std::string>{"Enda Kenny", "Kenny"});
  }
  SUBCASE("abbreviations are not expanded") {
    std::vector<EntityMention> e{ent("GPO", EntityClass::kOrganization, 0, 0),
                                 ent("General Post Office", EntityClass::kOrganization, 4, 6)};
    auto r = resolve_mentions(e, {});
    REQUIRE(r.size() == 2);
    CHECK(r[0].canonical == "GPO");
    CHECK(r[1].canonical == "General Post Office");
  }
  SUBCASE("honorific then surname rule") {
    std::vector<EntityMention> e{ent("Mr. Kenny", EntityClass::kPerson, 0, 1),
                                 ent("Enda Kenny", EntityClass::kPerson, 6, 7)};
    auto r = resolve_mentions(e, {});
    REQUIRE(r.size() == 1);
    CHECK(r[0].canonical == "Enda Kenny");
    CHECK(r[0].occurrence_count == 2);
    CHECK(r[0].positions.front() == TokenSpan{0, 1});
  }
  SUBCASE("case-insensitive exact match with keyword mentions") {
    std::vector<KeywordMention> k{{"dublin", "dublin", {3, 3}}};
    std::vector<EntityMention> e{ent("Dublin", EntityClass::kLocation, 0, 0)};
    auto r = resolve_mentions(e, k);
    REQUIRE(r.size() == 1);
    CHECK(r[0].occurrence_count == 2);
    CHECK(r[0].entity_class == EntityClass::kLocation);
  }
  SUBCASE("entity and keyword on the same span count once") {
    std::vector<KeywordMention> k{{"Dublin", "dublin", {0, 0}}};
    std::vector<EntityMention> e{ent("Dublin", EntityClass::kLocation, 0, 0)};
    auto r = resolve_mentions(e, k);
    REQUIRE(r.size() == 1);
    CHECK(r[0].occurrence_count == 1);
    CHECK(r[0].is_entity());
  }
  SUBCASE("ambiguous surname stays separate") {
    std::vector<EntityMention> e{ent("Enda Kenny", EntityClass::kPerson, 0, 1),
                                 ent("Pat Kenny", EntityClass::kPerson, 3, 4),
                                 ent("Kenny", EntityClass::kPerson, 8, 8)};
    CHECK(resolve_mentions(e, {}).size() == 3);
  }
  SUBCASE("empty") { CHECK(resolve_mentions({}, {}).empty()); }
}

TEST_CASE("extract_keywords on running text") {
  const auto res = tiny_entities();
  auto db = parse_keyword_db("gpo\t410\nkenny\t300\n");
  const std::string text =
      "Taoiseach Enda Kenny spoke at the GPO. Mr. Kenny said the GPO was a symbol. "
      "Later Kenny left. The General Post Office closed.";
  auto r = extract_keywords(text, db, res);
  REQUIRE(r.size() >= 2);
  CHECK(r[0].canonical == "Enda Kenny");
  CHECK(r[0].occurrence_count == 3);
  CHECK(r[0].entity_class == EntityClass::kPerson);
  CHECK(r[1].canonical == "GPO");
  CHECK(r[1].occurrence_count == 2);
  bool distinct_office = false;
  for (const auto& k : r) distinct_office |= k.canonical == "General Post Office";
  CHECK(distinct_office);
  CHECK(extract_keywords(text, db, res) == r);
}

TEST_CASE("resolution never loses occurrences") {
  const std::vector<std::string> surnames = {"Kenny", "Martin", "Adams", "Daly"};
  const std::vector<std::string> firsts = {"Enda", "Micheal", "Gerry", "Mary"};
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<EntityMention> ents;
    std::vector<KeywordMention> kws;
    std::size_t pos = 0;
    const auto n = 1 + rng() % 12;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = surnames[rng() % surnames.size()];
      switch (rng() % 4) {
        case 0:
          ents.push_back({firsts[rng() % firsts.size()] + " " + s, EntityClass::kPerson, {pos, pos + 1}});
          pos += 3;
          break;
        case 1:
          ents.push_back({"Mr. " + s, EntityClass::kPerson, {pos, pos + 1}});
          pos += 3;
          break;
        case 2:
          ents.push_back({s, EntityClass::kPerson, {pos, pos}});
          pos += 2;
          break;
        default:
          kws.push_back({s, to_lower(s), {pos, pos}});
          if (rng() % 2) ents.push_back({s, EntityClass::kPerson, {pos, pos}});  // same span
          pos += 2;
          break;
      }
    }
    // Independent count of distinct spans (same-span mentions collapse).
    std::set<TokenSpan> spans;
    for (const auto& e : ents) spans.insert(e.span);
    for (const auto& k : kws) spans.insert(k.span);

    auto r = resolve_mentions(ents, kws);
    CHECK(total_occurrences(r) == spans.size());
    for (const auto& k : r) {
      CHECK(k.occurrence_count == k.positions.size());
      CHECK(k.occurrence_count >= 1);
      CHECK(k.variants.count(k.canonical) == 1);
    }
  }
}

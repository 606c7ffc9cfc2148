#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "headliner/corpus_store.hpp"

namespace headliner {

struct Token {
  std::string text;
  std::size_t char_start = 0;  // byte offsets into the source
  std::size_t char_end = 0;
  std::size_t sentence_index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Inclusive token index range.
struct TokenSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first + 1; }
  bool contains(const TokenSpan& o) const {
    return first <= o.first && o.last <= last;
  }
  friend auto operator<=>(const TokenSpan&, const TokenSpan&) = default;
};

struct EntityMention {
  std::string surface;
  EntityClass entity_class = EntityClass::kOrganization;
  TokenSpan span;

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
};

struct KeywordMention {
  std::string surface;
  std::string db_key;
  TokenSpan span;

  friend bool operator==(const KeywordMention&, const KeywordMention&) = default;
};

struct ResolvedKeyword {
  std::string canonical;
  std::set<std::string> variants;
  std::optional<EntityClass> entity_class;
  std::vector<TokenSpan> positions;
  std::size_t occurrence_count = 0;

  bool is_entity() const { return entity_class.has_value(); }

  friend bool operator==(const ResolvedKeyword&, const ResolvedKeyword&) = default;
};

// Honorifics recognised by the tokenizer, sentence splitter and resolver.
bool is_honorific(std::string_view token);

// Whitespace split, then leading/trailing `.,!?;:"'()` (and curly quotes)
// peeled into single-character tokens. Internal hyphens and apostrophes
// stay attached. The period of a known abbreviation ("Mr.", "St.") stays
// on the word. All tokens get sentence_index 0; see split_sentences.
std::vector<Token> tokenize(std::string_view text);

// A new sentence starts at the first token after `.`, `!` or `?` that is
// not itself a terminator or closing quote/bracket.
std::vector<Token> split_sentences(std::vector<Token> tokens);

// tokenize + split_sentences.
std::vector<Token> tokenize_sentences(std::string_view text);

struct EntityResources {
  std::vector<Gazetteer> gazetteers;  // matched in this order on equal length
  Gazetteer first_names{EntityClass::kPerson};
};

// Gazetteer longest match, then the acronym rule, then capitalised runs.
// Spans are sorted and never overlap. `source` is the text the tokens
// were produced from; mention surfaces are slices of it.
std::vector<EntityMention> detect_entities(std::string_view source,
                                           std::span<const Token> tokens,
                                           const EntityResources& resources);

// Greedy longest match of token n-grams (n <= 5) against the DB,
// case-insensitive, within one sentence.
inline constexpr std::size_t kMaxKeywordTokens = 5;
std::vector<KeywordMention> match_keywords(std::string_view source,
                                           std::span<const Token> tokens,
                                           const KeywordDb& db);

// Merges mentions of the same thing into resolved keywords, ordered by
// first occurrence. Rules, in order: case-insensitive equality, honorific
// stripping ("Mr. Kenny" == "Kenny"), and the surname rule (single-token
// person/keyword "Kenny" joins the only multi-token PERSON ending in it).
std::vector<ResolvedKeyword> resolve_mentions(
    std::span<const EntityMention> entities,
    std::span<const KeywordMention> keywords);

// Full pipeline on one text.
std::vector<ResolvedKeyword> extract_keywords(std::string_view text,
                                              const KeywordDb& db,
                                              const EntityResources& resources);

}  // namespace headliner

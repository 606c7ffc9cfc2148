#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace headliner {

struct ResolvedKeyword;
struct GbtModel;

enum class EntityClass { kPerson, kOrganization, kLocation };

std::string_view to_string(EntityClass c);

// Keyword -> number of past articles it appeared in. Keys are stored in
// normalize_key() form; a key that is absent has frequency 0.
//
// Instances are plain values. Share a const instance across threads for
// concurrent reads; updates produce a new value (see update_keyword_db).
class KeywordDb {
 public:
  using Frequency = std::uint64_t;

  KeywordDb() = default;

  // Adds `count` to the normalized key. A zero count is ignored.
  void add(std::string_view keyword, Frequency count);

  Frequency frequency(std::string_view keyword) const;
  bool contains(std::string_view keyword) const { return frequency(keyword) > 0; }

  Frequency max_frequency() const { return max_frequency_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Sorted by key, for deterministic output.
  const std::map<std::string, Frequency>& entries() const { return entries_; }

  // One `keyword<TAB>frequency` line per entry, sorted by key.
  std::string to_tsv() const;

  friend bool operator==(const KeywordDb&, const KeywordDb&) = default;

 private:
  std::map<std::string, Frequency> entries_;
  Frequency max_frequency_ = 0;
};

KeywordDb parse_keyword_db(std::string_view tsv);
KeywordDb load_keyword_db(const std::filesystem::path& path);

// Adds one document occurrence for every resolved keyword of a single
// article. Keywords already known are bumped under the variant the ranker
// reads; unknown ones are inserted under their canonical form.
KeywordDb update_keyword_db(KeywordDb db,
                            std::span<const ResolvedKeyword> resolved);

// Writes the DB next to `path` and renames it into place, so a failed
// write leaves the original file untouched.
void save_keyword_db_atomic(const KeywordDb& db,
                            const std::filesystem::path& path);

// A list of names for one entity class.
//
// All-caps names ("GPO", "RTE") only match their exact spelling; any other
// name matches case-insensitively.
class Gazetteer {
 public:
  explicit Gazetteer(EntityClass cls) : class_(cls) {}

  void add(std::string_view name);

  // `words` are the token texts of a candidate span.
  bool contains(std::span<const std::string_view> words) const;
  bool contains(std::string_view name) const;

  EntityClass entity_class() const { return class_; }
  std::size_t size() const { return folded_.size() + exact_.size(); }
  // Longest entry, in tokens.
  std::size_t max_tokens() const { return max_tokens_; }

 private:
  EntityClass class_;
  std::unordered_set<std::string> folded_;
  std::unordered_set<std::string> exact_;
  std::size_t max_tokens_ = 0;
};

// One name per line; blank lines and `#` comments are skipped.
Gazetteer parse_gazetteer(std::string_view text, EntityClass cls);
Gazetteer load_gazetteer(const std::filesystem::path& path, EntityClass cls);

class SentimentLexicon {
 public:
  // Throws std::invalid_argument if polarity is outside [-1, 1].
  void add(std::string_view word, double polarity);

  // 0 for unknown words. Lookup is case-insensitive.
  double polarity(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, double> entries_;
};

SentimentLexicon parse_sentiment_lexicon(std::string_view tsv);
SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& path);

struct Article {
  std::string id;
  std::string headline;
  std::string subheadline;
  std::string body;
  std::optional<std::string> source;
};

// JSON object with `body` required and `id`, `headline`, `subheadline`,
// `source` optional. Throws ParseError on malformed input.
Article parse_article_json(std::string_view json);
// `id` defaults to the file stem when the document has none.
Article load_article(const std::filesystem::path& path);
std::string article_to_json(const Article& article);

// Every `*.json` file in `dir`, sorted by file name.
std::vector<Article> load_article_dir(const std::filesystem::path& dir);

struct ShareRecord {
  std::string headline;
  std::uint64_t fb_shares = 0;
  std::uint64_t tw_shares = 0;
};

// CSV with the header `headline,fb_shares,tw_shares`, RFC 4180 quoting.
std::vector<ShareRecord> parse_share_dataset(std::string_view csv);
std::vector<ShareRecord> load_share_dataset(const std::filesystem::path& path);

inline constexpr int kModelFormatVersion = 1;

std::string model_to_json(const GbtModel& model);
GbtModel model_from_json(std::string_view json);
void save_model(const std::filesystem::path& path, const GbtModel& model);
GbtModel load_model(const std::filesystem::path& path);

// Writes `<dir>/fb.json` and `<dir>/tw.json`.
void save_model_pair(const std::filesystem::path& dir, const GbtModel& fb,
                     const GbtModel& tw);

}  // namespace headliner

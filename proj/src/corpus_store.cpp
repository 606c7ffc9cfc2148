#include "headliner/corpus_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <system_error>

#include "headliner/gbt.hpp"
#include "headliner/text.hpp"
#include "headliner/text_pipeline.hpp"

namespace headliner {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(EntityClass c) {
  switch (c) {
    case EntityClass::kPerson:
      return "PERSON";
    case EntityClass::kOrganization:
      return "ORGANIZATION";
    case EntityClass::kLocation:
      return "LOCATION";
  }
  return "?";
}

namespace {

// Splits on '\n', dropping a trailing '\r'. The final empty piece after a
// terminating newline is not returned.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    pos = nl + 1;
  }
  return out;
}

std::string_view strip_bom(std::string_view s) {
  if (s.substr(0, 3) == "\xEF\xBB\xBF") s.remove_prefix(3);
  return s;
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool all_caps(std::string_view s) {
  bool upper = false;
  for (char c : s) {
    if (c >= 'a' && c <= 'z') return false;
    if (c >= 'A' && c <= 'Z') upper = true;
  }
  return upper;
}

std::string join(std::span<const std::string_view> words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i];
  }
  return out;
}

void write_file_atomic(const fs::path& path, std::string_view contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot replace " + path.string());
  }
}

}  // namespace

// ---- KeywordDb -------------------------------------------------------------

void KeywordDb::add(std::string_view keyword, Frequency count) {
  if (count == 0) return;
  auto key = normalize_key(keyword);
  if (key.empty()) throw std::invalid_argument("empty keyword");
  auto& f = entries_[key];
  f += count;
  max_frequency_ = std::max(max_frequency_, f);
}

KeywordDb::Frequency KeywordDb::frequency(std::string_view keyword) const {
  auto it = entries_.find(normalize_key(keyword));
  return it == entries_.end() ? 0 : it->second;
}

std::string KeywordDb::to_tsv() const {
  std::string out;
  for (const auto& [k, f] : entries_) {
    out += k;
    out.push_back('\t');
    out += std::to_string(f);
    out.push_back('\n');
  }
  return out;
}

KeywordDb parse_keyword_db(std::string_view tsv) {
  KeywordDb db;
  auto lines = lines_of(strip_bom(tsv));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (trim(line).empty()) continue;
    auto tab = line.rfind('\t');
    if (tab == std::string_view::npos) throw ParseError("missing tab", i + 1);
    std::uint64_t freq = 0;
    if (!parse_uint(line.substr(tab + 1), freq)) {
      throw ParseError("frequency is not a non-negative integer", i + 1);
    }
    if (normalize_key(line.substr(0, tab)).empty()) throw ParseError("empty keyword", i + 1);
    db.add(line.substr(0, tab), freq);
  }
  return db;
}

KeywordDb load_keyword_db(const fs::path& path) {
  return parse_keyword_db(read_file(path.string()));
}

KeywordDb update_keyword_db(KeywordDb db, std::span<const ResolvedKeyword> resolved) {
  // Collect first so one article bumps each key once, even when two
  // resolved keywords share a key.
  std::vector<std::string> keys;
  for (const auto& rk : resolved) {
    std::string best = normalize_key(rk.canonical);
    auto best_f = db.frequency(best);
    for (const auto& v : rk.variants) {
      auto f = db.frequency(v);
      if (f > best_f) {
        best = normalize_key(v);
        best_f = f;
      }
    }
    if (best_f == 0 && !rk.is_entity()) continue;
    keys.push_back(std::move(best));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& k : keys) db.add(k, 1);
  return db;
}

void save_keyword_db_atomic(const KeywordDb& db, const fs::path& path) {
  write_file_atomic(path, db.to_tsv());
}

// ---- Gazetteer -------------------------------------------------------------

void Gazetteer::add(std::string_view name) {
  auto tokens = tokenize(trim(name));
  if (tokens.empty()) throw std::invalid_argument("empty gazetteer name");
  std::vector<std::string_view> words;
  for (const auto& t : tokens) words.emplace_back(t.text);
  auto joined = join(words);
  if (all_caps(joined)) {
    exact_.insert(std::move(joined));
  } else {
    folded_.insert(to_lower(joined));
  }
  max_tokens_ = std::max(max_tokens_, tokens.size());
}

bool Gazetteer::contains(std::span<const std::string_view> words) const {
  if (words.empty() || words.size() > max_tokens_) return false;
  auto joined = join(words);
  if (exact_.contains(joined)) return true;
  return folded_.contains(to_lower(joined));
}

bool Gazetteer::contains(std::string_view name) const {
  auto tokens = tokenize(trim(name));
  std::vector<std::string_view> words;
  for (const auto& t : tokens) words.emplace_back(t.text);
  return contains(std::span<const std::string_view>(words));
}

Gazetteer parse_gazetteer(std::string_view text, EntityClass cls) {
  Gazetteer g(cls);
  for (auto line : lines_of(strip_bom(text))) {
    auto name = trim(line);
    if (name.empty() || name.front() == '#') continue;
    g.add(name);
  }
  return g;
}

Gazetteer load_gazetteer(const fs::path& path, EntityClass cls) {
  return parse_gazetteer(read_file(path.string()), cls);
}

// ---- SentimentLexicon ------------------------------------------------------

void SentimentLexicon::add(std::string_view word, double polarity) {
  if (!(polarity >= -1.0 && polarity <= 1.0)) {
    throw std::invalid_argument("polarity outside [-1, 1] for '" + std::string(word) + "'");
  }
  auto key = to_lower(trim(word));
  if (key.empty()) throw std::invalid_argument("empty lexicon word");
  entries_[key] = polarity;
}

double SentimentLexicon::polarity(std::string_view word) const {
  auto it = entries_.find(to_lower(word));
  return it == entries_.end() ? 0.0 : it->second;
}

SentimentLexicon parse_sentiment_lexicon(std::string_view tsv) {
  SentimentLexicon lex;
  auto lines = lines_of(strip_bom(tsv));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = lines[i];
    if (trim(line).empty() || trim(line).front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("missing tab", i + 1);
    double p = 0.0;
    if (!parse_double(line.substr(tab + 1), p)) throw ParseError("polarity is not a number", i + 1);
    if (!(p >= -1.0 && p <= 1.0)) throw ParseError("polarity outside [-1, 1]", i + 1);
    if (trim(line.substr(0, tab)).empty()) throw ParseError("empty word", i + 1);
    lex.add(line.substr(0, tab), p);
  }
  return lex;
}

SentimentLexicon load_sentiment_lexicon(const fs::path& path) {
  return parse_sentiment_lexicon(read_file(path.string()));
}

// ---- Articles --------------------------------------------------------------

namespace {

std::string optional_string(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return {};
  if (!j[key].is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

}  // namespace

Article parse_article_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("article must be a JSON object");
  if (!j.contains("body")) throw ParseError("article has no 'body'");
  Article a;
  a.id = optional_string(j, "id");
  a.headline = optional_string(j, "headline");
  a.subheadline = optional_string(j, "subheadline");
  a.body = optional_string(j, "body");
  if (j.contains("source") && !j["source"].is_null()) a.source = optional_string(j, "source");
  return a;
}

Article load_article(const fs::path& path) {
  auto a = parse_article_json(read_file(path.string()));
  if (a.id.empty()) a.id = path.stem().string();
  return a;
}

std::string article_to_json(const Article& a) {
  json j = {{"id", a.id},
            {"headline", a.headline},
            {"subheadline", a.subheadline},
            {"body", a.body}};
  j["source"] = a.source ? json(*a.source) : json(nullptr);
  return j.dump(2) + "\n";
}

std::vector<Article> load_article_dir(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<Article> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_article(f));
  return out;
}

// ---- Share dataset ---------------------------------------------------------

namespace {

// RFC 4180 record reader. Returns false at end of input.
class CsvReader {
 public:
  explicit CsvReader(std::string_view text) : text_(text) {}

  std::size_t line() const { return line_; }

  bool next(std::vector<std::string>& fields) {
    fields.clear();
    if (pos_ >= text_.size()) return false;
    record_line_ = line_;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_++];
      if (quoted) {
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            field.push_back('"');
            ++pos_;
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
        continue;
      }
      if (c == '"') {
        if (!field.empty() || was_quoted) throw ParseError("stray quote", record_line_);
        quoted = true;
        was_quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (c == '\n') {
        ++line_;
        break;
      } else if (c == '\r') {
        // dropped; handles CRLF
      } else {
        if (was_quoted) throw ParseError("text after closing quote", record_line_);
        field.push_back(c);
      }
    }
    if (quoted) throw ParseError("unterminated quoted field", record_line_);
    fields.push_back(std::move(field));
    return true;
  }

  std::size_t record_line() const { return record_line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t record_line_ = 1;
};

}  // namespace

std::vector<ShareRecord> parse_share_dataset(std::string_view csv) {
  CsvReader reader(strip_bom(csv));
  std::vector<std::string> fields;
  if (!reader.next(fields)) throw ParseError("missing header", 1);
  for (auto& f : fields) f = std::string(trim(f));
  if (fields != std::vector<std::string>{"headline", "fb_shares", "tw_shares"}) {
    throw ParseError("header must be 'headline,fb_shares,tw_shares'", 1);
  }
  std::vector<ShareRecord> out;
  while (reader.next(fields)) {
    auto line = reader.record_line();
    if (fields.size() == 1 && trim(fields[0]).empty()) continue;
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " + std::to_string(fields.size()), line);
    }
    ShareRecord r;
    r.headline = fields[0];
    if (trim(r.headline).empty()) throw ParseError("empty headline", line);
    if (!parse_uint(fields[1], r.fb_shares)) {
      throw ParseError("fb_shares is not a non-negative integer", line);
    }
    if (!parse_uint(fields[2], r.tw_shares)) {
      throw ParseError("tw_shares is not a non-negative integer", line);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ShareRecord> load_share_dataset(const fs::path& path) {
  return parse_share_dataset(read_file(path.string()));
}

// ---- Models ----------------------------------------------------------------

std::string model_to_json(const GbtModel& model) {
  json trees = json::array();
  for (const auto& t : model.trees) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
      if (n.is_leaf()) {
        nodes.push_back({{"value", n.value}});
      } else {
        nodes.push_back({{"feature", n.feature},
                         {"threshold", n.threshold},
                         {"left", n.left},
                         {"right", n.right},
                         {"value", n.value}});
      }
    }
    trees.push_back({{"nodes", std::move(nodes)}});
  }
  json j = {{"version", kModelFormatVersion},
            {"platform", std::string(to_string(model.platform))},
            {"n_features", model.n_features},
            {"base_prediction", model.base_prediction},
            {"shrinkage", model.shrinkage},
            {"trees", std::move(trees)}};
  return j.dump() + "\n";
}

GbtModel model_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what());
  }
  try {
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != kModelFormatVersion) {
      throw ParseError("unsupported model version (expected " +
                       std::to_string(kModelFormatVersion) + ")");
    }
    GbtModel m;
    m.platform = parse_platform(j.at("platform").get<std::string>());
    m.n_features = j.at("n_features").get<std::size_t>();
    m.base_prediction = j.at("base_prediction").get<double>();
    m.shrinkage = j.at("shrinkage").get<double>();
    for (const auto& jt : j.at("trees")) {
      RegressionTree t;
      for (const auto& jn : jt.at("nodes")) {
        TreeNode n;
        n.value = jn.at("value").get<double>();
        if (jn.contains("feature")) {
          n.feature = jn.at("feature").get<int>();
          n.threshold = jn.at("threshold").get<double>();
          n.left = jn.at("left").get<int>();
          n.right = jn.at("right").get<int>();
        }
        t.nodes.push_back(n);
      }
      const auto size = static_cast<int>(t.nodes.size());
      for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        if (n.is_leaf()) continue;
        if (n.feature >= static_cast<int>(m.n_features) || n.left <= static_cast<int>(i) ||
            n.right <= static_cast<int>(i) || n.left >= size || n.right >= size) {
          throw ParseError("malformed tree node");
        }
      }
      if (t.nodes.empty()) throw ParseError("tree without nodes");
      m.trees.push_back(std::move(t));
    }
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed model: ") + e.what());
  }
}

void save_model(const fs::path& path, const GbtModel& model) {
  write_file_atomic(path, model_to_json(model));
}

GbtModel load_model(const fs::path& path) {
  return model_from_json(read_file(path.string()));
}

void save_model_pair(const fs::path& dir, const GbtModel& fb, const GbtModel& tw) {
  if (fb.platform != Platform::kFacebook || tw.platform != Platform::kTwitter) {
    throw std::invalid_argument("model pair must be (fb, tw)");
  }
  fs::create_directories(dir);
  save_model(dir / "fb.json", fb);
  save_model(dir / "tw.json", tw);
}

}  // namespace headliner

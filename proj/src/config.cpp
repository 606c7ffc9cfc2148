#include "headliner/config.hpp"

#include <charconv>
#include <stdexcept>

#include "headliner/text.hpp"

namespace headliner {

namespace fs = std::filesystem;

Config default_config() {
  const fs::path data = HEADLINER_DATA_DIR;
  Config c;
  c.paths.keyword_db = data / "keywords.tsv";
  c.paths.persons = data / "gazetteers" / "persons.txt";
  c.paths.organizations = data / "gazetteers" / "organizations.txt";
  c.paths.locations = data / "gazetteers" / "locations.txt";
  c.paths.first_names = data / "gazetteers" / "first_names.txt";
  c.paths.lexicon = data / "lexicon.tsv";
  c.paths.fb_model = data / "models" / "fb.json";
  c.paths.tw_model = data / "models" / "tw.json";
  c.paths.feed_dir = data / "articles";
  return c;
}

namespace {

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument(std::string(key) + ": not a number: '" + std::string(v) + "'");
  }
  return out;
}

long long to_int(std::string_view key, std::string_view v) {
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw std::invalid_argument(std::string(key) + ": not an integer: '" + std::string(v) + "'");
  }
  return out;
}

fs::path to_path(std::string_view v, const fs::path& base_dir) {
  if (v.empty()) return {};
  fs::path p{std::string(v)};
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return p;
}

}  // namespace

void apply_setting(Config& c, std::string_view key, std::string_view value,
                   const fs::path& base_dir) {
  key = trim(key);
  value = trim(value);
  auto& a = c.analysis;
  if (key == "lambda") {
    a.ranking.lambda = to_double(key, value);
  } else if (key == "beta") {
    a.ranking.beta = to_double(key, value);
  } else if (key == "top_k") {
    auto k = to_int(key, value);
    if (k < 1) throw std::invalid_argument("top_k must be >= 1");
    a.ranking.top_k = static_cast<std::size_t>(k);
  } else if (key == "fb_threshold") {
    a.thresholds.fb = to_double(key, value);
  } else if (key == "tw_threshold") {
    a.thresholds.tw = to_double(key, value);
  } else if (key == "sentiment_dead_zone") {
    a.sentiment_dead_zone = to_double(key, value);
  } else if (key == "host") {
    c.host = std::string(value);
  } else if (key == "port") {
    auto p = to_int(key, value);
    if (p < 0 || p > 65535) throw std::invalid_argument("port out of range");
    c.port = static_cast<int>(p);
  } else if (key == "keyword_db") {
    c.paths.keyword_db = to_path(value, base_dir);
  } else if (key == "persons") {
    c.paths.persons = to_path(value, base_dir);
  } else if (key == "organizations") {
    c.paths.organizations = to_path(value, base_dir);
  } else if (key == "locations") {
    c.paths.locations = to_path(value, base_dir);
  } else if (key == "first_names") {
    c.paths.first_names = to_path(value, base_dir);
  } else if (key == "lexicon") {
    c.paths.lexicon = to_path(value, base_dir);
  } else if (key == "fb_model") {
    c.paths.fb_model = to_path(value, base_dir);
  } else if (key == "tw_model") {
    c.paths.tw_model = to_path(value, base_dir);
  } else if (key == "feed_dir") {
    c.paths.feed_dir = to_path(value, base_dir);
  } else {
    throw std::invalid_argument("unknown setting '" + std::string(key) + "'");
  }
  a.ranking.validate();
  a.thresholds.validate();
}

Config parse_config(std::string_view text, Config base, const fs::path& base_dir) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no);
    try {
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1), base_dir);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return base;
}

Config load_config_file(const fs::path& path, Config base) {
  try {
    return parse_config(read_file(path.string()), std::move(base), path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

template <typename F>
auto load_named(const fs::path& path, const char* what, F&& loader) {
  if (path.empty()) throw IoError(std::string(what) + " path is not configured");
  try {
    return loader(path);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Resources load_resources(const ResourcePaths& paths) {
  Resources r;
  r.db = load_named(paths.keyword_db, "keyword_db", [](const fs::path& p) { return load_keyword_db(p); });
  auto gaz = [&](const fs::path& p, const char* what, EntityClass cls) {
    return load_named(p, what, [cls](const fs::path& q) { return load_gazetteer(q, cls); });
  };
  r.entities.gazetteers.push_back(gaz(paths.persons, "persons", EntityClass::kPerson));
  r.entities.gazetteers.push_back(gaz(paths.organizations, "organizations", EntityClass::kOrganization));
  r.entities.gazetteers.push_back(gaz(paths.locations, "locations", EntityClass::kLocation));
  r.entities.first_names = gaz(paths.first_names, "first_names", EntityClass::kPerson);
  r.lexicon = load_named(paths.lexicon, "lexicon", [](const fs::path& p) { return load_sentiment_lexicon(p); });
  if (!paths.fb_model.empty() && !paths.tw_model.empty()) {
    r.fb_model = load_named(paths.fb_model, "fb_model", [](const fs::path& p) { return load_model(p); });
    r.tw_model = load_named(paths.tw_model, "tw_model", [](const fs::path& p) { return load_model(p); });
    if (r.fb_model->n_features != kHeadlineFeatureCount ||
        r.tw_model->n_features != kHeadlineFeatureCount) {
      throw ParseError("shareability models must take " +
                       std::to_string(kHeadlineFeatureCount) + " features");
    }
  }
  return r;
}

}  // namespace headliner

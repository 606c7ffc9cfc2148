// headliner: command-line front end for keyword analysis, shareability
// model training, corpus evaluation, keyword DB maintenance and serving.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "headliner/analyzer.hpp"
#include "headliner/config.hpp"
#include "headliner/service.hpp"
#include "headliner/text.hpp"

namespace fs = std::filesystem;
using namespace headliner;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Flags shared by the commands that analyse text.
struct Overrides {
  std::string config_path;
  std::optional<double> lambda;
  std::optional<double> beta;
  std::optional<std::size_t> top_k;
  std::optional<double> fb_threshold;
  std::optional<double> tw_threshold;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value configuration file");
    cmd->add_option("--lambda", lambda, "local/global balance in [0,1]");
    cmd->add_option("--beta", beta, "entity boost share in [0,1]");
    cmd->add_option("--top-k", top_k, "number of keywords to report");
    cmd->add_option("--fb-threshold", fb_threshold, "Facebook alert threshold");
    cmd->add_option("--tw-threshold", tw_threshold, "Twitter alert threshold");
  }

  // defaults < config file < flags
  Config resolve() const {
    Config c = default_config();
    if (!config_path.empty()) c = load_config_file(config_path, std::move(c));
    auto& a = c.analysis;
    if (lambda) a.ranking.lambda = *lambda;
    if (beta) a.ranking.beta = *beta;
    if (top_k) a.ranking.top_k = *top_k;
    if (fb_threshold) a.thresholds.fb = *fb_threshold;
    if (tw_threshold) a.thresholds.tw = *tw_threshold;
    a.ranking.validate();
    a.thresholds.validate();
    return c;
  }
};

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

// Left-aligns in a column measured in code points, so accented names line up.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t points = 0;
  for (unsigned char c : s) points += (c & 0xC0) != 0x80;
  return points >= width ? s + " " : s + std::string(width - points, ' ');
}

void print_table(const AnalyzeResponse& r, std::ostream& out) {
  out << std::left << std::setw(32) << "Keyword" << std::setw(9) << "Weight" << std::setw(11)
      << "Frequency" << std::setw(11) << "SEO Score" << "In headline\n";
  for (const auto& s : r.keywords) {
    out << pad(s.keyword.canonical, 32) << std::left << std::setw(9) << fixed(s.weight, 3)
        << std::setw(11) << s.frequency << std::setw(11) << s.seo_score
        << (s.in_headline ? "yes" : "no") << "\n";
  }
  if (r.shareability) {
    const auto& sh = *r.shareability;
    out << "\nShareability  Facebook " << fixed(sh.fb_score, 2) << (sh.fb_alert ? " (ALERT)" : "")
        << "  Twitter " << fixed(sh.tw_score, 2) << (sh.tw_alert ? " (ALERT)" : "") << "\n";
  } else {
    out << "\nShareability  n/a\n";
  }
}

int run_analyze(const std::string& path, const std::string& format, const Overrides& ov) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    std::cerr << "error: no such file: " << path << "\n";
    return kExitUsage;
  }
  auto config = ov.resolve();
  Article article;
  try {
    article = load_article(path);
  } catch (const std::exception& e) {
    std::cerr << "error: invalid article " << path << ": " << e.what() << "\n";
    return kExitFailure;
  }
  auto resources = load_resources(config.paths);
  AnalyzeResponse response;
  try {
    response = analyze(to_request(article), resources, config.analysis);
  } catch (const RequestError& e) {
    std::cerr << "error: invalid article " << path << ": " << e.what() << "\n";
    return kExitFailure;
  }
  if (format == "json") {
    std::cout << response_body(response);
  } else {
    print_table(response, std::cout);
  }
  return kExitOk;
}

struct TrainOptions {
  std::string data;
  std::string platform;
  std::string out;
  std::string config_path;
  std::uint64_t seed = 42;
  double l2 = 1.0;
  GbtHyperparams hp;
};

int run_train(const TrainOptions& opt) {
  const Platform platform = parse_platform(opt.platform);
  Config config = default_config();
  if (!opt.config_path.empty()) config = load_config_file(opt.config_path, std::move(config));
  config.paths.fb_model.clear();
  config.paths.tw_model.clear();
  const auto resources = load_resources(config.paths);
  const auto share_res = resources.shareability(config.analysis.sentiment_dead_zone);

  auto records = load_share_dataset(opt.data);
  struct Sample {
    std::array<double, kHeadlineFeatureCount> x;
    double y;
  };
  std::vector<Sample> samples;
  std::size_t skipped = 0;
  for (const auto& r : records) {
    try {
      auto f = extract_features(r.headline, share_res);
      auto y = platform == Platform::kFacebook ? r.fb_shares : r.tw_shares;
      samples.push_back({f.to_vector(), static_cast<double>(y)});
    } catch (const std::invalid_argument&) {
      ++skipped;
    }
  }
  if (skipped > 0) std::cerr << "warning: skipped " << skipped << " headlines without words\n";
  if (samples.size() < 10) {
    std::cerr << "error: need at least 10 usable records, got " << samples.size() << "\n";
    return kExitFailure;
  }

  auto [train, test] = split_train_test(std::move(samples), 0.8, opt.seed);
  auto to_matrix = [](const std::vector<Sample>& s, std::vector<double>& y) {
    FeatureMatrix x(0, kHeadlineFeatureCount);
    for (const auto& e : s) {
      x.push_row(e.x);
      y.push_back(e.y);
    }
    return x;
  };
  std::vector<double> y_train, y_test;
  auto x_train = to_matrix(train, y_train);
  auto x_test = to_matrix(test, y_test);

  GbtHyperparams hp = opt.hp;
  hp.seed = opt.seed;
  auto gbt = train_gbt(x_train, y_train, hp, platform);
  auto ridge = train_ridge(x_train, y_train, opt.l2);
  const double gbt_mse = mse(predict_all(gbt, x_test), y_test);
  const double ridge_mse = mse(predict_all(ridge, x_test), y_test);

  save_model(opt.out, gbt);
  std::cout << "platform: " << to_string(platform) << "\n"
            << "records: " << train.size() + test.size() << " (train " << train.size()
            << ", test " << test.size() << ")\n"
            << "gbt_mse: " << fixed(gbt_mse, 6) << "\n"
            << "ridge_mse: " << fixed(ridge_mse, 6) << "\n"
            << "model: " << opt.out << "\n";
  return kExitOk;
}

int run_eval_overlap(const std::string& dir, const Overrides& ov) {
  auto config = ov.resolve();
  auto corpus = load_article_dir(dir);
  if (corpus.empty()) {
    std::cerr << "error: no articles in " << dir << "\n";
    return kExitFailure;
  }
  config.paths.fb_model.clear();
  config.paths.tw_model.clear();
  auto resources = load_resources(config.paths);
  auto r = evaluate_overlap(corpus, resources.db, resources.entities, config.analysis.ranking);
  std::cout << "articles: " << corpus.size() << "\n"
            << "at_least_1: " << fixed(100.0 * r.frac_at_least_1, 1) << "%\n"
            << "at_least_2: " << fixed(100.0 * r.frac_at_least_2, 1) << "%\n";
  return kExitOk;
}

int run_db_update(const std::string& db_path, const std::string& article_path,
                  const std::string& config_path) {
  Config config = default_config();
  if (!config_path.empty()) config = load_config_file(config_path, std::move(config));
  config.paths.keyword_db = db_path;
  config.paths.fb_model.clear();
  config.paths.tw_model.clear();
  auto resources = load_resources(config.paths);
  auto article = load_article(article_path);
  auto resolved = extract_keywords(article.body, resources.db, resources.entities);
  auto updated = update_keyword_db(resources.db, resolved);
  save_keyword_db_atomic(updated, db_path);
  std::cout << "keywords: " << resolved.size() << "\n"
            << "entries: " << resources.db.size() << " -> " << updated.size() << "\n";
  return kExitOk;
}

int run_serve(std::optional<int> port_flag, const std::string& host_flag, const Overrides& ov) {
  auto config = ov.resolve();
  if (const char* env = std::getenv(kPortEnvVar); env != nullptr && *env != '\0') {
    apply_setting(config, "port", env);
  }
  if (port_flag) config.port = *port_flag;
  if (!host_flag.empty()) config.host = host_flag;

  Service service(config, load_resources(config.paths));
  HttpServer server(service);
  int port = server.bind(config.host, config.port);
  std::cout << "listening on http://" << config.host << ":" << port << std::endl;
  server.listen();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Headline keyword and shareability assistant"};
  app.require_subcommand(1);

  std::string analyze_path, format = "table";
  Overrides analyze_ov;
  auto* analyze_cmd = app.add_subcommand("analyze", "Rank keywords and score the headline of an article");
  analyze_cmd->add_option("article", analyze_path, "article JSON file")->required();
  analyze_cmd->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
  analyze_ov.add_to(analyze_cmd);

  TrainOptions train;
  auto* train_cmd = app.add_subcommand("train", "Train a shareability model from a share dataset");
  train_cmd->add_option("--data", train.data, "CSV headline,fb_shares,tw_shares")->required();
  train_cmd->add_option("--platform", train.platform, "fb or tw")
      ->required()
      ->check(CLI::IsMember({"fb", "tw"}));
  train_cmd->add_option("--out", train.out, "model JSON output path")->required();
  train_cmd->add_option("--seed", train.seed, "train/test split seed");
  train_cmd->add_option("--n-trees", train.hp.n_trees);
  train_cmd->add_option("--max-depth", train.hp.max_depth);
  train_cmd->add_option("--shrinkage", train.hp.shrinkage);
  train_cmd->add_option("--min-leaf", train.hp.min_samples_leaf);
  train_cmd->add_option("--l2", train.l2, "ridge baseline penalty");
  train_cmd->add_option("--config", train.config_path);

  std::string corpus_dir;
  Overrides eval_ov;
  auto* eval_cmd = app.add_subcommand("eval-overlap", "Share of headlines containing top keywords");
  eval_cmd->add_option("--corpus", corpus_dir, "directory of article JSON files")->required();
  eval_ov.add_to(eval_cmd);

  std::string db_path, db_article, db_config;
  auto* db_cmd = app.add_subcommand("db", "Keyword database maintenance");
  db_cmd->require_subcommand(1);
  auto* db_update_cmd = db_cmd->add_subcommand("update", "Count one article into the keyword DB");
  db_update_cmd->add_option("--db", db_path, "keyword TSV")->required();
  db_update_cmd->add_option("--article", db_article, "article JSON file")->required();
  db_update_cmd->add_option("--config", db_config);

  std::optional<int> serve_port;
  std::string serve_host;
  Overrides serve_ov;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", serve_port, "listen port (overrides HEADLINER_PORT)");
  serve_cmd->add_option("--host", serve_host, "listen address");
  serve_ov.add_to(serve_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_path, format, analyze_ov);
    if (*train_cmd) return run_train(train);
    if (*eval_cmd) return run_eval_overlap(corpus_dir, eval_ov);
    if (*db_update_cmd) return run_db_update(db_path, db_article, db_config);
    if (*serve_cmd) return run_serve(serve_port, serve_host, serve_ov);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "headliner/analyzer.hpp"

namespace headliner {

// An empty path means "not configured". Without both model paths the
// analysis runs without shareability scores.
struct ResourcePaths {
  std::filesystem::path keyword_db;
  std::filesystem::path persons;
  std::filesystem::path organizations;
  std::filesystem::path locations;
  std::filesystem::path first_names;
  std::filesystem::path lexicon;
  std::filesystem::path fb_model;
  std::filesystem::path tw_model;
  std::filesystem::path feed_dir;
};

struct Config {
  AnalysisConfig analysis;
  ResourcePaths paths;
  std::string host = "127.0.0.1";
  int port = 8080;
};

inline constexpr const char* kPortEnvVar = "HEADLINER_PORT";

// Defaults with every resource pointing into the bundled data directory.
Config default_config();

// Applies one `key = value` setting. Relative paths are resolved against
// `base_dir`. Throws std::invalid_argument for unknown keys or bad values.
void apply_setting(Config& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base_dir = {});

// `key = value` lines, `#` comments. Settings override `base`.
Config parse_config(std::string_view text, Config base,
                    const std::filesystem::path& base_dir = {});
Config load_config_file(const std::filesystem::path& path, Config base);

// Throws ParseError / IoError naming the file that failed.
Resources load_resources(const ResourcePaths& paths);

}  // namespace headliner

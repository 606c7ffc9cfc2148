#pragma once

// Shared test fixtures and independent oracles. Nothing here calls the
// code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <optional>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "headliner/config.hpp"
#include "headliner/corpus_store.hpp"
#include "headliner/gbt.hpp"
#include "headliner/text_pipeline.hpp"

namespace headliner::testing {

inline Gazetteer gazetteer(EntityClass cls, std::initializer_list<const char*> names) {
  Gazetteer g(cls);
  for (auto n : names) g.add(n);
  return g;
}

// Small hand-written resources so expectations can be derived by hand.
inline EntityResources tiny_entities() {
  EntityResources r;
  r.gazetteers.push_back(gazetteer(EntityClass::kPerson, {"Enda Kenny", "Micheal Martin"}));
  r.gazetteers.push_back(gazetteer(EntityClass::kOrganization, {"Fine Gael", "RTE"}));
  r.gazetteers.push_back(gazetteer(EntityClass::kLocation, {"Dublin", "Cork", "Irish Republic"}));
  r.first_names = gazetteer(EntityClass::kPerson, {"Enda", "Mary", "Micheal", "Pat"});
  return r;
}

inline Resources bundled_resources(bool with_models = true) {
  auto paths = default_config().paths;
  if (!with_models) {
    paths.fb_model.clear();
    paths.tw_model.clear();
  }
  return load_resources(paths);
}

inline ResolvedKeyword keyword(const std::string& canonical, std::size_t count,
                               std::optional<EntityClass> cls = std::nullopt) {
  ResolvedKeyword k;
  k.canonical = canonical;
  k.variants = {canonical};
  k.entity_class = cls;
  for (std::size_t i = 0; i < count; ++i) k.positions.push_back({i * 10, i * 10});
  k.occurrence_count = count;
  return k;
}

// Creates a fresh directory under the system temp dir; removed on scope exit.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = std::filesystem::temp_directory_path() /
            ("headliner-test-" + std::to_string(rng()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// ---- regression oracles ------------------------------------------------------

struct BruteSplit {
  double threshold = 0.0;
  double sse = std::numeric_limits<double>::infinity();
  bool found = false;
};

// Enumerates every midpoint between consecutive distinct x values and
// computes each side's sum of squared deviations from its own mean
// (two-pass). Returns the lowest threshold among minimal-SSE candidates.
inline BruteSplit brute_force_stump(const std::vector<double>& x, const std::vector<double>& y,
                                    std::size_t min_leaf = 1) {
  std::vector<double> xs = x;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  BruteSplit best;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double t = (xs[i] + xs[i + 1]) / 2.0;
    std::vector<double> left, right;
    for (std::size_t k = 0; k < x.size(); ++k) (x[k] < t ? left : right).push_back(y[k]);
    if (left.size() < min_leaf || right.size() < min_leaf) continue;
    auto sse = [](const std::vector<double>& v) {
      double mean = 0.0;
      for (double d : v) mean += d;
      mean /= static_cast<double>(v.size());
      double s = 0.0;
      for (double d : v) s += (d - mean) * (d - mean);
      return s;
    };
    const double total = sse(left) + sse(right);
    if (total < best.sse) {
      best = {t, total, true};
    }
  }
  return best;
}

inline double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// y = sign(x - 0.5) on n uniform points.
inline void sign_step_data(std::size_t n, std::uint64_t seed, FeatureMatrix& x,
                           std::vector<double>& y) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  x = FeatureMatrix(0, 1);
  y.clear();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = u(rng);
    x.push_row(std::vector<double>{v});
    y.push_back(sign(v - 0.5));
  }
}

// Noisy nonlinear regression data with `cols` features.
inline void synthetic_regression(std::size_t n, std::size_t cols, std::uint64_t seed,
                                 FeatureMatrix& x, std::vector<double>& y) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.3);
  x = FeatureMatrix(0, cols);
  y.clear();
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : row) v = u(rng);
    x.push_row(row);
    y.push_back(std::sin(6.0 * row[0]) + (cols > 1 ? 2.0 * row[1] * row[1] : 0.0) + noise(rng));
  }
}

// CSV with `n` synthetic headlines and share counts.
inline std::string synthetic_share_csv(std::size_t n, std::uint64_t seed) {
  static const char* people[] = {"Enda Kenny", "Katie Taylor", "Gerry Adams", "Rory McIlroy"};
  static const char* places[] = {"Dublin", "Cork", "Galway", "Belfast"};
  static const char* verbs[] = {"wins", "warns", "visits", "fears", "celebrates", "meets"};
  static const char* nouns[] = {"budget", "final", "strike", "housing plan"};
  std::mt19937_64 rng(seed);
  std::string csv = "headline,fb_shares,tw_shares\n";
  for (std::size_t i = 0; i < n; ++i) {
    auto pick = [&](auto& arr) { return arr[rng() % std::size(arr)]; };
    std::string h = std::string(pick(people)) + " " + pick(verbs) + " " + pick(nouns);
    bool with_place = rng() % 2 == 0;
    if (with_place) h += std::string(" in ") + pick(places);
    const bool negative = h.find("warns") != std::string::npos || h.find("fears") != std::string::npos;
    const auto fb = (negative ? 6 : 2) + rng() % 4;
    const auto tw = (with_place ? 3 : 1) + rng() % 2;
    csv += "\"" + h + "\"," + std::to_string(fb) + "," + std::to_string(tw) + "\n";
  }
  return csv;
}

}  // namespace headliner::testing

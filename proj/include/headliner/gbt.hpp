#pragma once

// Regression machinery for the shareability models: CART regression trees,
// gradient boosting with squared loss, a ridge baseline, and evaluation
// helpers.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace headliner {

// Dense row-major matrix of samples x features.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  // Throws std::invalid_argument on ragged input.
  static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  void push_row(std::span<const double> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Internal nodes send x[feature] < threshold left. Leaves have feature -1.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Nodes in pre-order; nodes[0] is the root.
struct RegressionTree {
  std::vector<TreeNode> nodes;

  double predict(std::span<const double> x) const;
  // Number of splits on the longest root-to-leaf path.
  int depth() const;

  friend bool operator==(const RegressionTree&, const RegressionTree&) = default;
};

enum class Platform { kFacebook, kTwitter };

std::string_view to_string(Platform p);
// Accepts "fb" / "tw". Throws std::invalid_argument otherwise.
Platform parse_platform(std::string_view s);

struct GbtModel {
  Platform platform = Platform::kFacebook;
  std::size_t n_features = 0;
  double base_prediction = 0.0;
  double shrinkage = 1.0;
  std::vector<RegressionTree> trees;

  // base + shrinkage * sum of tree outputs. Throws std::invalid_argument
  // when x does not have n_features entries.
  double predict(std::span<const double> x) const;

  friend bool operator==(const GbtModel&, const GbtModel&) = default;
};

struct LinearModel {
  std::vector<double> weights;
  double intercept = 0.0;
  double l2 = 0.0;

  double predict(std::span<const double> x) const;
};

struct GbtHyperparams {
  int n_trees = 100;
  int max_depth = 3;
  double shrinkage = 0.1;
  std::size_t min_samples_leaf = 5;
  // Boosting here uses every sample at every stage, so training does not
  // draw from this; it is recorded so a run can be reproduced end to end.
  std::uint64_t seed = 0;

  void validate() const;
};

// Greedy variance-reduction CART. Candidate thresholds are midpoints
// between consecutive distinct feature values; a node becomes a leaf at
// max_depth, when no split leaves min_samples_leaf on both sides, or when
// its targets have zero variance. Leaves predict the mean target.
RegressionTree fit_tree(const FeatureMatrix& x, std::span<const double> targets,
                        const GbtHyperparams& hp);

GbtModel train_gbt(const FeatureMatrix& x, std::span<const double> y,
                   const GbtHyperparams& hp, Platform platform = Platform::kFacebook);

// Minimises sum (y - Xw - b)^2 + l2 |w|^2 with the intercept unpenalised.
// Throws std::domain_error when the normal equations are singular.
LinearModel train_ridge(const FeatureMatrix& x, std::span<const double> y, double l2);

double mse(std::span<const double> predictions, std::span<const double> targets);

template <typename Model>
std::vector<double> predict_all(const Model& model, const FeatureMatrix& x) {
  std::vector<double> out;
  out.reserve(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out.push_back(model.predict(x.row(r)));
  return out;
}

// Seeded shuffle, then the first round(fraction * n) records are the
// training set. Both sides are kept non-empty.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> split_train_test(std::vector<T> records,
                                                           double fraction,
                                                           std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split fraction must be in (0, 1)");
  }
  const auto n = records.size();
  if (n < 2) throw std::invalid_argument("need at least 2 records to split");
  std::mt19937_64 rng(seed);
  std::shuffle(records.begin(), records.end(), rng);
  auto n_train = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
  std::vector<T> test(std::make_move_iterator(records.begin() + static_cast<std::ptrdiff_t>(n_train)),
                      std::make_move_iterator(records.end()));
  records.resize(n_train);
  return {std::move(records), std::move(test)};
}

}  // namespace headliner

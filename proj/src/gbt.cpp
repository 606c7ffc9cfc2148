#include "headliner/gbt.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <numeric>
#include <string>

namespace headliner {

FeatureMatrix FeatureMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  FeatureMatrix m(0, rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) m.push_row(r);
  return m;
}

void FeatureMatrix::push_row(std::span<const double> values) {
  if (rows_ == 0 && data_.empty()) cols_ = values.size();
  if (values.size() != cols_) {
    throw std::invalid_argument("row has " + std::to_string(values.size()) +
                                " features, expected " + std::to_string(cols_));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

double RegressionTree::predict(std::span<const double> x) const {
  if (nodes.empty()) return 0.0;
  std::size_t i = 0;
  while (!nodes[i].is_leaf()) {
    const auto& n = nodes[i];
    i = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] < n.threshold
                                     ? n.left
                                     : n.right);
  }
  return nodes[i].value;
}

int RegressionTree::depth() const {
  if (nodes.empty()) return 0;
  auto rec = [&](auto&& self, int i) -> int {
    const auto& n = nodes[static_cast<std::size_t>(i)];
    if (n.is_leaf()) return 0;
    return 1 + std::max(self(self, n.left), self(self, n.right));
  };
  return rec(rec, 0);
}

std::string_view to_string(Platform p) {
  return p == Platform::kFacebook ? "fb" : "tw";
}

Platform parse_platform(std::string_view s) {
  if (s == "fb") return Platform::kFacebook;
  if (s == "tw") return Platform::kTwitter;
  throw std::invalid_argument("unknown platform '" + std::string(s) + "' (expected fb or tw)");
}

double GbtModel::predict(std::span<const double> x) const {
  if (x.size() != n_features) {
    throw std::invalid_argument("feature vector has " + std::to_string(x.size()) +
                                " entries, model expects " + std::to_string(n_features));
  }
  double sum = 0.0;
  for (const auto& t : trees) sum += t.predict(x);
  return base_prediction + shrinkage * sum;
}

double LinearModel::predict(std::span<const double> x) const {
  if (x.size() != weights.size()) {
    throw std::invalid_argument("feature vector has " + std::to_string(x.size()) +
                                " entries, model expects " + std::to_string(weights.size()));
  }
  double out = intercept;
  for (std::size_t i = 0; i < x.size(); ++i) out += weights[i] * x[i];
  return out;
}

void GbtHyperparams::validate() const {
  if (n_trees < 0) throw std::invalid_argument("n_trees must be >= 0");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (!(shrinkage > 0.0 && shrinkage <= 1.0)) {
    throw std::invalid_argument("shrinkage must be in (0, 1]");
  }
  if (min_samples_leaf < 1) throw std::invalid_argument("min_samples_leaf must be >= 1");
}

namespace {

void check_finite(std::span<const double> v, const char* what) {
  for (double d : v) {
    if (!std::isfinite(d)) throw std::invalid_argument(std::string(what) + " contain NaN or infinity");
  }
}

void check_shapes(const FeatureMatrix& x, std::span<const double> y) {
  if (x.rows() == 0) throw std::invalid_argument("no training samples");
  if (x.rows() != y.size()) {
    throw std::invalid_argument("feature rows (" + std::to_string(x.rows()) +
                                ") and targets (" + std::to_string(y.size()) + ") differ");
  }
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& x, std::span<const double> r, const GbtHyperparams& hp)
      : x_(x), r_(r), hp_(hp) {}

  RegressionTree build() {
    std::vector<std::size_t> idx(x_.rows());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    grow(idx, 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double score = 0.0;  // sum_L^2/n_L + sum_R^2/n_R, larger is better
  };

  int grow(std::vector<std::size_t>& idx, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();

    double sum = 0.0;
    for (auto i : idx) sum += r_[i];
    const double n = static_cast<double>(idx.size());
    tree_.nodes[static_cast<std::size_t>(id)].value = sum / n;

    if (depth >= hp_.max_depth || idx.size() < 2 * hp_.min_samples_leaf ||
        zero_variance(idx)) {
      return id;
    }
    auto split = best_split(idx, sum);
    if (split.feature < 0) return id;

    std::vector<std::size_t> left, right;
    for (auto i : idx) {
      (x_(i, static_cast<std::size_t>(split.feature)) < split.threshold ? left : right).push_back(i);
    }
    idx.clear();
    idx.shrink_to_fit();
    const int l = grow(left, depth + 1);
    const int r = grow(right, depth + 1);
    auto& node = tree_.nodes[static_cast<std::size_t>(id)];
    node.feature = split.feature;
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  bool zero_variance(const std::vector<std::size_t>& idx) const {
    const double first = r_[idx.front()];
    return std::all_of(idx.begin(), idx.end(), [&](auto i) { return r_[i] == first; });
  }

  // Exhaustive search. Ties keep the lowest feature index, then the lowest
  // threshold. A split must beat the unsplit node by more than rounding.
  Split best_split(const std::vector<std::size_t>& idx, double total) const {
    const std::size_t n = idx.size();
    const double parent = total * total / static_cast<double>(n);
    Split best;
    best.score = parent + 1e-12 * std::max(1.0, std::abs(parent));
    std::vector<std::size_t> order(idx);
    for (std::size_t f = 0; f < x_.cols(); ++f) {
      std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        return x_(a, f) < x_(b, f);
      });
      double left_sum = 0.0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        left_sum += r_[order[k]];
        const double lo = x_(order[k], f);
        const double hi = x_(order[k + 1], f);
        if (!(lo < hi)) continue;
        const std::size_t n_left = k + 1;
        const std::size_t n_right = n - n_left;
        if (n_left < hp_.min_samples_leaf || n_right < hp_.min_samples_leaf) continue;
        const double right_sum = total - left_sum;
        const double score = left_sum * left_sum / static_cast<double>(n_left) +
                             right_sum * right_sum / static_cast<double>(n_right);
        if (score > best.score) {
          best.feature = static_cast<int>(f);
          best.threshold = lo + (hi - lo) / 2.0;
          best.score = score;
        }
      }
    }
    return best;
  }

  const FeatureMatrix& x_;
  std::span<const double> r_;
  const GbtHyperparams& hp_;
  RegressionTree tree_;
};

}  // namespace

RegressionTree fit_tree(const FeatureMatrix& x, std::span<const double> targets,
                        const GbtHyperparams& hp) {
  check_shapes(x, targets);
  hp.validate();
  return TreeBuilder(x, targets, hp).build();
}

GbtModel train_gbt(const FeatureMatrix& x, std::span<const double> y,
                   const GbtHyperparams& hp, Platform platform) {
  check_shapes(x, y);
  hp.validate();
  check_finite(y, "targets");
  for (std::size_t r = 0; r < x.rows(); ++r) check_finite(x.row(r), "features");

  GbtModel model;
  model.platform = platform;
  model.n_features = x.cols();
  model.shrinkage = hp.shrinkage;
  model.base_prediction =
      std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());

  std::vector<double> fitted(y.size(), model.base_prediction);
  std::vector<double> residual(y.size());
  for (int m = 0; m < hp.n_trees; ++m) {
    for (std::size_t i = 0; i < y.size(); ++i) residual[i] = y[i] - fitted[i];
    auto tree = TreeBuilder(x, residual, hp).build();
    for (std::size_t i = 0; i < y.size(); ++i) {
      fitted[i] += hp.shrinkage * tree.predict(x.row(i));
    }
    model.trees.push_back(std::move(tree));
  }
  return model;
}

LinearModel train_ridge(const FeatureMatrix& x, std::span<const double> y, double l2) {
  check_shapes(x, y);
  if (!(l2 >= 0.0) || !std::isfinite(l2)) throw std::invalid_argument("l2 must be finite and >= 0");
  check_finite(y, "targets");

  const auto n = static_cast<Eigen::Index>(x.rows());
  const auto p = static_cast<Eigen::Index>(x.cols());
  Eigen::MatrixXd a(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      a(i, j) = x(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Eigen::Map<const Eigen::VectorXd> target(y.data(), n);

  // Centering removes the intercept from the penalised system.
  const Eigen::RowVectorXd x_mean = a.colwise().mean();
  const double y_mean = target.mean();
  a.rowwise() -= x_mean;
  const Eigen::VectorXd yc = target.array() - y_mean;

  Eigen::MatrixXd gram = a.transpose() * a;
  gram.diagonal().array() += l2;
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  const double scale = std::max(1.0, gram.diagonal().cwiseAbs().maxCoeff());
  bool singular = llt.info() != Eigen::Success;
  if (!singular && p > 0) {
    const Eigen::VectorXd diag = llt.matrixLLT().diagonal();
    singular = diag.minCoeff() * diag.minCoeff() < 1e-12 * scale;
  }
  if (singular) {
    throw std::domain_error("ridge normal equations are singular; use l2 > 0");
  }
  const Eigen::VectorXd w = llt.solve(a.transpose() * yc);

  LinearModel model;
  model.l2 = l2;
  model.weights.assign(w.data(), w.data() + w.size());
  model.intercept = y_mean - x_mean.dot(w);
  return model;
}

double mse(std::span<const double> predictions, std::span<const double> targets) {
  if (predictions.size() != targets.size()) {
    throw std::invalid_argument("mse: length mismatch");
  }
  if (predictions.empty()) throw std::invalid_argument("mse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const double d = predictions[i] - targets[i];
    sum += d * d;
  }
  return sum / static_cast<double>(predictions.size());
}

}  // namespace headliner

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "netfit/dataset.hpp"
#include "netfit/rng.hpp"

namespace netfit {

inline constexpr std::array<std::string_view, 6> kClassificationFeatures{
    "assort", "avg_clust", "avg_deg", "max_eigenv_c", "avg_path_length", "skew_deg_dist"};

struct LabeledDataset {
    std::vector<std::vector<double>> features;
    std::vector<std::size_t> labels;
    std::vector<std::string> class_names;
    std::vector<std::string> feature_names;

    std::size_t size() const noexcept { return labels.size(); }
    std::size_t class_count() const noexcept { return class_names.size(); }
    std::size_t feature_count() const noexcept { return feature_names.size(); }
    /// Throws ParameterError on ragged rows or out-of-range labels.
    void validate() const;
};

using ConfusionMatrix = std::vector<std::vector<std::size_t>>;

struct TreeConfig {
    std::size_t max_depth = 0;  // 0: unlimited
    std::size_t min_samples_split = 2;
    std::size_t features_per_split = 0;  // 0: all features
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0;
    std::uint32_t left = 0;
    std::uint32_t right = 0;
    std::vector<std::size_t> class_counts;

    bool is_leaf() const noexcept { return feature < 0; }
};

/// Binary CART tree; rows with x[feature] <= threshold go left.
struct TreeModel {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
    std::size_t class_count = 0;
    std::size_t feature_count = 0;

    const TreeNode& leaf_for(std::span<const double> row) const;
    std::size_t predict(std::span<const double> row) const;
    /// Fraction of the leaf's training samples in class `cls`.
    double class_fraction(std::span<const double> row, std::size_t cls) const;
    std::size_t depth() const;
    /// Number of internal nodes splitting on each feature.
    std::vector<std::size_t> split_counts() const;
};

/// Greedy Gini CART on the given rows. Splits are tried at midpoints between
/// consecutive distinct values; the first best (lowest feature index, then
/// smallest threshold) wins. Any split that separates distinct values is
/// taken, even without an impurity decrease, so XOR-like data is learnable.
/// `rng` is only consulted when features_per_split restricts the candidates.
TreeModel train_tree(const LabeledDataset& data, std::span<const std::size_t> rows, const TreeConfig& config,
                     Rng& rng);
TreeModel train_tree(const LabeledDataset& data, const TreeConfig& config = {}, Seed seed = 0);

struct ForestConfig {
    std::size_t trees = 100;
    std::size_t features_per_split = 0;  // 0: floor(sqrt(feature count))
    std::size_t max_depth = 0;
    bool bootstrap = true;
    Seed seed = 0;
    std::size_t jobs = 1;
};

struct ForestModel {
    std::vector<TreeModel> trees;
    std::vector<Seed> tree_seeds;
    std::size_t features_per_split = 0;
    std::size_t class_count = 0;

    std::vector<std::size_t> votes(std::span<const double> row) const;
    /// Majority vote; ties go to the lowest class id.
    std::size_t predict(std::span<const double> row) const;
    double vote_fraction(std::span<const double> row, std::size_t cls) const;
    std::vector<std::size_t> split_counts() const;
};

/// Tree t is grown from derive_seed(config.seed, t), so the forest does not
/// depend on config.jobs.
ForestModel train_forest(const LabeledDataset& data, const ForestConfig& config = {});

/// k disjoint folds; every class is dealt round-robin after a seeded shuffle,
/// so per-fold class counts differ by at most one. Folds are sorted.
std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const std::size_t> labels, std::size_t k,
                                                       Seed seed);

/// Trace over total. Throws DomainError for an empty or all-zero matrix.
double accuracy(const ConfusionMatrix& matrix);

/// Probability that a random positive outscores a random negative, ties
/// counting half. Throws DomainError unless both classes are present.
double roc_auc(std::span<const double> scores, const std::vector<bool>& positive);

enum class Task { domain, category, subcategory };
enum class Classifier { tree, forest };

std::string to_string(Task task);
std::string to_string(Classifier classifier);
Task parse_task(std::string_view text);
Classifier parse_classifier(std::string_view text);

/// Rows and labels for a task. The domain task keeps real rows only; category
/// and subcategory tasks drop WS_STD rows and keep `domain` when given.
/// Throws ParameterError naming any class with fewer than two samples.
LabeledDataset make_task_dataset(const DatasetTable& table, Task task, const std::optional<std::string>& domain);

struct EvalReport {
    std::string task;
    std::string classifier;
    std::string domain;
    std::vector<std::string> class_names;
    std::vector<std::string> feature_names;
    std::size_t folds = 0;
    Seed seed = 0;

    std::vector<double> fold_accuracy;
    double accuracy = 0;             // pooled over all folds
    double mean_fold_accuracy = 0;
    ConfusionMatrix confusion;       // rows: true class, columns: predicted

    /// Binary tasks only; positive class is class_names[1].
    std::optional<double> auc;
    std::vector<double> fold_auc;    // folds holding both classes
    std::optional<double> mean_fold_auc;

    std::vector<std::size_t> split_counts;  // summed over fold models
    std::vector<std::pair<std::string, std::string>> hyperparameters;
};

/// Stratified k-fold evaluation with pooled predictions. Folds train in
/// parallel; fold f uses derive_seed(seed, 1000 + f).
EvalReport evaluate(const LabeledDataset& data, Classifier classifier, std::size_t k, Seed seed,
                    const TreeConfig& tree = {}, const ForestConfig& forest = {}, std::size_t jobs = 1);

EvalReport run_task(const DatasetTable& table, Task task, Classifier classifier, std::size_t k, Seed seed,
                    const std::optional<std::string>& domain = {}, std::size_t jobs = 1);

/// Header row of class names, one row per true class.
void write_confusion_csv(std::ostream& out, const EvalReport& report);

}  // namespace netfit

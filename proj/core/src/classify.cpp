#include "netfit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "netfit/error.hpp"
#include "netfit/parallel.hpp"

namespace netfit {

void LabeledDataset::validate() const {
    if (features.size() != labels.size()) throw ParameterError("feature and label counts differ");
    for (const auto& row : features)
        if (row.size() != feature_names.size()) throw ParameterError("ragged feature row");
    for (std::size_t label : labels)
        if (label >= class_names.size()) throw ParameterError("label out of range");
}

// ---------------------------------------------------------------- trees

const TreeNode& TreeModel::leaf_for(std::span<const double> row) const {
    const TreeNode* node = &nodes.front();
    while (!node->is_leaf())
        node = &nodes[row[static_cast<std::size_t>(node->feature)] <= node->threshold ? node->left : node->right];
    return *node;
}

namespace {

std::size_t argmax(std::span<const std::size_t> counts) {
    return static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

double gini(std::span<const std::size_t> counts, std::size_t total) {
    if (total == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t c : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        sum += p * p;
    }
    return 1.0 - sum;
}

class TreeGrower {
public:
    TreeGrower(const LabeledDataset& data, const TreeConfig& config, Rng& rng)
        : data_(data), config_(config), rng_(rng) {
        model_.class_count = data.class_count();
        model_.feature_count = data.feature_count();
        features_.resize(data.feature_count());
        std::iota(features_.begin(), features_.end(), std::size_t{0});
    }

    TreeModel grow(std::vector<std::size_t> rows) {
        model_.nodes.emplace_back();
        build(0, std::move(rows), 0);
        return std::move(model_);
    }

private:
    struct Split {
        std::size_t feature = 0;
        double threshold = 0;
        double impurity = 0;
        bool found = false;
    };

    std::vector<std::size_t> tally(const std::vector<std::size_t>& rows) const {
        std::vector<std::size_t> counts(data_.class_count(), 0);
        for (std::size_t r : rows) ++counts[data_.labels[r]];
        return counts;
    }

    std::vector<std::size_t> candidate_features() {
        const std::size_t d = features_.size();
        const std::size_t want = config_.features_per_split;
        if (want == 0 || want >= d) return features_;
        std::vector<std::size_t> pool = features_;
        for (std::size_t i = 0; i < want; ++i) std::swap(pool[i], pool[i + rng_.uniform_index(d - i)]);
        pool.resize(want);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    Split best_split(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& counts) {
        Split best;
        best.impurity = std::numeric_limits<double>::infinity();
        const std::size_t n = rows.size();
        std::vector<std::size_t> order = rows;
        std::vector<std::size_t> left(counts.size());
        std::vector<std::size_t> right(counts.size());
        for (std::size_t f : candidate_features()) {
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return data_.features[a][f] < data_.features[b][f];
            });
            std::fill(left.begin(), left.end(), 0);
            right = counts;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const std::size_t label = data_.labels[order[i]];
                ++left[label];
                --right[label];
                const double here = data_.features[order[i]][f];
                const double next = data_.features[order[i + 1]][f];
                if (!(here < next)) continue;
                const std::size_t nl = i + 1;
                const std::size_t nr = n - nl;
                const double impurity =
                    (static_cast<double>(nl) * gini(left, nl) + static_cast<double>(nr) * gini(right, nr)) /
                    static_cast<double>(n);
                if (impurity < best.impurity) {
                    double threshold = here + (next - here) / 2.0;
                    if (!(threshold < next)) threshold = here;
                    best = {f, threshold, impurity, true};
                }
            }
        }
        return best;
    }

    void build(std::size_t index, std::vector<std::size_t> rows, std::size_t depth) {
        auto counts = tally(rows);
        const bool pure = std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }) <= 1;
        const bool depth_capped = config_.max_depth != 0 && depth >= config_.max_depth;
        Split split;
        if (!pure && !depth_capped && rows.size() >= config_.min_samples_split) split = best_split(rows, counts);
        model_.nodes[index].class_counts = std::move(counts);
        if (!split.found) return;

        std::vector<std::size_t> left_rows;
        std::vector<std::size_t> right_rows;
        for (std::size_t r : rows)
            (data_.features[r][split.feature] <= split.threshold ? left_rows : right_rows).push_back(r);

        const auto left = static_cast<std::uint32_t>(model_.nodes.size());
        model_.nodes.emplace_back();
        const auto right = static_cast<std::uint32_t>(model_.nodes.size());
        model_.nodes.emplace_back();
        auto& node = model_.nodes[index];
        node.feature = static_cast<int>(split.feature);
        node.threshold = split.threshold;
        node.left = left;
        node.right = right;
        build(left, std::move(left_rows), depth + 1);
        build(right, std::move(right_rows), depth + 1);
    }

    const LabeledDataset& data_;
    const TreeConfig& config_;
    Rng& rng_;
    TreeModel model_;
    std::vector<std::size_t> features_;
};

}  // namespace

std::size_t TreeModel::predict(std::span<const double> row) const { return argmax(leaf_for(row).class_counts); }

double TreeModel::class_fraction(std::span<const double> row, std::size_t cls) const {
    const auto& counts = leaf_for(row).class_counts;
    const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
    return total == 0 ? 0.0 : static_cast<double>(counts[cls]) / static_cast<double>(total);
}

std::size_t TreeModel::depth() const {
    std::vector<std::size_t> level(nodes.size(), 0);
    std::size_t deepest = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        deepest = std::max(deepest, level[i]);
        if (!nodes[i].is_leaf()) level[nodes[i].left] = level[nodes[i].right] = level[i] + 1;
    }
    return deepest;
}

std::vector<std::size_t> TreeModel::split_counts() const {
    std::vector<std::size_t> counts(feature_count, 0);
    for (const auto& node : nodes)
        if (!node.is_leaf()) ++counts[static_cast<std::size_t>(node.feature)];
    return counts;
}

TreeModel train_tree(const LabeledDataset& data, std::span<const std::size_t> rows, const TreeConfig& config,
                     Rng& rng) {
    data.validate();
    if (rows.empty()) throw ParameterError("cannot train a tree on zero samples");
    TreeGrower grower(data, config, rng);
    return grower.grow(std::vector<std::size_t>(rows.begin(), rows.end()));
}

TreeModel train_tree(const LabeledDataset& data, const TreeConfig& config, Seed seed) {
    std::vector<std::size_t> rows(data.size());
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    Rng rng(seed);
    return train_tree(data, rows, config, rng);
}

// ---------------------------------------------------------------- forests

std::vector<std::size_t> ForestModel::votes(std::span<const double> row) const {
    std::vector<std::size_t> tally(class_count, 0);
    for (const auto& tree : trees) ++tally[tree.predict(row)];
    return tally;
}

std::size_t ForestModel::predict(std::span<const double> row) const { return argmax(votes(row)); }

double ForestModel::vote_fraction(std::span<const double> row, std::size_t cls) const {
    return static_cast<double>(votes(row)[cls]) / static_cast<double>(trees.size());
}

std::vector<std::size_t> ForestModel::split_counts() const {
    std::vector<std::size_t> total;
    for (const auto& tree : trees) {
        const auto counts = tree.split_counts();
        total.resize(counts.size(), 0);
        for (std::size_t i = 0; i < counts.size(); ++i) total[i] += counts[i];
    }
    return total;
}

ForestModel train_forest(const LabeledDataset& data, const ForestConfig& config) {
    data.validate();
    if (data.size() < 2) throw ParameterError("a forest needs at least two samples");
    if (config.trees == 0) throw ParameterError("a forest needs at least one tree");

    ForestModel forest;
    forest.class_count = data.class_count();
    forest.features_per_split =
        config.features_per_split != 0
            ? config.features_per_split
            : std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(data.feature_count()))));
    forest.trees.resize(config.trees);
    forest.tree_seeds.resize(config.trees);

    TreeConfig tree_config;
    tree_config.max_depth = config.max_depth;
    tree_config.features_per_split = forest.features_per_split;

    parallel_for(config.trees, config.jobs, [&](std::size_t t) {
        const Seed seed = derive_seed(config.seed, t);
        Rng rng(seed);
        std::vector<std::size_t> rows(data.size());
        if (config.bootstrap) {
            for (auto& r : rows) r = rng.uniform_index(data.size());
        } else {
            std::iota(rows.begin(), rows.end(), std::size_t{0});
        }
        forest.tree_seeds[t] = seed;
        forest.trees[t] = train_tree(data, rows, tree_config, rng);
    });
    return forest;
}

// ---------------------------------------------------------------- evaluation

std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const std::size_t> labels, std::size_t k,
                                                       Seed seed) {
    if (k < 2) throw ParameterError("k-fold needs k >= 2");
    if (k > labels.size()) throw ParameterError("more folds than samples");

    const std::size_t classes =
        labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + std::size_t{1};
    std::vector<std::vector<std::size_t>> by_class(classes);
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);

    Rng rng(seed);
    std::vector<std::vector<std::size_t>> folds(k);
    std::size_t next = 0;
    for (auto& members : by_class) {
        rng.shuffle(members.begin(), members.end());
        for (std::size_t i : members) {
            folds[next].push_back(i);
            next = (next + 1) % k;
        }
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

double accuracy(const ConfusionMatrix& matrix) {
    std::size_t hits = 0;
    std::size_t total = 0;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (matrix[i].size() != matrix.size()) throw DomainError("confusion matrix must be square");
        hits += matrix[i][i];
        for (std::size_t c : matrix[i]) total += c;
    }
    if (total == 0) throw DomainError("confusion matrix is empty");
    return static_cast<double>(hits) / static_cast<double>(total);
}

double roc_auc(std::span<const double> scores, const std::vector<bool>& positive) {
    if (scores.size() != positive.size()) throw ParameterError("scores and labels differ in length");
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Midranks: sum of the ranks of the positives, ties sharing their mean rank.
    double positive_rank_sum = 0.0;
    std::size_t positives = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t t = i; t < j; ++t)
            if (positive[order[t]]) {
                positive_rank_sum += midrank;
                ++positives;
            }
        i = j;
    }
    const std::size_t negatives = n - positives;
    if (positives == 0 || negatives == 0) throw DomainError("AUC needs both classes");
    const double p = static_cast<double>(positives);
    return (positive_rank_sum - p * (p + 1.0) / 2.0) / (p * static_cast<double>(negatives));
}

std::string to_string(Task task) {
    switch (task) {
        case Task::domain: return "domain";
        case Task::category: return "category";
        case Task::subcategory: return "subcategory";
    }
    return "?";
}

std::string to_string(Classifier classifier) { return classifier == Classifier::tree ? "tree" : "forest"; }

Task parse_task(std::string_view text) {
    if (text == "domain") return Task::domain;
    if (text == "category") return Task::category;
    if (text == "subcategory") return Task::subcategory;
    throw ParameterError("unknown task '" + std::string(text) + "'");
}

Classifier parse_classifier(std::string_view text) {
    if (text == "tree") return Classifier::tree;
    if (text == "forest") return Classifier::forest;
    throw ParameterError("unknown classifier '" + std::string(text) + "'");
}

LabeledDataset make_task_dataset(const DatasetTable& table, Task task, const std::optional<std::string>& domain) {
    std::vector<std::string_view> order;
    switch (task) {
        case Task::domain: order.assign(kDomains.begin(), kDomains.end()); break;
        case Task::category: order.assign(kCategories.begin(), kCategories.end()); break;
        case Task::subcategory: order.assign(kSubcategories.begin(), kSubcategories.end()); break;
    }

    std::vector<const DatasetRow*> kept;
    for (const auto& row : table.rows) {
        if (domain && row.domain != *domain) continue;
        if (task == Task::domain) {
            if (row.category != "real") continue;
        } else if (row.subcategory == "WS_STD") {
            continue;
        }
        kept.push_back(&row);
    }
    auto label_of = [task](const DatasetRow& row) -> const std::string& {
        return task == Task::domain ? row.domain : task == Task::category ? row.category : row.subcategory;
    };

    std::vector<std::size_t> support(order.size(), 0);
    for (const auto* row : kept) {
        auto it = std::find(order.begin(), order.end(), label_of(*row));
        if (it == order.end())
            throw ParameterError("row " + row->name + " has no " + to_string(task) + " label");
        ++support[static_cast<std::size_t>(it - order.begin())];
    }

    LabeledDataset data;
    data.feature_names.assign(kClassificationFeatures.begin(), kClassificationFeatures.end());
    std::vector<std::size_t> remap(order.size(), 0);
    for (std::size_t c = 0; c < order.size(); ++c) {
        // The binary task always keeps both classes so class 1 stays "model".
        if (support[c] == 0 && task != Task::category) continue;
        if (support[c] < 2)
            throw ParameterError("class '" + std::string(order[c]) + "' has " + std::to_string(support[c]) +
                                 " samples; at least 2 are required");
        remap[c] = data.class_names.size();
        data.class_names.emplace_back(order[c]);
    }
    if (data.class_names.size() < 2) throw ParameterError("task needs at least two classes");

    for (const auto* row : kept) {
        const auto& f = row->features;
        data.features.push_back({f.assort, f.avg_clust, f.avg_deg, f.max_eigenv_c, f.avg_path_length, f.skew_deg_dist});
        const auto c = static_cast<std::size_t>(std::find(order.begin(), order.end(), label_of(*row)) - order.begin());
        data.labels.push_back(remap[c]);
    }
    return data;
}

EvalReport evaluate(const LabeledDataset& data, Classifier classifier, std::size_t k, Seed seed,
                    const TreeConfig& tree, const ForestConfig& forest, std::size_t jobs) {
    data.validate();
    const auto folds = stratified_kfold(data.labels, k, seed);
    const std::size_t classes = data.class_count();
    const bool binary = classes == 2;

    struct FoldResult {
        ConfusionMatrix confusion;
        std::vector<double> scores;
        std::vector<bool> positive;
        std::vector<std::size_t> splits;
    };
    std::vector<FoldResult> results(folds.size());

    parallel_for(folds.size(), jobs, [&](std::size_t f) {
        std::vector<bool> in_test(data.size(), false);
        for (std::size_t i : folds[f]) in_test[i] = true;
        LabeledDataset subset;
        subset.class_names = data.class_names;
        subset.feature_names = data.feature_names;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (in_test[i]) continue;
            subset.features.push_back(data.features[i]);
            subset.labels.push_back(data.labels[i]);
        }

        const Seed fold_seed = derive_seed(seed, 1000 + f);
        std::optional<TreeModel> tree_model;
        std::optional<ForestModel> forest_model;
        if (classifier == Classifier::tree) {
            tree_model = train_tree(subset, tree, fold_seed);
        } else {
            ForestConfig config = forest;
            config.seed = fold_seed;
            forest_model = train_forest(subset, config);
        }

        auto& out = results[f];
        out.splits = tree_model ? tree_model->split_counts() : forest_model->split_counts();
        out.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
        for (std::size_t i : folds[f]) {
            const auto& row = data.features[i];
            const std::size_t predicted = tree_model ? tree_model->predict(row) : forest_model->predict(row);
            ++out.confusion[data.labels[i]][predicted];
            if (binary) {
                out.scores.push_back(tree_model ? tree_model->class_fraction(row, 1)
                                                : forest_model->vote_fraction(row, 1));
                out.positive.push_back(data.labels[i] == 1);
            }
        }
    });

    EvalReport report;
    report.classifier = to_string(classifier);
    report.class_names = data.class_names;
    report.feature_names = data.feature_names;
    report.folds = k;
    report.seed = seed;
    report.confusion.assign(classes, std::vector<std::size_t>(classes, 0));
    report.split_counts.assign(data.feature_count(), 0);

    std::vector<double> pooled_scores;
    std::vector<bool> pooled_positive;
    for (const auto& fold : results) {
        for (std::size_t i = 0; i < fold.splits.size(); ++i) report.split_counts[i] += fold.splits[i];
        for (std::size_t a = 0; a < classes; ++a)
            for (std::size_t b = 0; b < classes; ++b) report.confusion[a][b] += fold.confusion[a][b];
        report.fold_accuracy.push_back(accuracy(fold.confusion));
        if (!binary) continue;
        const auto positives = std::count(fold.positive.begin(), fold.positive.end(), true);
        if (positives > 0 && static_cast<std::size_t>(positives) < fold.positive.size())
            report.fold_auc.push_back(roc_auc(fold.scores, fold.positive));
        pooled_scores.insert(pooled_scores.end(), fold.scores.begin(), fold.scores.end());
        pooled_positive.insert(pooled_positive.end(), fold.positive.begin(), fold.positive.end());
    }

    report.accuracy = accuracy(report.confusion);
    report.mean_fold_accuracy =
        std::accumulate(report.fold_accuracy.begin(), report.fold_accuracy.end(), 0.0) /
        static_cast<double>(report.fold_accuracy.size());
    if (binary) {
        report.auc = roc_auc(pooled_scores, pooled_positive);
        if (!report.fold_auc.empty())
            report.mean_fold_auc = std::accumulate(report.fold_auc.begin(), report.fold_auc.end(), 0.0) /
                                   static_cast<double>(report.fold_auc.size());
    }

    if (classifier == Classifier::tree) {
        report.hyperparameters = {{"max_depth", std::to_string(tree.max_depth)},
                                  {"min_samples_split", std::to_string(tree.min_samples_split)},
                                  {"features_per_split", std::to_string(tree.features_per_split)}};
    } else {
        const std::size_t per_split =
            forest.features_per_split != 0
                ? forest.features_per_split
                : std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(std::sqrt(data.feature_count()))));
        report.hyperparameters = {{"trees", std::to_string(forest.trees)},
                                  {"features_per_split", std::to_string(per_split)},
                                  {"max_depth", std::to_string(forest.max_depth)},
                                  {"bootstrap", forest.bootstrap ? "true" : "false"}};
    }
    return report;
}

EvalReport run_task(const DatasetTable& table, Task task, Classifier classifier, std::size_t k, Seed seed,
                    const std::optional<std::string>& domain, std::size_t jobs) {
    const auto data = make_task_dataset(table, task, domain);
    auto report = evaluate(data, classifier, k, seed, TreeConfig{}, ForestConfig{}, jobs);
    report.task = to_string(task);
    report.domain = domain.value_or("");
    return report;
}

void write_confusion_csv(std::ostream& out, const EvalReport& report) {
    out << "true\\predicted";
    for (const auto& c : report.class_names) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < report.confusion.size(); ++i) {
        out << report.class_names[i];
        for (std::size_t v : report.confusion[i]) out << ',' << v;
        out << '\n';
    }
}

}  // namespace netfit

#pragma once

#include <array>
#include <span>
#include <vector>

#include "betatrace/rng.hpp"

namespace betatrace {

// Column-major sample matrix shared by the tree learners.
struct ColMatrix {
    std::vector<std::vector<double>> columns;  // [feature][sample]
    int n_samples = 0;
    int n_features = 0;

    static ColMatrix from_rows(const std::vector<std::vector<double>>& rows);
    double at(int sample, int feature) const {
        return columns[static_cast<std::size_t>(feature)][static_cast<std::size_t>(sample)];
    }
};

// Per-feature sample orderings (ascending value), computed once per fit and
// reused by every tree.
std::vector<std::vector<int>> sorted_feature_orders(const ColMatrix& x);

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    int leaf = -1;  // payload index when a leaf
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
    std::vector<std::array<double, 3>> leaf_probs;  // classification payload
    std::vector<double> leaf_values;                // regression payload

    int descend(std::span<const double> x) const;  // returns payload index
    std::array<double, 3> predict_probs(std::span<const double> x) const;
    double predict_value(std::span<const double> x) const;
};

struct TreeGrowParams {
    int max_depth = 0;           // 0 = unbounded
    int mtry = 0;                // features examined per node, 0 = all
    double min_weight_leaf = 1;  // minimum total weight per child
    double min_gain = 1e-12;
};

// Weighted Gini classification tree. y holds class ordinals 0..2, weight
// holds per-sample weights (bootstrap counts); weight 0 excludes a sample.
DecisionTree grow_classification_tree(const ColMatrix& x,
                                      const std::vector<std::vector<int>>& sorted_orders,
                                      std::span<const int> y, std::span<const double> weight,
                                      const TreeGrowParams& params, Rng& rng);

// Least-squares regression tree on real-valued targets (all weights 1).
// Leaves carry the target mean; boosting rewrites them afterwards.
DecisionTree grow_regression_tree(const ColMatrix& x,
                                  const std::vector<std::vector<int>>& sorted_orders,
                                  std::span<const double> targets, const TreeGrowParams& params,
                                  Rng& rng);

}  // namespace betatrace

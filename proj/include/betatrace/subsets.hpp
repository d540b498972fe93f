#pragma once

#include <string>
#include <vector>

#include "betatrace/datasets.hpp"

namespace betatrace {

// Sorted, duplicate-free selection of AC indices in 1..63 with a display name
// matching the report's range notation ("1:28", "16:46", "ALL", "POS-LIME").
struct SubsetSpec {
    std::vector<int> indices;
    std::string name;

    void validate(bool allow_empty = false) const;
};

// First k coefficients {1..k}, k in 2..30.
SubsetSpec first_k(int k);
// Last t coefficients {64-t..63}, t in 2..35.
SubsetSpec last_t(int t);
// Centered window {31-z..31+z}, z in 1..15.
SubsetSpec centered(int z);
// The full range {1..63}, named "ALL".
SubsetSpec all_coefficients();
// Explicit index list; sorted and deduplicated.
SubsetSpec subset_from_indices(std::vector<int> indices, std::string name);

// Keeps only the selected feature dimensions, ascending index order.
FeatureTable project(const FeatureTable& features, const SubsetSpec& subset);
std::vector<double> project_row(const std::vector<double>& x, const SubsetSpec& subset);

// CLI forms: `first:K`, `last:T`, `center:Z`, `all`, `list:1,5,9`,
// `pos-lime:<contributions file>`, `abs-lime:<contributions file>`.
SubsetSpec parse_subset(const std::string& spec);

// One index per line.
void write_subset(const SubsetSpec& subset, const std::string& path);
SubsetSpec read_subset(const std::string& path, std::string name);

}  // namespace betatrace

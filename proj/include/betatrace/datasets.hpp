#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "betatrace/features.hpp"
#include "betatrace/labels.hpp"

namespace betatrace {

enum class Split { kTrain, kTest };

std::string_view to_string(Split split);
Split parse_split(std::string_view text);

struct ManifestRow {
    std::string path;  // as written in the manifest, usually relative
    ClassLabel label = ClassLabel::kReal;
    Split split = Split::kTrain;
};

// Image list with labels and train/test assignment. Paths are unique and are
// resolved against base_dir (the manifest file's directory).
struct DatasetManifest {
    std::vector<ManifestRow> rows;
    std::string base_dir;

    std::string resolve(const ManifestRow& row) const;
    void validate() const;  // unique paths
};

DatasetManifest read_manifest(const std::string& path);
void write_manifest(const DatasetManifest& manifest, const std::string& path);

// One labelled feature vector; id is the originating image path.
struct FeatureRow {
    std::string id;
    ClassLabel label = ClassLabel::kReal;
    std::vector<double> x;
};

struct FeatureTable {
    std::vector<FeatureRow> rows;
    int dim = 63;

    void validate() const;  // uniform dimension, finite values
};

// Cache format: `path,label,beta_1,...,beta_63` (no header), values written
// losslessly. Re-writing an unchanged table is byte-identical.
void write_feature_cache(const FeatureTable& table, const std::string& path);
FeatureTable read_feature_cache(const std::string& path);

// Per-class stratified shuffle split; train gets round(fraction * n) rows of
// each class. Deterministic in the seed. Requires at least one row per class.
std::pair<FeatureTable, FeatureTable> split_train_test(const FeatureTable& rows,
                                                       double train_fraction,
                                                       std::uint64_t seed);

// Shared stratification core; mask[i] == true means row i goes to train.
std::vector<char> stratified_split_mask(const std::vector<ClassLabel>& labels,
                                        double train_fraction, std::uint64_t seed);

// Uniform random reduction of every class to the minimum class count,
// without replacement; surviving rows keep their original order.
FeatureTable undersample(const FeatureTable& train, std::uint64_t seed);

// Per-class beta targets for the synthetic generator.
struct SynthProfiles {
    std::array<std::array<double, 63>, 3> beta{};  // [class][ac index - 1]

    void validate() const;  // all entries >= 0 and finite
};

// Magnitude-tiered curves (distinct scale per class across all indices).
SynthProfiles tiered_profiles();
// Classes coincide below AC index 31 and separate only at 31..63.
SynthProfiles high_frequency_separated_profiles();
// Classes separate only at AC indices 1..28; identical above.
SynthProfiles low_frequency_separated_profiles();
// Same flat value everywhere, all classes.
SynthProfiles flat_profiles(double value);

SynthProfiles read_profiles(const std::string& path);
void write_profiles(const SynthProfiles& profiles, const std::string& path);

struct SynthOptions {
    int n_per_class = 100;
    int image_size = 128;  // square, multiple of 8
    std::uint64_t seed = 1;
    double train_fraction = 0.85;
    double dc_mean = 1024.0;
    double dc_std = 64.0;
};

struct SynthResult {
    DatasetManifest manifest;
    // Generator-side re-measurement of each written image (ground truth for
    // oracles); same schema as a feature cache.
    FeatureTable realized;
    double clamped_fraction = 0.0;  // clipped pixels / total pixels
    // Realized per-class mean beta and the standard error of that mean.
    std::array<std::array<double, 63>, 3> class_mean{};
    std::array<std::array<double, 63>, 3> class_sem{};
};

// Draws per-block coefficients (AC index i ~ Laplace(0, beta_i), DC ~
// Gaussian(dc_mean, dc_std)), inverse-transforms, clamps to [0,255], and
// writes `<out_dir>/images/*.png` plus `<out_dir>/manifest.csv` and
// `<out_dir>/realized.csv`. Deterministic in the seed for any worker count.
SynthResult synth_generate(const SynthProfiles& profiles, const SynthOptions& options,
                           const std::string& out_dir);

}  // namespace betatrace

#include "betatrace/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "betatrace/errors.hpp"
#include "betatrace/parallel.hpp"
#include "betatrace/rng.hpp"
#include "betatrace/spectral.hpp"

namespace fs = std::filesystem;

namespace betatrace {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto* begin = t.data();
    const auto* end = t.data() + t.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw IoError(where + ": bad numeric field '" + text + "'");
    }
    return value;
}

void format_double(std::string& out, double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out += buf;
}

}  // namespace

std::string_view to_string(Split split) {
    return split == Split::kTrain ? "train" : "test";
}

Split parse_split(std::string_view text) {
    if (text == "train") return Split::kTrain;
    if (text == "test") return Split::kTest;
    throw IoError("parse_split: unknown split '" + std::string(text) + "' (expected train|test)");
}

std::string DatasetManifest::resolve(const ManifestRow& row) const {
    fs::path p(row.path);
    if (p.is_absolute() || base_dir.empty()) return row.path;
    return (fs::path(base_dir) / p).string();
}

void DatasetManifest::validate() const {
    std::unordered_set<std::string> seen;
    for (const auto& row : rows) {
        if (!seen.insert(row.path).second) {
            throw DataError("manifest: duplicate path '" + row.path + "'");
        }
    }
}

DatasetManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("read_manifest: cannot open '" + path + "'");

    DatasetManifest manifest;
    manifest.base_dir = fs::path(path).parent_path().string();

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (line_no == 1 && stripped == "path,label,split") continue;  // header
        const auto fields = split_csv_line(stripped);
        if (fields.size() != 3) {
            throw IoError("read_manifest: " + path + ":" + std::to_string(line_no) +
                          ": expected 3 fields, got " + std::to_string(fields.size()));
        }
        manifest.rows.push_back(ManifestRow{trim(fields[0]), parse_label(trim(fields[1])),
                                            parse_split(trim(fields[2]))});
    }
    manifest.validate();
    return manifest;
}

void write_manifest(const DatasetManifest& manifest, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_manifest: cannot open '" + path + "' for writing");
    out << "path,label,split\n";
    for (const auto& row : manifest.rows) {
        out << row.path << ',' << to_string(row.label) << ',' << to_string(row.split) << '\n';
    }
    if (!out) throw IoError("write_manifest: write failed for '" + path + "'");
}

void FeatureTable::validate() const {
    for (const auto& row : rows) {
        if (static_cast<int>(row.x.size()) != dim) {
            throw DataError("feature table: row '" + row.id + "' has dimension " +
                            std::to_string(row.x.size()) + ", expected " + std::to_string(dim));
        }
        for (double v : row.x) {
            if (!std::isfinite(v)) {
                throw DataError("feature table: non-finite value in row '" + row.id + "'");
            }
        }
    }
}

void write_feature_cache(const FeatureTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_feature_cache: cannot open '" + path + "' for writing");
    std::string line;
    for (const auto& row : table.rows) {
        line.clear();
        line += row.id;
        line += ',';
        line += to_string(row.label);
        for (double v : row.x) {
            line += ',';
            format_double(line, v);
        }
        line += '\n';
        out << line;
    }
    if (!out) throw IoError("write_feature_cache: write failed for '" + path + "'");
}

FeatureTable read_feature_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("read_feature_cache: cannot open '" + path + "'");

    FeatureTable table;
    table.dim = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto fields = split_csv_line(stripped);
        if (fields.size() < 3) {
            throw IoError("read_feature_cache: " + path + ":" + std::to_string(line_no) +
                          ": too few fields");
        }
        FeatureRow row;
        row.id = trim(fields[0]);
        row.label = parse_label(trim(fields[1]));
        row.x.reserve(fields.size() - 2);
        for (std::size_t i = 2; i < fields.size(); ++i) {
            row.x.push_back(parse_double(fields[i], "read_feature_cache: " + path + ":" +
                                                        std::to_string(line_no)));
        }
        if (table.dim < 0) {
            table.dim = static_cast<int>(row.x.size());
        } else if (static_cast<int>(row.x.size()) != table.dim) {
            throw IoError("read_feature_cache: " + path + ":" + std::to_string(line_no) +
                          ": inconsistent dimension");
        }
        table.rows.push_back(std::move(row));
    }
    if (table.dim < 0) table.dim = 63;
    table.validate();
    return table;
}

std::vector<char> stratified_split_mask(const std::vector<ClassLabel>& labels,
                                        double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
        throw InvalidArgument("stratified_split_mask: train_fraction must be in (0, 1)");
    }
    std::array<std::vector<int>, 3> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[static_cast<std::size_t>(ordinal(labels[i]))].push_back(static_cast<int>(i));
    }
    for (int c = 0; c < kNumClasses; ++c) {
        if (by_class[static_cast<std::size_t>(c)].empty()) {
            throw DataError("stratified_split_mask: class '" +
                            std::string(to_string(label_from_ordinal(c))) + "' has no rows");
        }
    }

    Rng rng(seed);
    std::vector<char> mask(labels.size(), 0);
    for (int c = 0; c < kNumClasses; ++c) {
        auto& idx = by_class[static_cast<std::size_t>(c)];
        Rng class_rng = rng.derive(static_cast<std::uint64_t>(c));
        class_rng.shuffle(idx);
        const auto n_train = static_cast<std::size_t>(
            std::llround(train_fraction * static_cast<double>(idx.size())));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            mask[static_cast<std::size_t>(idx[i])] = (i < n_train) ? 1 : 0;
        }
    }
    return mask;
}

std::pair<FeatureTable, FeatureTable> split_train_test(const FeatureTable& rows,
                                                       double train_fraction,
                                                       std::uint64_t seed) {
    std::vector<ClassLabel> labels;
    labels.reserve(rows.rows.size());
    for (const auto& row : rows.rows) labels.push_back(row.label);
    const auto mask = stratified_split_mask(labels, train_fraction, seed);

    FeatureTable train;
    FeatureTable test;
    train.dim = test.dim = rows.dim;
    for (std::size_t i = 0; i < rows.rows.size(); ++i) {
        (mask[i] ? train : test).rows.push_back(rows.rows[i]);
    }
    return {std::move(train), std::move(test)};
}

FeatureTable undersample(const FeatureTable& train, std::uint64_t seed) {
    std::array<std::vector<int>, 3> by_class;
    for (std::size_t i = 0; i < train.rows.size(); ++i) {
        by_class[static_cast<std::size_t>(ordinal(train.rows[i].label))].push_back(
            static_cast<int>(i));
    }
    std::size_t min_count = SIZE_MAX;
    for (int c = 0; c < kNumClasses; ++c) {
        const auto count = by_class[static_cast<std::size_t>(c)].size();
        if (count == 0) {
            throw DataError("undersample: class '" +
                            std::string(to_string(label_from_ordinal(c))) + "' has no rows");
        }
        min_count = std::min(min_count, count);
    }

    Rng rng(seed);
    std::vector<char> keep(train.rows.size(), 0);
    for (int c = 0; c < kNumClasses; ++c) {
        const auto& idx = by_class[static_cast<std::size_t>(c)];
        Rng class_rng = rng.derive(static_cast<std::uint64_t>(c));
        const auto chosen = class_rng.sample_without_replacement(
            static_cast<int>(idx.size()), static_cast<int>(min_count));
        for (int pick : chosen) keep[static_cast<std::size_t>(idx[static_cast<std::size_t>(pick)])] = 1;
    }

    FeatureTable out;
    out.dim = train.dim;
    for (std::size_t i = 0; i < train.rows.size(); ++i) {
        if (keep[i]) out.rows.push_back(train.rows[i]);
    }
    return out;
}

void SynthProfiles::validate() const {
    for (const auto& profile : beta) {
        for (double v : profile) {
            if (!std::isfinite(v) || v < 0.0) {
                throw InvalidArgument("synth profiles: beta targets must be finite and >= 0");
            }
        }
    }
}

namespace {

constexpr std::array<double, 3> kClassScales = {1.0, 1.5, 2.25};

std::array<double, 63> scaled_curve(double scale, double floor_v, double amp, double decay,
                                    int from = 1, int to = 63) {
    std::array<double, 63> out{};
    for (int i = 1; i <= 63; ++i) {
        if (i < from || i > to) continue;
        out[static_cast<std::size_t>(i - 1)] =
            scale * (floor_v + amp * std::exp(-static_cast<double>(i - from) / decay));
    }
    return out;
}

}  // namespace

SynthProfiles tiered_profiles() {
    SynthProfiles p;
    for (int c = 0; c < kNumClasses; ++c) {
        p.beta[static_cast<std::size_t>(c)] =
            scaled_curve(kClassScales[static_cast<std::size_t>(c)], 3.0, 15.0, 12.0);
    }
    return p;
}

SynthProfiles high_frequency_separated_profiles() {
    SynthProfiles p;
    for (int c = 0; c < kNumClasses; ++c) {
        auto& profile = p.beta[static_cast<std::size_t>(c)];
        for (int i = 1; i <= 30; ++i) profile[static_cast<std::size_t>(i - 1)] = 4.0;
        const double level = 2.5 * kClassScales[static_cast<std::size_t>(c)];
        for (int i = 31; i <= 63; ++i) profile[static_cast<std::size_t>(i - 1)] = level;
    }
    return p;
}

SynthProfiles low_frequency_separated_profiles() {
    SynthProfiles p;
    for (int c = 0; c < kNumClasses; ++c) {
        auto& profile = p.beta[static_cast<std::size_t>(c)];
        const auto low = scaled_curve(kClassScales[static_cast<std::size_t>(c)], 6.0, 12.0, 10.0, 1, 28);
        profile = low;
        for (int i = 29; i <= 63; ++i) profile[static_cast<std::size_t>(i - 1)] = 2.0;
    }
    return p;
}

SynthProfiles flat_profiles(double value) {
    SynthProfiles p;
    for (auto& profile : p.beta) profile.fill(value);
    return p;
}

SynthProfiles read_profiles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("read_profiles: cannot open '" + path + "'");
    SynthProfiles p;
    std::string line;
    int row = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        if (row >= 3) throw IoError("read_profiles: more than 3 profile rows in '" + path + "'");
        const auto fields = split_csv_line(stripped);
        if (fields.size() != 63) {
            throw IoError("read_profiles: " + path + ":" + std::to_string(line_no) +
                          ": expected 63 values, got " + std::to_string(fields.size()));
        }
        for (std::size_t i = 0; i < 63; ++i) {
            p.beta[static_cast<std::size_t>(row)][i] =
                parse_double(fields[i], "read_profiles: " + path);
        }
        ++row;
    }
    if (row != 3) throw IoError("read_profiles: expected 3 profile rows, got " + std::to_string(row));
    p.validate();
    return p;
}

void write_profiles(const SynthProfiles& profiles, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_profiles: cannot open '" + path + "' for writing");
    out << "# beta targets, one row per class (real, gan, dm)\n";
    std::string line;
    for (const auto& profile : profiles.beta) {
        line.clear();
        for (std::size_t i = 0; i < 63; ++i) {
            if (i > 0) line += ',';
            format_double(line, profile[i]);
        }
        line += '\n';
        out << line;
    }
}

SynthResult synth_generate(const SynthProfiles& profiles, const SynthOptions& options,
                           const std::string& out_dir) {
    profiles.validate();
    if (options.image_size < 16 || options.image_size % 8 != 0) {
        throw InvalidArgument("synth_generate: image_size must be a multiple of 8, >= 16");
    }
    if (options.n_per_class < 1) {
        throw InvalidArgument("synth_generate: n_per_class must be >= 1");
    }
    if (options.dc_std < 0.0) throw InvalidArgument("synth_generate: dc_std must be >= 0");

    fs::create_directories(fs::path(out_dir) / "images");

    const int n_total = options.n_per_class * kNumClasses;
    const int blocks_per_side = options.image_size / 8;

    struct PerImage {
        FeatureRow realized;
        std::int64_t clamped = 0;
    };
    std::vector<PerImage> generated(static_cast<std::size_t>(n_total));

    DatasetManifest manifest;
    manifest.base_dir = out_dir;
    manifest.rows.resize(static_cast<std::size_t>(n_total));

    const Rng root(options.seed);

    parallel_for(static_cast<std::size_t>(n_total), [&](std::size_t image_idx) {
        const int c = static_cast<int>(image_idx) / options.n_per_class;
        const int k = static_cast<int>(image_idx) % options.n_per_class;
        const auto& target = profiles.beta[static_cast<std::size_t>(c)];

        Rng rng = root.derive(image_idx);
        GrayImage image(options.image_size, options.image_size);
        std::int64_t clamped = 0;

        for (int bj = 0; bj < blocks_per_side; ++bj) {
            for (int bi = 0; bi < blocks_per_side; ++bi) {
                ZigzagVector scan;
                scan.coeffs[0] = rng.normal(options.dc_mean, options.dc_std);
                for (int i = 1; i < 64; ++i) {
                    scan.coeffs[static_cast<std::size_t>(i)] =
                        rng.laplace(0.0, target[static_cast<std::size_t>(i - 1)]);
                }
                const Block8 spatial = idct2_8x8(inverse_zigzag(scan));
                for (int y = 0; y < 8; ++y) {
                    for (int x = 0; x < 8; ++x) {
                        const double v = std::round(spatial.at(y, x));
                        double clipped = v;
                        if (clipped < 0.0) clipped = 0.0;
                        if (clipped > 255.0) clipped = 255.0;
                        if (clipped != v) ++clamped;
                        image.at(bi * 8 + x, bj * 8 + y) = static_cast<std::uint8_t>(clipped);
                    }
                }
            }
        }

        char name[64];
        std::snprintf(name, sizeof(name), "images/%s_%04d.png",
                      std::string(to_string(label_from_ordinal(c))).c_str(), k);
        const std::string rel_path(name);
        write_png_gray(image, (fs::path(out_dir) / rel_path).string());

        const BetaExtraction measured = extract_beta_vector(image);
        FeatureRow row;
        row.id = rel_path;
        row.label = label_from_ordinal(c);
        row.x.assign(measured.beta.values.begin(), measured.beta.values.end());

        generated[image_idx].realized = std::move(row);
        generated[image_idx].clamped = clamped;
        manifest.rows[image_idx] =
            ManifestRow{rel_path, label_from_ordinal(c), Split::kTrain};
    });

    // 85/15 (configurable) stratified assignment.
    std::vector<ClassLabel> labels;
    labels.reserve(static_cast<std::size_t>(n_total));
    for (const auto& row : manifest.rows) labels.push_back(row.label);
    const auto mask = stratified_split_mask(labels, options.train_fraction,
                                            root.derive(0x511e7ULL).seed());

    SynthResult result;
    std::int64_t total_clamped = 0;
    result.realized.dim = 63;
    for (std::size_t i = 0; i < generated.size(); ++i) {
        manifest.rows[i].split = mask[i] ? Split::kTrain : Split::kTest;
        result.realized.rows.push_back(std::move(generated[i].realized));
        total_clamped += generated[i].clamped;
    }
    result.manifest = std::move(manifest);
    result.clamped_fraction =
        static_cast<double>(total_clamped) /
        (static_cast<double>(n_total) * options.image_size * options.image_size);

    // Realized per-class mean curve and its standard error.
    std::array<std::array<double, 63>, 3> sum{};
    std::array<std::array<double, 63>, 3> sumsq{};
    std::array<double, 3> counts{};
    for (const auto& row : result.realized.rows) {
        const auto c = static_cast<std::size_t>(ordinal(row.label));
        counts[c] += 1.0;
        for (std::size_t i = 0; i < 63; ++i) {
            sum[c][i] += row.x[i];
            sumsq[c][i] += row.x[i] * row.x[i];
        }
    }
    for (std::size_t c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < 63; ++i) {
            const double mean = sum[c][i] / counts[c];
            const double var = std::max(0.0, sumsq[c][i] / counts[c] - mean * mean);
            result.class_mean[c][i] = mean;
            result.class_sem[c][i] = std::sqrt(var / counts[c]);
        }
    }

    write_manifest(result.manifest, (fs::path(out_dir) / "manifest.csv").string());
    write_feature_cache(result.realized, (fs::path(out_dir) / "realized.csv").string());
    write_profiles(profiles, (fs::path(out_dir) / "targets.csv").string());
    return result;
}

}  // namespace betatrace

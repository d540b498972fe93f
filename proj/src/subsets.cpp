#include "betatrace/subsets.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "betatrace/errors.hpp"
#include "betatrace/lime.hpp"

namespace betatrace {

void SubsetSpec::validate(bool allow_empty) const {
    if (!allow_empty && indices.empty()) {
        throw InvalidArgument("subset '" + name + "' is empty");
    }
    int prev = 0;
    for (int idx : indices) {
        if (idx < 1 || idx > 63) {
            throw InvalidArgument("subset '" + name + "': index " + std::to_string(idx) +
                                  " outside 1..63");
        }
        if (idx <= prev) {
            throw InvalidArgument("subset '" + name + "': indices must be strictly ascending");
        }
        prev = idx;
    }
}

namespace {

SubsetSpec make_range(int lo, int hi) {
    SubsetSpec s;
    s.indices.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i) s.indices.push_back(i);
    s.name = std::to_string(lo) + ":" + std::to_string(hi);
    return s;
}

int parse_int(const std::string& text, const std::string& where) {
    int value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw InvalidArgument(where + ": bad integer '" + text + "'");
    }
    return value;
}

}  // namespace

SubsetSpec first_k(int k) {
    if (k < 2 || k > 30) {
        throw InvalidArgument("first_k: k must be in 2..30, got " + std::to_string(k));
    }
    return make_range(1, k);
}

SubsetSpec last_t(int t) {
    if (t < 2 || t > 35) {
        throw InvalidArgument("last_t: t must be in 2..35, got " + std::to_string(t));
    }
    return make_range(64 - t, 63);
}

SubsetSpec centered(int z) {
    if (z < 1 || z > 15) {
        throw InvalidArgument("centered: z must be in 1..15, got " + std::to_string(z));
    }
    return make_range(31 - z, 31 + z);
}

SubsetSpec all_coefficients() {
    SubsetSpec s = make_range(1, 63);
    s.name = "ALL";
    return s;
}

SubsetSpec subset_from_indices(std::vector<int> indices, std::string name) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    SubsetSpec s{std::move(indices), std::move(name)};
    s.validate(/*allow_empty=*/true);
    return s;
}

FeatureTable project(const FeatureTable& features, const SubsetSpec& subset) {
    subset.validate();
    for (int idx : subset.indices) {
        if (idx > features.dim) {
            throw InvalidArgument("project: subset index " + std::to_string(idx) +
                                  " exceeds table dimension " + std::to_string(features.dim));
        }
    }
    FeatureTable out;
    out.dim = static_cast<int>(subset.indices.size());
    out.rows.reserve(features.rows.size());
    for (const auto& row : features.rows) {
        FeatureRow projected;
        projected.id = row.id;
        projected.label = row.label;
        projected.x = project_row(row.x, subset);
        out.rows.push_back(std::move(projected));
    }
    return out;
}

std::vector<double> project_row(const std::vector<double>& x, const SubsetSpec& subset) {
    std::vector<double> out;
    out.reserve(subset.indices.size());
    for (int idx : subset.indices) out.push_back(x[static_cast<std::size_t>(idx - 1)]);
    return out;
}

SubsetSpec parse_subset(const std::string& spec) {
    if (spec == "all") return all_coefficients();

    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw InvalidArgument("parse_subset: unrecognized subset '" + spec + "'");
    }
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);

    if (kind == "first") return first_k(parse_int(arg, "parse_subset"));
    if (kind == "last") return last_t(parse_int(arg, "parse_subset"));
    if (kind == "center") return centered(parse_int(arg, "parse_subset"));
    if (kind == "list") {
        std::vector<int> indices;
        std::stringstream ss(arg);
        std::string field;
        while (std::getline(ss, field, ',')) indices.push_back(parse_int(field, "parse_subset"));
        auto s = subset_from_indices(std::move(indices), "list:" + arg);
        s.validate();
        return s;
    }
    if (kind == "pos-lime") return pos_lime(read_contributions(arg));
    if (kind == "abs-lime") return abs_lime(read_contributions(arg));
    throw InvalidArgument("parse_subset: unrecognized subset '" + spec + "'");
}

void write_subset(const SubsetSpec& subset, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("write_subset: cannot open '" + path + "' for writing");
    for (int idx : subset.indices) out << idx << '\n';
}

SubsetSpec read_subset(const std::string& path, std::string name) {
    std::ifstream in(path);
    if (!in) throw IoError("read_subset: cannot open '" + path + "'");
    std::vector<int> indices;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        indices.push_back(parse_int(line.substr(0, line.find('\r')), "read_subset: " + path));
    }
    return subset_from_indices(std::move(indices), std::move(name));
}

}  // namespace betatrace

#include "betatrace/classifiers/standardizer.hpp"

#include <cmath>
#include <string>

#include "betatrace/errors.hpp"

namespace betatrace {

Standardizer Standardizer::fit(const FeatureTable& table) {
    if (table.rows.empty()) throw DataError("Standardizer::fit: empty table");
    const auto d = static_cast<std::size_t>(table.dim);
    const double n = static_cast<double>(table.rows.size());

    Standardizer s;
    s.mean.assign(d, 0.0);
    s.std_dev.assign(d, 0.0);
    s.zero_variance.assign(d, 0);

    for (const auto& row : table.rows) {
        for (std::size_t f = 0; f < d; ++f) s.mean[f] += row.x[f];
    }
    for (std::size_t f = 0; f < d; ++f) s.mean[f] /= n;
    for (const auto& row : table.rows) {
        for (std::size_t f = 0; f < d; ++f) {
            const double delta = row.x[f] - s.mean[f];
            s.std_dev[f] += delta * delta;
        }
    }

    int flagged = 0;
    for (std::size_t f = 0; f < d; ++f) {
        s.std_dev[f] = std::sqrt(s.std_dev[f] / n);
        if (s.std_dev[f] == 0.0) {
            s.std_dev[f] = 1.0;
            s.zero_variance[f] = 1;
            ++flagged;
        }
    }
    if (flagged > 0) {
        log_warning("standardizer: " + std::to_string(flagged) +
                    " zero-variance feature(s), std forced to 1");
    }
    return s;
}

std::vector<double> Standardizer::apply(std::span<const double> x) const {
    std::vector<double> out(x.begin(), x.end());
    apply_in_place(out);
    return out;
}

void Standardizer::apply_in_place(std::vector<double>& x) const {
    if (x.size() != mean.size()) {
        throw InvalidArgument("Standardizer::apply: dimension mismatch");
    }
    for (std::size_t f = 0; f < x.size(); ++f) x[f] = (x[f] - mean[f]) / std_dev[f];
}

FeatureTable Standardizer::apply(const FeatureTable& table) const {
    FeatureTable out = table;
    for (auto& row : out.rows) apply_in_place(row.x);
    return out;
}

}  // namespace betatrace

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsimon/distribution.hpp"
#include "nsimon/multiset.hpp"

namespace nsimon {

/// KL(P || Q) = sum P(y) log2(P(y) / Q(y)), with 0 log 0 = 0. Throws
/// DivergenceError if P puts mass where Q has none, DimensionError on
/// mismatched outcome spaces.
double kl_divergence(const Distribution& p, const Distribution& q);

/// max_y |P(y) - Q(y)|.
double kolmogorov_distance(const Distribution& p, const Distribution& q);

/// Half the L1 distance.
double total_variation(const Distribution& p, const Distribution& q);

/// Normalized counts. Throws EmptyError for an empty multiset.
Distribution empirical_distribution(const MeasurementMultiset& m);

struct QualityRow {
    double kl = 0.0;
    double kolmogorov = 0.0;
    double tau = 0.0;
};

/// tau-hat from m, then KL(empirical || model(tau-hat)) and the Kolmogorov
/// distance to the same model.
QualityRow quality_report(const MeasurementMultiset& m, const BitVec& s);

struct NamedQualityRow {
    std::string technique;
    QualityRow row;
};

/// CSV with header `technique,KL,K,tau`.
void write_quality_csv(std::ostream& out, const std::vector<NamedQualityRow>& rows);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
};

/// Pearson goodness of fit of observed cell counts to cell probabilities.
/// Cells with zero expected probability are dropped; any count in such a
/// cell makes the fit fail outright (p = 0).
ChiSquareResult chi_square_test(const std::vector<std::uint64_t>& observed, const std::vector<double>& expected);

}  // namespace nsimon

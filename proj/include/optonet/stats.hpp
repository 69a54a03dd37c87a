#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "optonet/metrics.hpp"
#include "optonet/topology.hpp"

namespace optonet::stats {

struct MetricSummary {
    std::string metric;
    double mean = 0, std_dev = 0, min = 0, max = 0;
};

struct DatasetSummary {
    std::vector<MetricSummary> rows;  // one per metric, canonical order
    bool sample_std = false;          // population std unless asked otherwise
};

DatasetSummary summarize(const std::vector<metrics::MetricVector>& corpus,
                         bool sample_std = false);

// Pearson correlation; NaN when either column is constant.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

struct CorrelationReport {
    std::vector<std::string> metric_names;
    std::vector<std::vector<double>> matrix;  // NaN marks undefined cells
    // Mean |r| over the defined off-diagonal cells.
    double avg_abs_correlation = 0;
    std::vector<std::string> constant_metrics;  // excluded from the average
};

CorrelationReport pearson_matrix(const std::vector<metrics::MetricVector>& corpus,
                                 const std::vector<std::string>& metric_names);

inline constexpr double kOutlierZ = 3.0;

struct OutlierRow {
    std::string topology;
    std::vector<double> z_scores;  // metric_names order
    std::vector<std::string> flagged;
    double max_abs_z = 0;
};

struct OutlierReport {
    std::vector<std::string> metric_names;
    std::vector<OutlierRow> rows;
    std::size_t outlier_count = 0;  // topologies with >= 1 flag
};

// z-scores against the corpus mean/std per metric; a constant metric
// (std = 0) contributes z = 0 everywhere.
OutlierReport detect_outliers(const std::vector<std::string>& topology_names,
                              const std::vector<metrics::MetricVector>& corpus);

struct KsResult {
    double statistic = 0;  // D
    double p_value = 0;
    std::size_t n_a = 0, n_b = 0;
};

// Two-sample Kolmogorov-Smirnov: D = sup |ECDF difference|, p from the
// asymptotic Kolmogorov distribution with the standard small-sample
// continuity correction on sqrt(effective n).
KsResult ks2(std::vector<double> a, std::vector<double> b);

// Q(lambda) = 2 sum_j (-1)^{j-1} exp(-2 j^2 lambda^2), summed to convergence.
double kolmogorov_q(double lambda);

struct ValidationRow {
    std::string property;
    KsResult ks;       // sizes 0 and NaN values when a pool is empty
    bool defined = false;
};

// Distribution-level comparison of two corpora: pooled node degrees (split
// into n <= 40 and n > 40 topologies), hop diameters, normalized-Laplacian
// eigenvalues, and link fibre lengths.
std::vector<ValidationRow> validate_synthetic(const std::vector<Topology>& real_corpus,
                                              const std::vector<Topology>& synthetic_corpus);

// Spearman rank correlation (average ranks on ties).
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Shapiro-Francia normality test (Blom scores; Royston's 1993 normal
// approximation of ln(1-W')). Needs 5 <= n <= 5000; returns NaN on a
// constant sample. w_out receives the W' statistic when non-null.
double shapiro_francia_p(std::vector<double> sample, double* w_out = nullptr);

struct NormalityRow {
    std::string metric;
    double w_statistic = 0;
    double p_value = 0;
};

struct LinearityRow {
    std::string metric_a, metric_b;
    double pearson_r = 0, spearman_rho = 0, gap = 0;  // gap = |rho_s| - |r|
};

// No pass/fail semantics: normality per metric plus metric pairs whose rank
// correlation beats the linear one by more than kNonlinearGap (monotone but
// nonlinear relationships).
inline constexpr double kNormalityAlpha = 0.05;
inline constexpr double kNonlinearGap = 0.1;

struct DiagnosticsReport {
    std::vector<NormalityRow> normality;
    std::size_t normal_count = 0;  // p > kNormalityAlpha
    std::vector<LinearityRow> nonlinear_pairs;
    std::size_t pair_count = 0;  // pairs evaluated
};

DiagnosticsReport diagnostics(const std::vector<metrics::MetricVector>& corpus,
                              const std::vector<std::string>& metric_names);

}  // namespace optonet::stats

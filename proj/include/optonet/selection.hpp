#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "optonet/metrics.hpp"

namespace optonet::sel {

// Rows = topologies, columns = named features.
struct FeatureMatrix {
    std::vector<std::string> row_names;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> values;  // [row][column]
    bool standardized = false;

    std::size_t rows() const { return values.size(); }
    std::size_t cols() const { return column_names.size(); }
    std::size_t column_index(const std::string& name) const;  // throws InputError
    std::vector<double> column(std::size_t index) const;
};

// 21 metric columns plus the derived normalized_aspl_km (aspl_km / km
// diameter), which the spatial candidate pool needs.
FeatureMatrix make_feature_matrix(const std::vector<std::string>& topology_names,
                                  const std::vector<metrics::MetricVector>& corpus);

FeatureMatrix select_columns(const FeatureMatrix& f, const std::vector<std::string>& names);

// Column-wise z-scores (population std). Constant columns are an error
// naming the metric. Idempotent.
FeatureMatrix standardize(const FeatureMatrix& f);

struct PcaModel {
    std::vector<std::vector<double>> components;  // [component][feature]
    std::vector<double> explained_variance_ratio; // per kept component
    double cumulative_ratio = 0;
};

struct PcaResult {
    PcaModel model;
    std::vector<std::vector<double>> projection;  // [row][component]
};

// Top eigenpairs of the covariance of a standardized matrix. Sign
// convention: each component's largest-|loading| entry is positive.
PcaResult pca_fit(const FeatureMatrix& standardized, std::size_t dims = 2);

struct MetricPools {
    std::vector<std::string> structural;  // 11
    std::vector<std::string> spatial;     // 7
    std::vector<std::string> spectral;    // 3
    static MetricPools defaults();
};

inline constexpr std::array<std::string_view, 4> kLevels = {"structural", "spatial", "spectral",
                                                            "combined"};

struct SubsetChoice {
    std::string level;
    std::vector<std::string> metrics;  // 3, in lexicographic order
    double cumulative_ratio = 0;       // PC1+PC2 explained variance
    double mean_abs_correlation = 0;
};

// Exhaustive 3-of-pool search per category, minimizing the 2-D PCA
// cumulative explained-variance ratio; ties prefer the less-correlated
// triple, then lexicographic order.
std::vector<SubsetChoice> select_metric_subsets(const FeatureMatrix& features,
                                                const MetricPools& pools);

inline constexpr double kKmeansShiftTol = 1e-4;
inline constexpr int kKmeansMaxIters = 300;
inline constexpr int kKmeansRestarts = 10;

struct KmeansResult {
    std::vector<int> labels;
    std::vector<std::vector<double>> centroids;
    double inertia = 0;
};

// k-means++ seeding, Lloyd iterations to centroid shift < kKmeansShiftTol
// (or 300 iterations), best inertia over 10 restarts. Deterministic in seed.
KmeansResult kmeans(const std::vector<std::vector<double>>& points, int k, std::uint64_t seed);

inline constexpr double kSvmDualityGap = 1e-6;

struct SvmClassifier {
    int positive_class = 0;
    std::vector<double> w;  // data dimensions
    double bias = 0;
    double margin = 0;  // 1 / |w|
};

struct SvmEvaluation {
    double accuracy = 0;
    double margin = 0;  // mean (or min, behind the flag) of per-classifier margins
    std::vector<SvmClassifier> classifiers;
};

// One-vs-rest soft-margin linear SVMs (hinge loss, default C = 1), trained
// by deterministic dual coordinate descent with the bias folded in as an
// augmented regularized feature. Accuracy is the training argmax rule.
SvmEvaluation svm_evaluate(const std::vector<std::vector<double>>& points,
                           const std::vector<int>& labels, int k, double c = 1.0,
                           bool min_aggregation = false);

struct LevelReport {
    std::string level;
    std::vector<std::string> metrics;  // columns clustered at this level
    int k = 0;
    std::vector<int> labels;
    std::vector<std::vector<double>> centroids;
    double svm_accuracy = 0;
    double svm_margin = 0;
    std::vector<SvmClassifier> classifiers;
    PcaResult pca;
};

struct SweepCell {
    std::string level;
    int k = 0;
    double margin = 0;
    double accuracy = 0;
};

struct PipelineReport {
    std::vector<std::string> topology_names;
    std::vector<SubsetChoice> subsets;
    std::vector<SweepCell> sweep;  // k in 3..7 x 4 levels
    int optimal_k = 0;             // argmax combined-level margin, ties -> smaller k
    std::vector<LevelReport> levels;
};

inline constexpr int kSweepMinK = 3;
inline constexpr int kSweepMaxK = 7;

// Full selection pipeline: subset search, then per level and per k:
// standardize -> 2-D PCA -> k-means++ -> SVM margin; the combined level
// (union of the three chosen triples) picks the cluster count.
PipelineReport run_pipeline(const FeatureMatrix& features, std::uint64_t seed,
                            const MetricPools& pools = MetricPools::defaults(), double svm_c = 1.0,
                            bool min_aggregation = false);

// Pearson between each projection component and each feature column.
// [component][feature] alongside the feature names.
struct PcaCorrelation {
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> rho;  // [component][feature]
};
PcaCorrelation pca_metric_correlation(const PcaResult& pca, const FeatureMatrix& features);

struct WsdSliceRow {
    std::string name;
    double nodes = 0;
    double aspl_km = 0;
    double wsd = 0;
    int wsd_cluster = 0;
};

// Per-topology (size, mean shortest path, WSD) table with 1-D k-means
// labels on the WSD axis for slicing a large corpus.
std::vector<WsdSliceRow> wsd_slice(const FeatureMatrix& features, int wsd_clusters,
                                   std::uint64_t seed);

}  // namespace optonet::sel

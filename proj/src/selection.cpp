#include "optonet/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "optonet/errors.hpp"
#include "optonet/rng.hpp"
#include "optonet/spectral.hpp"
#include "optonet/stats.hpp"

namespace optonet::sel {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}
}  // namespace

std::size_t FeatureMatrix::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < column_names.size(); ++i) {
        if (column_names[i] == name) return i;
    }
    throw InputError("selection: unknown feature '" + name + "'");
}

std::vector<double> FeatureMatrix::column(std::size_t index) const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& row : values) out.push_back(row[index]);
    return out;
}

FeatureMatrix make_feature_matrix(const std::vector<std::string>& topology_names,
                                  const std::vector<metrics::MetricVector>& corpus) {
    if (topology_names.size() != corpus.size()) {
        throw InputError("selection: name/vector count mismatch");
    }
    if (corpus.empty()) throw InputError("selection: empty corpus");

    FeatureMatrix f;
    f.row_names = topology_names;
    const auto& names = metrics::MetricVector::field_names();
    f.column_names.reserve(names.size() + 1);
    for (auto name : names) f.column_names.emplace_back(name);
    f.column_names.emplace_back("normalized_aspl_km");

    f.values.reserve(corpus.size());
    for (const auto& v : corpus) {
        std::vector<double> row;
        row.reserve(names.size() + 1);
        for (std::size_t i = 0; i < names.size(); ++i) row.push_back(v.field(i));
        row.push_back(v.aspl_km / v.diameter_km);
        f.values.push_back(std::move(row));
    }
    return f;
}

FeatureMatrix select_columns(const FeatureMatrix& f, const std::vector<std::string>& names) {
    FeatureMatrix out;
    out.row_names = f.row_names;
    out.column_names = names;
    out.standardized = f.standardized;
    std::vector<std::size_t> idx;
    idx.reserve(names.size());
    for (const auto& name : names) idx.push_back(f.column_index(name));
    out.values.reserve(f.rows());
    for (const auto& row : f.values) {
        std::vector<double> r;
        r.reserve(idx.size());
        for (std::size_t i : idx) r.push_back(row[i]);
        out.values.push_back(std::move(r));
    }
    return out;
}

FeatureMatrix standardize(const FeatureMatrix& f) {
    if (f.rows() < 2) throw InputError("selection: standardize needs >= 2 rows");
    FeatureMatrix out = f;
    const auto n = static_cast<double>(f.rows());
    for (std::size_t c = 0; c < f.cols(); ++c) {
        double mean = 0.0;
        for (const auto& row : f.values) mean += row[c];
        mean /= n;
        double var = 0.0;
        for (const auto& row : f.values) var += (row[c] - mean) * (row[c] - mean);
        var /= n;
        if (var == 0.0) {
            throw InputError("selection: feature '" + f.column_names[c] +
                             "' is constant; cannot standardize");
        }
        const double inv_std = 1.0 / std::sqrt(var);
        for (auto& row : out.values) row[c] = (row[c] - mean) * inv_std;
    }
    out.standardized = true;
    return out;
}

PcaResult pca_fit(const FeatureMatrix& standardized, std::size_t dims) {
    if (!standardized.standardized) {
        throw InputError("selection: pca_fit expects a standardized matrix");
    }
    const std::size_t features = standardized.cols();
    const std::size_t n = standardized.rows();
    if (dims < 1 || dims > features) {
        throw InputError("selection: pca dims outside [1, #features]");
    }

    spectral::SymmetricMatrix cov(features);
    for (std::size_t a = 0; a < features; ++a) {
        for (std::size_t b = a; b < features; ++b) {
            double s = 0.0;
            for (std::size_t r = 0; r < n; ++r) {
                s += standardized.values[r][a] * standardized.values[r][b];
            }
            cov.set(a, b, s / static_cast<double>(n));
        }
    }

    const auto eig = spectral::eigen_symmetric(cov);  // ascending
    double total = 0.0;
    for (double lambda : eig.eigenvalues) total += std::max(0.0, lambda);
    if (total <= 0.0) throw ComputeError("selection: degenerate covariance");

    PcaResult out;
    out.model.components.reserve(dims);
    out.model.explained_variance_ratio.reserve(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const std::size_t src = features - 1 - d;  // largest first
        std::vector<double> component = eig.eigenvectors[src];
        // Sign convention: largest-|loading| entry positive.
        std::size_t arg = 0;
        for (std::size_t i = 1; i < component.size(); ++i) {
            if (std::fabs(component[i]) > std::fabs(component[arg])) arg = i;
        }
        if (component[arg] < 0.0) {
            for (double& v : component) v = -v;
        }
        out.model.components.push_back(std::move(component));
        out.model.explained_variance_ratio.push_back(std::max(0.0, eig.eigenvalues[src]) / total);
    }
    out.model.cumulative_ratio =
        std::accumulate(out.model.explained_variance_ratio.begin(),
                        out.model.explained_variance_ratio.end(), 0.0);

    out.projection.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<double> p(dims, 0.0);
        for (std::size_t d = 0; d < dims; ++d) {
            for (std::size_t ftr = 0; ftr < features; ++ftr) {
                p[d] += standardized.values[r][ftr] * out.model.components[d][ftr];
            }
        }
        out.projection.push_back(std::move(p));
    }
    return out;
}

MetricPools MetricPools::defaults() {
    MetricPools p;
    p.structural = {"number_of_edges",      "average_node_degree",
                    "average_clustering_coefficient", "network_density",
                    "max_node_betweenness", "avg_node_betweenness",
                    "max_edge_betweenness", "avg_edge_betweenness",
                    "diameter_hops",        "aspl_hops",
                    "global_efficiency"};
    p.spatial = {"aspl_km",
                 "avg_link_length_km",
                 "std_shortest_path_km",
                 "diameter_km",
                 "normalized_avg_link_length",
                 "normalized_diameter_km",
                 "normalized_aspl_km"};
    p.spectral = {"normalized_spectral_radius", "normalized_algebraic_connectivity",
                  "normalized_wsd"};
    return p;
}

namespace {

double mean_abs_pairwise_correlation(const FeatureMatrix& f,
                                     const std::array<std::size_t, 3>& cols) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) {
            const double r = stats::pearson(f.column(cols[a]), f.column(cols[b]));
            if (!std::isnan(r)) {
                sum += std::fabs(r);
                ++count;
            }
        }
    }
    return count > 0 ? sum / count : 0.0;
}

SubsetChoice search_pool(const FeatureMatrix& features, const std::string& level,
                         std::vector<std::string> pool) {
    if (pool.size() < 3) {
        throw InputError("selection: pool '" + level + "' has fewer than 3 metrics");
    }
    std::sort(pool.begin(), pool.end());
    for (const auto& name : pool) features.column_index(name);  // validate early

    SubsetChoice best;
    best.level = level;
    best.cumulative_ratio = kInf;
    best.mean_abs_correlation = kInf;

    for (std::size_t a = 0; a < pool.size(); ++a) {
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            for (std::size_t c = b + 1; c < pool.size(); ++c) {
                const std::vector<std::string> triple = {pool[a], pool[b], pool[c]};
                FeatureMatrix sub = select_columns(features, triple);
                double ratio;
                try {
                    ratio = pca_fit(standardize(sub), 2).model.cumulative_ratio;
                } catch (const InputError&) {
                    continue;  // constant column in this triple; not a candidate
                }
                const std::array<std::size_t, 3> cols = {
                    features.column_index(pool[a]), features.column_index(pool[b]),
                    features.column_index(pool[c])};
                const double corr = mean_abs_pairwise_correlation(features, cols);
                // Lexicographic enumeration + strict improvement = lex tie-break.
                if (ratio < best.cumulative_ratio ||
                    (ratio == best.cumulative_ratio && corr < best.mean_abs_correlation)) {
                    best.metrics = triple;
                    best.cumulative_ratio = ratio;
                    best.mean_abs_correlation = corr;
                }
            }
        }
    }
    if (best.metrics.empty()) {
        throw InputError("selection: no viable 3-metric subset in pool '" + level + "'");
    }
    return best;
}

}  // namespace

std::vector<SubsetChoice> select_metric_subsets(const FeatureMatrix& features,
                                                const MetricPools& pools) {
    std::vector<SubsetChoice> out;
    out.push_back(search_pool(features, "structural", pools.structural));
    out.push_back(search_pool(features, "spatial", pools.spatial));
    out.push_back(search_pool(features, "spectral", pools.spectral));
    return out;
}

namespace {

std::vector<std::vector<double>> kmeanspp_init(const std::vector<std::vector<double>>& points,
                                               int k, Rng& rng) {
    const std::size_t n = points.size();
    std::vector<std::vector<double>> centroids;
    centroids.reserve(static_cast<std::size_t>(k));
    centroids.push_back(points[rng.index(n)]);

    std::vector<double> d2(n);
    for (std::size_t i = 0; i < n; ++i) d2[i] = squared_distance(points[i], centroids[0]);

    while (centroids.size() < static_cast<std::size_t>(k)) {
        double total = std::accumulate(d2.begin(), d2.end(), 0.0);
        std::size_t chosen;
        if (total > 0.0) {
            const double x = rng.uniform01() * total;
            double cumulative = 0.0;
            chosen = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                cumulative += d2[i];
                if (x < cumulative) {
                    chosen = i;
                    break;
                }
            }
        } else {
            chosen = rng.index(n);  // all points coincide with a centroid
        }
        centroids.push_back(points[chosen]);
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], squared_distance(points[i], centroids.back()));
        }
    }
    return centroids;
}

}  // namespace

KmeansResult kmeans(const std::vector<std::vector<double>>& points, int k, std::uint64_t seed) {
    const std::size_t n = points.size();
    if (n == 0) throw InputError("selection: kmeans on empty data");
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw InputError("selection: kmeans k outside [1, #points]");
    }
    const std::size_t dims = points[0].size();
    for (const auto& p : points) {
        if (p.size() != dims) throw InputError("selection: ragged kmeans input");
    }

    Rng rng(seed);
    KmeansResult best;
    best.inertia = kInf;

    for (int restart = 0; restart < kKmeansRestarts; ++restart) {
        auto centroids = kmeanspp_init(points, k, rng);
        std::vector<int> labels(n, 0);

        for (int iter = 0; iter < kKmeansMaxIters; ++iter) {
            for (std::size_t i = 0; i < n; ++i) {
                double best_d = kInf;
                int best_c = 0;
                for (int c = 0; c < k; ++c) {
                    const double d = squared_distance(points[i], centroids[c]);
                    if (d < best_d) {
                        best_d = d;
                        best_c = c;
                    }
                }
                labels[i] = best_c;
            }

            // Re-seed any emptied cluster with the point farthest from its
            // centroid; deterministic and keeps every cluster non-empty.
            std::vector<std::size_t> counts(k, 0);
            for (int label : labels) ++counts[label];
            for (int c = 0; c < k; ++c) {
                if (counts[c] > 0) continue;
                double worst = -1.0;
                std::size_t worst_i = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (counts[labels[i]] <= 1) continue;
                    const double d = squared_distance(points[i], centroids[labels[i]]);
                    if (d > worst) {
                        worst = d;
                        worst_i = i;
                    }
                }
                --counts[labels[worst_i]];
                labels[worst_i] = c;
                counts[c] = 1;
            }

            std::vector<std::vector<double>> next(k, std::vector<double>(dims, 0.0));
            std::vector<double> size(k, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t d = 0; d < dims; ++d) next[labels[i]][d] += points[i][d];
                size[labels[i]] += 1.0;
            }
            double shift = 0.0;
            for (int c = 0; c < k; ++c) {
                for (std::size_t d = 0; d < dims; ++d) next[c][d] /= size[c];
                shift = std::max(shift, std::sqrt(squared_distance(next[c], centroids[c])));
            }
            centroids = std::move(next);
            if (shift < kKmeansShiftTol) break;
        }

        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            inertia += squared_distance(points[i], centroids[labels[i]]);
        }
        if (inertia < best.inertia) {
            best.inertia = inertia;
            best.labels = labels;
            best.centroids = centroids;
        }
    }
    return best;
}

namespace {

struct BinaryProblem {
    const std::vector<std::vector<double>>& z;  // augmented rows
    std::vector<double> y;                      // +/-1
};

// L1-hinge SVM dual coordinate descent; bias is the trailing augmented
// (regularized) feature of z.
SvmClassifier train_one_vs_rest(const std::vector<std::vector<double>>& z, int positive_class,
                                const std::vector<int>& labels, double c) {
    const std::size_t n = z.size();
    const std::size_t dim = z[0].size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = labels[i] == positive_class ? 1.0 : -1.0;

    std::vector<double> alpha(n, 0.0), w(dim, 0.0), qii(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (double v : z[i]) s += v * v;
        qii[i] = s;
    }

    constexpr int kMaxPasses = 100000;
    bool converged = false;
    for (int pass = 0; pass < kMaxPasses && !converged; ++pass) {
        for (std::size_t i = 0; i < n; ++i) {
            double decision = 0.0;
            for (std::size_t d = 0; d < dim; ++d) decision += w[d] * z[i][d];
            const double g = y[i] * decision - 1.0;
            const double next = std::min(std::max(alpha[i] - g / qii[i], 0.0), c);
            const double delta = next - alpha[i];
            if (delta != 0.0) {
                for (std::size_t d = 0; d < dim; ++d) w[d] += delta * y[i] * z[i][d];
                alpha[i] = next;
            }
        }

        double w_norm_sq = 0.0;
        for (double v : w) w_norm_sq += v * v;
        double hinge = 0.0, alpha_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double decision = 0.0;
            for (std::size_t d = 0; d < dim; ++d) decision += w[d] * z[i][d];
            hinge += std::max(0.0, 1.0 - y[i] * decision);
            alpha_sum += alpha[i];
        }
        const double primal = 0.5 * w_norm_sq + c * hinge;
        const double dual = alpha_sum - 0.5 * w_norm_sq;
        if (primal - dual < kSvmDualityGap) converged = true;
    }
    if (!converged) {
        throw ComputeError("selection: SVM coordinate descent did not converge");
    }

    SvmClassifier out;
    out.positive_class = positive_class;
    out.w.assign(w.begin(), w.end() - 1);
    out.bias = w.back();
    double norm = 0.0;
    for (double v : out.w) norm += v * v;
    norm = std::sqrt(norm);
    if (norm <= 0.0) {
        throw ComputeError("selection: zero-norm SVM separator");
    }
    out.margin = 1.0 / norm;
    return out;
}

}  // namespace

SvmEvaluation svm_evaluate(const std::vector<std::vector<double>>& points,
                           const std::vector<int>& labels, int k, double c,
                           bool min_aggregation) {
    const std::size_t n = points.size();
    if (n == 0 || labels.size() != n) throw InputError("selection: svm input size mismatch");
    if (!(c > 0.0)) throw InputError("selection: svm C must be positive");
    for (int label : labels) {
        if (label < 0 || label >= k) throw InputError("selection: svm label outside [0, k)");
    }

    std::vector<bool> present(k, false);
    for (int label : labels) present[label] = true;
    int classes = 0;
    for (int cidx = 0; cidx < k; ++cidx) classes += present[cidx] ? 1 : 0;
    if (classes < 2) throw InputError("selection: svm needs >= 2 classes present");

    const std::size_t dims = points[0].size();
    std::vector<std::vector<double>> z;
    z.reserve(n);
    for (const auto& p : points) {
        if (p.size() != dims) throw InputError("selection: ragged svm input");
        std::vector<double> row = p;
        row.push_back(1.0);
        z.push_back(std::move(row));
    }

    SvmEvaluation out;
    for (int cls = 0; cls < k; ++cls) {
        if (!present[cls]) continue;
        out.classifiers.push_back(train_one_vs_rest(z, cls, labels, c));
    }

    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double best_score = -kInf;
        int best_class = out.classifiers.front().positive_class;
        for (const auto& clf : out.classifiers) {
            double score = clf.bias;
            for (std::size_t d = 0; d < dims; ++d) score += clf.w[d] * points[i][d];
            if (score > best_score) {
                best_score = score;
                best_class = clf.positive_class;
            }
        }
        if (best_class == labels[i]) ++correct;
    }
    out.accuracy = static_cast<double>(correct) / static_cast<double>(n);

    if (min_aggregation) {
        double mn = kInf;
        for (const auto& clf : out.classifiers) mn = std::min(mn, clf.margin);
        out.margin = mn;
    } else {
        double sum = 0.0;
        for (const auto& clf : out.classifiers) sum += clf.margin;
        out.margin = sum / static_cast<double>(out.classifiers.size());
    }
    return out;
}

PipelineReport run_pipeline(const FeatureMatrix& features, std::uint64_t seed,
                            const MetricPools& pools, double svm_c, bool min_aggregation) {
    if (features.rows() < static_cast<std::size_t>(kSweepMaxK)) {
        throw InputError("selection: pipeline needs at least " + std::to_string(kSweepMaxK) +
                         " topologies");
    }

    PipelineReport report;
    report.topology_names = features.row_names;
    report.subsets = select_metric_subsets(features, pools);

    std::vector<std::pair<std::string, std::vector<std::string>>> level_metrics;
    for (const auto& choice : report.subsets) level_metrics.emplace_back(choice.level, choice.metrics);
    std::vector<std::string> combined;
    for (const auto& choice : report.subsets) {
        combined.insert(combined.end(), choice.metrics.begin(), choice.metrics.end());
    }
    level_metrics.emplace_back("combined", std::move(combined));

    struct Cell {
        KmeansResult km;
        SvmEvaluation svm;
    };
    std::vector<PcaResult> level_pca(level_metrics.size());
    std::vector<std::vector<Cell>> cells(level_metrics.size());

    for (std::size_t lv = 0; lv < level_metrics.size(); ++lv) {
        const auto& [level, metric_names] = level_metrics[lv];
        const FeatureMatrix std_sub = standardize(select_columns(features, metric_names));
        level_pca[lv] = pca_fit(std_sub, 2);
        cells[lv].reserve(kSweepMaxK - kSweepMinK + 1);
        for (int k = kSweepMinK; k <= kSweepMaxK; ++k) {
            const std::uint64_t cell_seed =
                derive_stream(seed, "kmeans/" + level + "/" + std::to_string(k));
            Cell cell;
            cell.km = kmeans(level_pca[lv].projection, k, cell_seed);
            cell.svm = svm_evaluate(level_pca[lv].projection, cell.km.labels, k, svm_c,
                                    min_aggregation);
            report.sweep.push_back(SweepCell{level, k, cell.svm.margin, cell.svm.accuracy});
            cells[lv].push_back(std::move(cell));
        }
    }

    // The combined level picks k: highest margin, ties to the smaller k.
    const std::size_t combined_idx = level_metrics.size() - 1;
    int best_k = kSweepMinK;
    double best_margin = -kInf;
    for (int k = kSweepMinK; k <= kSweepMaxK; ++k) {
        const double margin = cells[combined_idx][k - kSweepMinK].svm.margin;
        if (margin > best_margin) {
            best_margin = margin;
            best_k = k;
        }
    }
    report.optimal_k = best_k;

    for (std::size_t lv = 0; lv < level_metrics.size(); ++lv) {
        const Cell& cell = cells[lv][best_k - kSweepMinK];
        LevelReport lr;
        lr.level = level_metrics[lv].first;
        lr.metrics = level_metrics[lv].second;
        lr.k = best_k;
        lr.labels = cell.km.labels;
        lr.centroids = cell.km.centroids;
        lr.svm_accuracy = cell.svm.accuracy;
        lr.svm_margin = cell.svm.margin;
        lr.classifiers = cell.svm.classifiers;
        lr.pca = level_pca[lv];
        report.levels.push_back(std::move(lr));
    }
    return report;
}

PcaCorrelation pca_metric_correlation(const PcaResult& pca, const FeatureMatrix& features) {
    if (pca.projection.size() != features.rows()) {
        throw InputError("selection: projection/feature row mismatch");
    }
    PcaCorrelation out;
    out.feature_names = features.column_names;
    const std::size_t dims = pca.model.components.size();
    out.rho.assign(dims, std::vector<double>(features.cols(), 0.0));
    for (std::size_t d = 0; d < dims; ++d) {
        std::vector<double> coordinate;
        coordinate.reserve(features.rows());
        for (const auto& p : pca.projection) coordinate.push_back(p[d]);
        for (std::size_t c = 0; c < features.cols(); ++c) {
            out.rho[d][c] = stats::pearson(coordinate, features.column(c));
        }
    }
    return out;
}

std::vector<WsdSliceRow> wsd_slice(const FeatureMatrix& features, int wsd_clusters,
                                   std::uint64_t seed) {
    if (wsd_clusters < 1) throw InputError("selection: wsd cluster count must be >= 1");
    const std::size_t n_idx = features.column_index("number_of_nodes");
    const std::size_t aspl_idx = features.column_index("aspl_km");
    const std::size_t wsd_idx = features.column_index("normalized_wsd");

    std::vector<std::vector<double>> wsd_points;
    wsd_points.reserve(features.rows());
    for (const auto& row : features.values) wsd_points.push_back({row[wsd_idx]});

    const int k = std::min<int>(wsd_clusters, static_cast<int>(features.rows()));
    const auto km = kmeans(wsd_points, k, derive_stream(seed, "wsd-slice"));

    std::vector<WsdSliceRow> rows;
    rows.reserve(features.rows());
    for (std::size_t r = 0; r < features.rows(); ++r) {
        WsdSliceRow row;
        row.name = features.row_names[r];
        row.nodes = features.values[r][n_idx];
        row.aspl_km = features.values[r][aspl_idx];
        row.wsd = features.values[r][wsd_idx];
        row.wsd_cluster = km.labels[r];
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace optonet::sel

#include "optonet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "optonet/errors.hpp"
#include "optonet/spectral.hpp"

namespace optonet::stats {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double column_std(const std::vector<double>& x, double mean, bool sample) {
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    const auto n = static_cast<double>(x.size());
    if (sample) return x.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    return std::sqrt(ss / n);
}

std::vector<double> metric_column(const std::vector<metrics::MetricVector>& corpus,
                                  std::size_t field_index) {
    std::vector<double> out;
    out.reserve(corpus.size());
    for (const auto& v : corpus) out.push_back(v.field(field_index));
    return out;
}

std::size_t field_index_of(const std::string& name) {
    const auto& names = metrics::MetricVector::field_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return i;
    }
    throw InputError("stats: unknown metric '" + name + "'");
}

// Standard normal CDF and its inverse (Acklam's rational approximation,
// refined by one Halley step; absolute error far below 1e-9).
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw InputError("stats: quantile outside (0,1)");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // One Halley refinement against the CDF.
    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

std::vector<double> average_ranks(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

DatasetSummary summarize(const std::vector<metrics::MetricVector>& corpus, bool sample_std) {
    if (corpus.empty()) throw InputError("stats: summarize on an empty corpus");
    DatasetSummary out;
    out.sample_std = sample_std;
    const auto& names = metrics::MetricVector::field_names();
    out.rows.reserve(names.size());
    for (std::size_t f = 0; f < names.size(); ++f) {
        const auto column = metric_column(corpus, f);
        MetricSummary row;
        row.metric = std::string(names[f]);
        row.mean = std::accumulate(column.begin(), column.end(), 0.0) /
                   static_cast<double>(column.size());
        row.std_dev = column_std(column, row.mean, sample_std);
        const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
        row.min = *lo;
        row.max = *hi;
        out.rows.push_back(std::move(row));
    }
    return out;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw InputError("stats: pearson needs two equal-length samples of size >= 2");
    }
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return kNan;
    double r = sxy / std::sqrt(sxx * syy);
    return std::min(1.0, std::max(-1.0, r));
}

CorrelationReport pearson_matrix(const std::vector<metrics::MetricVector>& corpus,
                                 const std::vector<std::string>& metric_names) {
    if (corpus.size() < 3) throw InputError("stats: correlation needs >= 3 samples");
    if (metric_names.size() < 2) throw InputError("stats: correlation needs >= 2 metrics");

    CorrelationReport report;
    report.metric_names = metric_names;
    const std::size_t k = metric_names.size();

    std::vector<std::vector<double>> columns;
    columns.reserve(k);
    for (const auto& name : metric_names) {
        columns.push_back(metric_column(corpus, field_index_of(name)));
    }
    for (std::size_t i = 0; i < k; ++i) {
        const double first = columns[i].front();
        if (std::all_of(columns[i].begin(), columns[i].end(),
                        [&](double v) { return v == first; })) {
            report.constant_metrics.push_back(metric_names[i]);
        }
    }

    report.matrix.assign(k, std::vector<double>(k, kNan));
    double abs_sum = 0.0;
    std::size_t defined_cells = 0;
    for (std::size_t i = 0; i < k; ++i) {
        report.matrix[i][i] = 1.0;
        for (std::size_t j = i + 1; j < k; ++j) {
            const double r = pearson(columns[i], columns[j]);
            report.matrix[i][j] = report.matrix[j][i] = r;
            if (!std::isnan(r)) {
                abs_sum += 2.0 * std::fabs(r);
                defined_cells += 2;
            }
        }
    }
    report.avg_abs_correlation =
        defined_cells > 0 ? abs_sum / static_cast<double>(defined_cells) : kNan;
    return report;
}

OutlierReport detect_outliers(const std::vector<std::string>& topology_names,
                              const std::vector<metrics::MetricVector>& corpus) {
    if (corpus.size() < 2) throw InputError("stats: outlier detection needs >= 2 samples");
    if (topology_names.size() != corpus.size()) {
        throw InputError("stats: outlier detection name/vector count mismatch");
    }

    OutlierReport report;
    const auto& names = metrics::MetricVector::field_names();
    report.metric_names.assign(names.begin(), names.end());

    std::vector<double> means(names.size()), stds(names.size());
    for (std::size_t f = 0; f < names.size(); ++f) {
        const auto column = metric_column(corpus, f);
        means[f] = std::accumulate(column.begin(), column.end(), 0.0) /
                   static_cast<double>(column.size());
        stds[f] = column_std(column, means[f], false);
    }

    report.rows.reserve(corpus.size());
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        OutlierRow row;
        row.topology = topology_names[s];
        row.z_scores.resize(names.size());
        for (std::size_t f = 0; f < names.size(); ++f) {
            const double z =
                stds[f] == 0.0 ? 0.0 : (corpus[s].field(f) - means[f]) / stds[f];
            row.z_scores[f] = z;
            if (std::fabs(z) > kOutlierZ) row.flagged.push_back(std::string(names[f]));
            row.max_abs_z = std::max(row.max_abs_z, std::fabs(z));
        }
        if (!row.flagged.empty()) ++report.outlier_count;
        report.rows.push_back(std::move(row));
    }
    return report;
}

double kolmogorov_q(double lambda) {
    // Alternating series, terminated once terms stop mattering; tiny or
    // huge lambda short-circuit to the limits.
    const double a2 = -2.0 * lambda * lambda;
    double fac = 2.0, sum = 0.0, previous_term = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = fac * std::exp(a2 * static_cast<double>(j) * static_cast<double>(j));
        sum += term;
        if (std::fabs(term) <= 0.001 * previous_term || std::fabs(term) <= 1e-8 * std::fabs(sum)) {
            return std::min(1.0, std::max(0.0, sum));
        }
        fac = -fac;
        previous_term = std::fabs(term);
    }
    return 1.0;  // series failed to converge: lambda ~ 0, distributions agree
}

KsResult ks2(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw InputError("stats: ks2 needs two non-empty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double fa = 0.0, fb = 0.0, d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double va = a[i];
        const double vb = b[j];
        if (va <= vb) fa = static_cast<double>(++i) / na;
        if (vb <= va) fb = static_cast<double>(++j) / nb;
        d = std::max(d, std::fabs(fa - fb));
    }

    const double ne = na * nb / (na + nb);
    const double sqrt_ne = std::sqrt(ne);
    const double lambda = (sqrt_ne + 0.12 + 0.11 / sqrt_ne) * d;

    KsResult out;
    out.statistic = d;
    out.p_value = d == 0.0 ? 1.0 : kolmogorov_q(lambda);
    out.n_a = a.size();
    out.n_b = b.size();
    return out;
}

namespace {

struct PooledSamples {
    std::vector<double> degrees_small, degrees_large;  // split at n <= 40
    std::vector<double> diameters;
    std::vector<double> eigenvalues;
    std::vector<double> fibre_lengths;
};

PooledSamples pool(const std::vector<Topology>& corpus) {
    PooledSamples p;
    for (const Topology& t : corpus) {
        auto& degree_pool = t.node_count() <= 40 ? p.degrees_small : p.degrees_large;
        for (std::size_t v = 0; v < t.node_count(); ++v) {
            degree_pool.push_back(static_cast<double>(t.degree(v)));
        }

        const auto hops = metrics::hop_paths(t);
        int diameter = 0;
        for (std::size_t u = 0; u < t.node_count(); ++u) {
            for (std::size_t v = u + 1; v < t.node_count(); ++v) {
                diameter = std::max(diameter, hops[u][v]);
            }
        }
        p.diameters.push_back(diameter);

        const auto spectrum =
            spectral::eigenvalues_symmetric(spectral::normalized_laplacian(adjacency_matrix(t)));
        p.eigenvalues.insert(p.eigenvalues.end(), spectrum.eigenvalues.begin(),
                             spectrum.eigenvalues.end());

        for (const Edge& e : t.edges()) p.fibre_lengths.push_back(e.length_km);
    }
    return p;
}

ValidationRow make_row(std::string property, const std::vector<double>& a,
                       const std::vector<double>& b) {
    ValidationRow row;
    row.property = std::move(property);
    if (a.empty() || b.empty()) {
        row.ks = KsResult{kNan, kNan, a.size(), b.size()};
        row.defined = false;
    } else {
        row.ks = ks2(a, b);
        row.defined = true;
    }
    return row;
}

}  // namespace

std::vector<ValidationRow> validate_synthetic(const std::vector<Topology>& real_corpus,
                                              const std::vector<Topology>& synthetic_corpus) {
    if (real_corpus.empty() || synthetic_corpus.empty()) {
        throw InputError("stats: validate_synthetic needs two non-empty corpora");
    }
    const PooledSamples real = pool(real_corpus);
    const PooledSamples synthetic = pool(synthetic_corpus);

    std::vector<ValidationRow> rows;
    rows.push_back(make_row("degree_n_le_40", real.degrees_small, synthetic.degrees_small));
    rows.push_back(make_row("degree_n_gt_40", real.degrees_large, synthetic.degrees_large));
    rows.push_back(make_row("diameter_hops", real.diameters, synthetic.diameters));
    rows.push_back(make_row("normalized_laplacian_eigenvalues", real.eigenvalues,
                            synthetic.eigenvalues));
    rows.push_back(make_row("link_fibre_length_km", real.fibre_lengths, synthetic.fibre_lengths));
    return rows;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    return pearson(average_ranks(x), average_ranks(y));
}

double shapiro_francia_p(std::vector<double> sample, double* w_out) {
    const std::size_t n = sample.size();
    if (n < 5 || n > 5000) {
        throw InputError("stats: Shapiro-Francia needs 5 <= n <= 5000");
    }
    std::sort(sample.begin(), sample.end());
    if (sample.front() == sample.back()) {
        if (w_out) *w_out = kNan;
        return kNan;  // constant sample: normality undefined
    }

    // Blom plotting positions.
    std::vector<double> m(n);
    double m_ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = normal_quantile((static_cast<double>(i) + 1.0 - 0.375) /
                               (static_cast<double>(n) + 0.25));
        m_ss += m[i] * m[i];
    }

    const double mean = std::accumulate(sample.begin(), sample.end(), 0.0) /
                        static_cast<double>(n);
    double cross = 0.0, ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cross += m[i] * sample[i];
        ss += (sample[i] - mean) * (sample[i] - mean);
    }
    const double w = cross * cross / (m_ss * ss);
    if (w_out) *w_out = w;

    // Royston (1993) normal approximation for ln(1 - W').
    const double u = std::log(static_cast<double>(n));
    const double v = std::log(u);
    const double mu = -1.2725 + 1.0521 * (v - u);
    const double sigma = 1.0308 - 0.26758 * (v + 2.0 / u);
    const double z = (std::log(1.0 - w) - mu) / sigma;
    return 1.0 - normal_cdf(z);
}

DiagnosticsReport diagnostics(const std::vector<metrics::MetricVector>& corpus,
                              const std::vector<std::string>& metric_names) {
    if (corpus.size() < 5) throw InputError("stats: diagnostics need >= 5 samples");

    DiagnosticsReport report;
    std::vector<std::vector<double>> columns;
    columns.reserve(metric_names.size());
    for (const auto& name : metric_names) {
        columns.push_back(metric_column(corpus, field_index_of(name)));
    }

    for (std::size_t i = 0; i < metric_names.size(); ++i) {
        NormalityRow row;
        row.metric = metric_names[i];
        row.p_value = shapiro_francia_p(columns[i], &row.w_statistic);
        if (!std::isnan(row.p_value) && row.p_value > kNormalityAlpha) ++report.normal_count;
        report.normality.push_back(std::move(row));
    }

    for (std::size_t i = 0; i < metric_names.size(); ++i) {
        for (std::size_t j = i + 1; j < metric_names.size(); ++j) {
            const double r = pearson(columns[i], columns[j]);
            const double rho = spearman(columns[i], columns[j]);
            if (std::isnan(r) || std::isnan(rho)) continue;
            ++report.pair_count;
            const double gap = std::fabs(rho) - std::fabs(r);
            if (gap > kNonlinearGap) {
                report.nonlinear_pairs.push_back(
                    LinearityRow{metric_names[i], metric_names[j], r, rho, gap});
            }
        }
    }
    return report;
}

}  // namespace optonet::stats

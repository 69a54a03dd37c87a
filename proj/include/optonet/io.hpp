#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "optonet/metrics.hpp"
#include "optonet/selection.hpp"
#include "optonet/stats.hpp"
#include "optonet/topology.hpp"

namespace optonet::io {

// One nodes_<name>.csv / edges_<name>.csv pair.
struct CorpusEntry {
    std::string name;
    std::filesystem::path nodes_file;
    std::filesystem::path edges_file;
};

// Recursively pairs nodes_/edges_ files under dir, sorted by topology name.
// Unpaired or duplicate names are input errors.
std::vector<CorpusEntry> scan_corpus(const std::filesystem::path& dir);

Topology load_topology(const CorpusEntry& entry, Provenance provenance);
std::vector<Topology> load_corpus(const std::filesystem::path& dir, Provenance provenance);

// nodes_<name>.csv + edges_<name>.csv under dir.
void write_topology_files(const Topology& t, const std::filesystem::path& dir, bool force);

// Shortest round-trip decimal form; NaN prints as "nan".
std::string format_double(double v);

struct MetricsTable {
    std::vector<std::string> names;
    std::vector<metrics::MetricVector> vectors;
};

// Consolidated per-corpus table: one row per topology, name + the canonical
// metric columns. Values round-trip exactly through read_metrics_csv.
void write_metrics_csv(const std::filesystem::path& path, const MetricsTable& table, bool force);
MetricsTable read_metrics_csv(const std::filesystem::path& path);

void write_topology_report_json(const std::filesystem::path& path, const std::string& name,
                                const metrics::MetricVector& v, bool force);

void write_structure_flags_csv(const std::filesystem::path& path,
                               const std::vector<std::string>& names,
                               const std::vector<StructureFlags>& flags, bool force);

struct LengthAuditRow {
    std::string topology;
    std::int64_t edge_id = 0;
    double file_km = 0;
    double computed_km = 0;  // fibre model applied to the geodesic
};
void write_length_audit_csv(const std::filesystem::path& path,
                            const std::vector<LengthAuditRow>& rows, bool force);

struct IngestSummary {
    std::size_t count = 0;
    std::size_t planar_count = 0;
    std::size_t bridged_count = 0;     // networks containing >= 1 bridge
    std::size_t survivable_count = 0;  // biconnected networks
};
void write_ingest_summary_json(const std::filesystem::path& path, const IngestSummary& summary,
                               bool force);

void write_summary_json(const std::filesystem::path& path, const stats::DatasetSummary& summary,
                        std::size_t corpus_size, bool force);

void write_correlation_matrix_csv(const std::filesystem::path& path,
                                  const stats::CorrelationReport& report, bool force);
// Long form (metric_a, metric_b, rho) over the full grid, for heatmaps.
void write_correlation_long_csv(const std::filesystem::path& path,
                                const stats::CorrelationReport& report, bool force);
void write_correlation_summary_json(const std::filesystem::path& path,
                                    const stats::CorrelationReport& report, bool force);
void write_diagnostics_json(const std::filesystem::path& path,
                            const stats::DiagnosticsReport& report, bool force);

void write_zscores_csv(const std::filesystem::path& path, const stats::OutlierReport& report,
                       bool force);
void write_outliers_csv(const std::filesystem::path& path, const stats::OutlierReport& report,
                        bool force);
void write_outlier_summary_json(const std::filesystem::path& path,
                                const stats::OutlierReport& report, bool force);

void write_validation_csv(const std::filesystem::path& path,
                          const std::vector<stats::ValidationRow>& rows, bool force);

// Subset-search result table (level, chosen triple, objective values).
void write_selected_metrics_csv(const std::filesystem::path& path,
                                const std::vector<sel::SubsetChoice>& subsets, bool force);

// Fan-out of the clustering pipeline: clusters_<level>.csv (sorted by
// topology name), pca_projection.csv, margin_sweep.csv,
// pca_metric_correlation.csv, svc_boundaries.json, pipeline_summary.json.
void write_cluster_outputs(const std::filesystem::path& dir, const sel::PipelineReport& report,
                           const sel::FeatureMatrix& features, bool force);

void write_wsd_slice_csv(const std::filesystem::path& path,
                         const std::vector<sel::WsdSliceRow>& rows, bool force);

}  // namespace optonet::io

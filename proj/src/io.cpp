#include "optonet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "optonet/csv.hpp"
#include "optonet/errors.hpp"

namespace fs = std::filesystem;

namespace optonet::io {

namespace {

std::ofstream open_output(const fs::path& path, bool force) {
    if (!force && fs::exists(path)) {
        throw InputError("refusing to overwrite " + path.string() + " (pass --force)");
    }
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open " + path.string() + " for writing");
    return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) throw InputError("write failed: " + path.string());
}

double parse_double(const std::string& text, const fs::path& path, std::size_t line) {
    double value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError("non-numeric field", line, path.string() + " '" + text + "'");
    }
    return value;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

// NaN has no JSON representation; the writers use null.
nlohmann::ordered_json json_number(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

void write_json(const fs::path& path, const nlohmann::ordered_json& doc, bool force) {
    auto out = open_output(path, force);
    out << doc.dump(2) << '\n';
    finish_output(out, path);
}

}  // namespace

std::vector<CorpusEntry> scan_corpus(const fs::path& dir) {
    if (!fs::is_directory(dir)) {
        throw InputError("not a directory: " + dir.string());
    }
    std::map<std::string, fs::path> nodes, edges;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string file = entry.path().filename().string();
        if (file.size() <= 10 || !file.ends_with(".csv")) continue;
        std::map<std::string, fs::path>* bucket = nullptr;
        if (file.starts_with("nodes_")) bucket = &nodes;
        else if (file.starts_with("edges_")) bucket = &edges;
        else continue;
        const std::string name = file.substr(6, file.size() - 10);
        auto [it, inserted] = bucket->emplace(name, entry.path());
        if (!inserted) {
            throw InputError("duplicate topology name '" + name + "': " + it->second.string() +
                             " and " + entry.path().string());
        }
    }
    std::vector<CorpusEntry> out;
    out.reserve(nodes.size());
    for (const auto& [name, nodes_path] : nodes) {
        auto it = edges.find(name);
        if (it == edges.end()) {
            throw InputError("topology '" + name + "' has a nodes file but no edges file");
        }
        out.push_back(CorpusEntry{name, nodes_path, it->second});
        edges.erase(it);
    }
    if (!edges.empty()) {
        throw InputError("topology '" + edges.begin()->first +
                         "' has an edges file but no nodes file");
    }
    if (out.empty()) {
        throw InputError("no topology csv pairs under " + dir.string());
    }
    return out;  // std::map iteration is already name-sorted
}

Topology load_topology(const CorpusEntry& entry, Provenance provenance) {
    std::ifstream nodes(entry.nodes_file, std::ios::binary);
    if (!nodes) throw InputError("cannot open " + entry.nodes_file.string());
    std::ifstream edges(entry.edges_file, std::ios::binary);
    if (!edges) throw InputError("cannot open " + entry.edges_file.string());
    try {
        return read_topology(nodes, edges, entry.name, provenance);
    } catch (const InputError& e) {
        // ParseError messages already carry the kind and row.
        throw InputError(entry.name + ": " + e.what());
    }
}

std::vector<Topology> load_corpus(const fs::path& dir, Provenance provenance) {
    std::vector<Topology> out;
    for (const auto& entry : scan_corpus(dir)) {
        out.push_back(load_topology(entry, provenance));
    }
    return out;
}

void write_topology_files(const Topology& t, const fs::path& dir, bool force) {
    const fs::path nodes_path = dir / ("nodes_" + t.name() + ".csv");
    const fs::path edges_path = dir / ("edges_" + t.name() + ".csv");
    auto nodes = open_output(nodes_path, force);
    auto edges = open_output(edges_path, force);
    write_topology(t, nodes, edges);
    finish_output(nodes, nodes_path);
    finish_output(edges, edges_path);
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_metrics_csv(const fs::path& path, const MetricsTable& table, bool force) {
    if (table.names.size() != table.vectors.size()) {
        throw InputError("metrics table: name/vector count mismatch");
    }
    auto out = open_output(path, force);
    std::vector<std::string> header = {"name"};
    for (auto field : metrics::MetricVector::field_names()) header.emplace_back(field);
    out << csv::write_row(header) << '\n';
    for (std::size_t i = 0; i < table.names.size(); ++i) {
        std::vector<std::string> row = {table.names[i]};
        for (std::size_t f = 0; f < metrics::MetricVector::kFieldCount; ++f) {
            row.push_back(format_double(table.vectors[i].field(f)));
        }
        out << csv::write_row(row) << '\n';
    }
    finish_output(out, path);
}

MetricsTable read_metrics_csv(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    const auto rows = csv::read(in);
    if (rows.empty()) throw ParseError("malformed header", 1, path.string() + " is empty");

    const auto& names = metrics::MetricVector::field_names();
    const auto& header = rows.front();
    bool header_ok = header.fields.size() == names.size() + 1 && header.fields[0] == "name";
    for (std::size_t f = 0; header_ok && f < names.size(); ++f) {
        header_ok = header.fields[f + 1] == names[f];
    }
    if (!header_ok) throw ParseError("malformed header", header.line, path.string());

    MetricsTable table;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != names.size() + 1) {
            throw ParseError("bad field count", row.line, path.string());
        }
        metrics::MetricVector v;
        for (std::size_t f = 0; f < names.size(); ++f) {
            // Fields are laid out in canonical order; fill through the name.
            const double value = parse_double(row.fields[f + 1], path, row.line);
            switch (f) {
                case 0: v.number_of_nodes = value; break;
                case 1: v.number_of_edges = value; break;
                case 2: v.average_node_degree = value; break;
                case 3: v.average_clustering_coefficient = value; break;
                case 4: v.network_density = value; break;
                case 5: v.max_node_betweenness = value; break;
                case 6: v.avg_node_betweenness = value; break;
                case 7: v.max_edge_betweenness = value; break;
                case 8: v.avg_edge_betweenness = value; break;
                case 9: v.diameter_hops = value; break;
                case 10: v.aspl_hops = value; break;
                case 11: v.global_efficiency = value; break;
                case 12: v.normalized_spectral_radius = value; break;
                case 13: v.normalized_algebraic_connectivity = value; break;
                case 14: v.normalized_wsd = value; break;
                case 15: v.aspl_km = value; break;
                case 16: v.avg_link_length_km = value; break;
                case 17: v.std_shortest_path_km = value; break;
                case 18: v.diameter_km = value; break;
                case 19: v.normalized_avg_link_length = value; break;
                case 20: v.normalized_diameter_km = value; break;
                default: break;
            }
        }
        table.names.push_back(row.fields[0]);
        table.vectors.push_back(v);
    }
    if (table.names.empty()) throw InputError("no data rows in " + path.string());
    return table;
}

void write_topology_report_json(const fs::path& path, const std::string& name,
                                const metrics::MetricVector& v, bool force) {
    nlohmann::ordered_json doc;
    doc["name"] = name;
    nlohmann::ordered_json m;
    for (std::size_t f = 0; f < metrics::MetricVector::kFieldCount; ++f) {
        m[std::string(metrics::MetricVector::field_names()[f])] = json_number(v.field(f));
    }
    doc["metrics"] = std::move(m);
    write_json(path, doc, force);
}

void write_structure_flags_csv(const fs::path& path, const std::vector<std::string>& names,
                               const std::vector<StructureFlags>& flags, bool force) {
    if (names.size() != flags.size()) throw InputError("flags table: size mismatch");
    auto out = open_output(path, force);
    out << "name,is_planar,has_bridge,is_biconnected,bridge_count\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << csv::write_row({names[i], bool_text(flags[i].is_planar),
                               bool_text(flags[i].has_bridge), bool_text(flags[i].is_biconnected),
                               std::to_string(flags[i].bridge_count)})
            << '\n';
    }
    finish_output(out, path);
}

void write_length_audit_csv(const fs::path& path, const std::vector<LengthAuditRow>& rows,
                            bool force) {
    auto out = open_output(path, force);
    out << "topology,edge_id,file_km,computed_km,abs_diff_km\n";
    for (const auto& row : rows) {
        out << csv::write_row({row.topology, std::to_string(row.edge_id),
                               format_double(row.file_km), format_double(row.computed_km),
                               format_double(std::fabs(row.file_km - row.computed_km))})
            << '\n';
    }
    finish_output(out, path);
}

void write_ingest_summary_json(const fs::path& path, const IngestSummary& summary, bool force) {
    nlohmann::ordered_json doc;
    doc["count"] = summary.count;
    doc["planar_count"] = summary.planar_count;
    doc["bridged_count"] = summary.bridged_count;
    doc["survivable_count"] = summary.survivable_count;
    write_json(path, doc, force);
}

void write_summary_json(const fs::path& path, const stats::DatasetSummary& summary,
                        std::size_t corpus_size, bool force) {
    nlohmann::ordered_json doc;
    doc["count"] = corpus_size;
    doc["std_convention"] = summary.sample_std ? "sample" : "population";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : summary.rows) {
        rows.push_back({{"metric", row.metric},
                        {"mean", json_number(row.mean)},
                        {"std", json_number(row.std_dev)},
                        {"min", json_number(row.min)},
                        {"max", json_number(row.max)}});
    }
    doc["metrics"] = std::move(rows);
    write_json(path, doc, force);
}

void write_correlation_matrix_csv(const fs::path& path, const stats::CorrelationReport& report,
                                  bool force) {
    auto out = open_output(path, force);
    std::vector<std::string> header = {"metric"};
    header.insert(header.end(), report.metric_names.begin(), report.metric_names.end());
    out << csv::write_row(header) << '\n';
    for (std::size_t i = 0; i < report.metric_names.size(); ++i) {
        std::vector<std::string> row = {report.metric_names[i]};
        for (double r : report.matrix[i]) row.push_back(format_double(r));
        out << csv::write_row(row) << '\n';
    }
    finish_output(out, path);
}

void write_correlation_long_csv(const fs::path& path, const stats::CorrelationReport& report,
                                bool force) {
    auto out = open_output(path, force);
    out << "metric_a,metric_b,rho\n";
    for (std::size_t i = 0; i < report.metric_names.size(); ++i) {
        for (std::size_t j = 0; j < report.metric_names.size(); ++j) {
            out << csv::write_row({report.metric_names[i], report.metric_names[j],
                                   format_double(report.matrix[i][j])})
                << '\n';
        }
    }
    finish_output(out, path);
}

void write_correlation_summary_json(const fs::path& path, const stats::CorrelationReport& report,
                                    bool force) {
    nlohmann::ordered_json doc;
    doc["metric_count"] = report.metric_names.size();
    doc["avg_abs_correlation"] = json_number(report.avg_abs_correlation);
    doc["constant_metrics"] = report.constant_metrics;
    write_json(path, doc, force);
}

void write_diagnostics_json(const fs::path& path, const stats::DiagnosticsReport& report,
                            bool force) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json normality = nlohmann::ordered_json::array();
    for (const auto& row : report.normality) {
        normality.push_back({{"metric", row.metric},
                             {"w_statistic", json_number(row.w_statistic)},
                             {"p_value", json_number(row.p_value)}});
    }
    doc["normality"] = std::move(normality);
    doc["normal_count"] = report.normal_count;
    doc["alpha"] = stats::kNormalityAlpha;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& row : report.nonlinear_pairs) {
        pairs.push_back({{"metric_a", row.metric_a},
                         {"metric_b", row.metric_b},
                         {"pearson_r", json_number(row.pearson_r)},
                         {"spearman_rho", json_number(row.spearman_rho)},
                         {"gap", json_number(row.gap)}});
    }
    doc["nonlinear_pairs"] = std::move(pairs);
    doc["pair_count"] = report.pair_count;
    write_json(path, doc, force);
}

void write_zscores_csv(const fs::path& path, const stats::OutlierReport& report, bool force) {
    auto out = open_output(path, force);
    std::vector<std::string> header = {"topology"};
    header.insert(header.end(), report.metric_names.begin(), report.metric_names.end());
    out << csv::write_row(header) << '\n';
    for (const auto& row : report.rows) {
        std::vector<std::string> fields = {row.topology};
        for (double z : row.z_scores) fields.push_back(format_double(z));
        out << csv::write_row(fields) << '\n';
    }
    finish_output(out, path);
}

void write_outliers_csv(const fs::path& path, const stats::OutlierReport& report, bool force) {
    auto out = open_output(path, force);
    out << "topology,metric,z\n";
    for (const auto& row : report.rows) {
        for (const auto& metric : row.flagged) {
            std::size_t idx = 0;
            while (report.metric_names[idx] != metric) ++idx;
            out << csv::write_row({row.topology, metric, format_double(row.z_scores[idx])})
                << '\n';
        }
    }
    finish_output(out, path);
}

void write_outlier_summary_json(const fs::path& path, const stats::OutlierReport& report,
                                bool force) {
    nlohmann::ordered_json doc;
    doc["threshold"] = stats::kOutlierZ;
    doc["outlier_count"] = report.outlier_count;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        if (row.flagged.empty()) continue;
        rows.push_back({{"topology", row.topology},
                        {"max_abs_z", json_number(row.max_abs_z)},
                        {"flagged", row.flagged}});
    }
    doc["outliers"] = std::move(rows);
    write_json(path, doc, force);
}

void write_validation_csv(const fs::path& path, const std::vector<stats::ValidationRow>& rows,
                          bool force) {
    auto out = open_output(path, force);
    out << "property,statistic,p_value,n_real,n_synthetic,defined\n";
    for (const auto& row : rows) {
        out << csv::write_row({row.property, format_double(row.ks.statistic),
                               format_double(row.ks.p_value), std::to_string(row.ks.n_a),
                               std::to_string(row.ks.n_b), bool_text(row.defined)})
            << '\n';
    }
    finish_output(out, path);
}

void write_selected_metrics_csv(const fs::path& path,
                                const std::vector<sel::SubsetChoice>& subsets, bool force) {
    auto out = open_output(path, force);
    out << "level,metric_1,metric_2,metric_3,pc1_pc2_explained_variance,mean_abs_correlation\n";
    for (const auto& choice : subsets) {
        out << csv::write_row({choice.level, choice.metrics[0], choice.metrics[1],
                               choice.metrics[2], format_double(choice.cumulative_ratio),
                               format_double(choice.mean_abs_correlation)})
            << '\n';
    }
    finish_output(out, path);
}

void write_cluster_outputs(const fs::path& dir, const sel::PipelineReport& report,
                           const sel::FeatureMatrix& features, bool force) {
    fs::create_directories(dir);

    // Label exports, one file per level, rows sorted by topology name.
    std::vector<std::size_t> order(report.topology_names.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return report.topology_names[a] < report.topology_names[b];
    });
    for (const auto& level : report.levels) {
        const fs::path path = dir / ("clusters_" + level.level + ".csv");
        auto out = open_output(path, force);
        out << "topology,cluster\n";
        for (std::size_t i : order) {
            out << csv::write_row({report.topology_names[i], std::to_string(level.labels[i])})
                << '\n';
        }
        finish_output(out, path);
    }

    {
        const fs::path path = dir / "pca_projection.csv";
        auto out = open_output(path, force);
        out << "level,topology,pc1,pc2,cluster\n";
        for (const auto& level : report.levels) {
            for (std::size_t i : order) {
                out << csv::write_row({level.level, report.topology_names[i],
                                       format_double(level.pca.projection[i][0]),
                                       format_double(level.pca.projection[i][1]),
                                       std::to_string(level.labels[i])})
                    << '\n';
            }
        }
        finish_output(out, path);
    }

    {
        const fs::path path = dir / "margin_sweep.csv";
        auto out = open_output(path, force);
        std::vector<std::string> header = {"k"};
        for (auto level : sel::kLevels) header.emplace_back(level);
        out << csv::write_row(header) << '\n';
        for (int k = sel::kSweepMinK; k <= sel::kSweepMaxK; ++k) {
            std::vector<std::string> row = {std::to_string(k)};
            for (auto level : sel::kLevels) {
                for (const auto& cell : report.sweep) {
                    if (cell.k == k && cell.level == level) {
                        row.push_back(format_double(cell.margin));
                        break;
                    }
                }
            }
            out << csv::write_row(row) << '\n';
        }
        finish_output(out, path);
    }

    {
        const fs::path path = dir / "pca_metric_correlation.csv";
        auto out = open_output(path, force);
        out << "level,feature,pc1_rho,pc2_rho\n";
        for (const auto& level : report.levels) {
            const auto corr = sel::pca_metric_correlation(level.pca, features);
            for (std::size_t f = 0; f < corr.feature_names.size(); ++f) {
                out << csv::write_row({level.level, corr.feature_names[f],
                                       format_double(corr.rho[0][f]),
                                       format_double(corr.rho[1][f])})
                    << '\n';
            }
        }
        finish_output(out, path);
    }

    {
        nlohmann::ordered_json doc;
        doc["optimal_k"] = report.optimal_k;
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (const auto& level : report.levels) {
            nlohmann::ordered_json classifiers = nlohmann::ordered_json::array();
            for (const auto& clf : level.classifiers) {
                classifiers.push_back({{"positive_class", clf.positive_class},
                                       {"w", clf.w},
                                       {"bias", clf.bias},
                                       {"margin", json_number(clf.margin)}});
            }
            levels.push_back({{"level", level.level},
                              {"k", level.k},
                              {"classifiers", std::move(classifiers)}});
        }
        doc["levels"] = std::move(levels);
        write_json(dir / "svc_boundaries.json", doc, force);
    }

    {
        nlohmann::ordered_json doc;
        doc["topology_count"] = report.topology_names.size();
        doc["optimal_k"] = report.optimal_k;
        nlohmann::ordered_json subsets = nlohmann::ordered_json::array();
        for (const auto& choice : report.subsets) {
            subsets.push_back({{"level", choice.level},
                               {"metrics", choice.metrics},
                               {"pc1_pc2_explained_variance", json_number(choice.cumulative_ratio)},
                               {"mean_abs_correlation", json_number(choice.mean_abs_correlation)}});
        }
        doc["subsets"] = std::move(subsets);
        nlohmann::ordered_json levels = nlohmann::ordered_json::array();
        for (const auto& level : report.levels) {
            levels.push_back(
                {{"level", level.level},
                 {"metrics", level.metrics},
                 {"k", level.k},
                 {"svm_accuracy", json_number(level.svm_accuracy)},
                 {"svm_margin", json_number(level.svm_margin)},
                 {"explained_variance_ratio", level.pca.model.explained_variance_ratio}});
        }
        doc["levels"] = std::move(levels);
        nlohmann::ordered_json sweep = nlohmann::ordered_json::array();
        for (const auto& cell : report.sweep) {
            sweep.push_back({{"level", cell.level},
                             {"k", cell.k},
                             {"margin", json_number(cell.margin)},
                             {"accuracy", json_number(cell.accuracy)}});
        }
        doc["sweep"] = std::move(sweep);
        write_json(dir / "pipeline_summary.json", doc, force);
    }
}

void write_wsd_slice_csv(const fs::path& path, const std::vector<sel::WsdSliceRow>& rows,
                         bool force) {
    auto out = open_output(path, force);
    out << "topology,number_of_nodes,aspl_km,normalized_wsd,wsd_cluster\n";
    for (const auto& row : rows) {
        out << csv::write_row({row.name, format_double(row.nodes), format_double(row.aspl_km),
                               format_double(row.wsd), std::to_string(row.wsd_cluster)})
            << '\n';
    }
    finish_output(out, path);
}

}  // namespace optonet::io

// optonet: generate, measure, validate, and cluster optical core network
// topologies from nodes_/edges_ CSV corpora.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "optonet/errors.hpp"
#include "optonet/generator.hpp"
#include "optonet/geo.hpp"
#include "optonet/io.hpp"
#include "optonet/metrics.hpp"
#include "optonet/rng.hpp"
#include "optonet/selection.hpp"
#include "optonet/stats.hpp"
#include "optonet/topology.hpp"

namespace fs = std::filesystem;
using namespace optonet;

namespace {

// CLI11 2.4.2 never processes config files attached to subcommands (only the
// root app's config runs), so --config is a plain option whose flat JSON
// object is merged by hand when the subcommand fires: explicit command-line
// flags win, unknown keys and ill-typed values are input errors. Required
// path options must still be given on the command line.
class ConfigMap {
public:
    explicit ConfigMap(CLI::App* sub) : sub_(sub) {
        sub_->add_option("--config", path_, "JSON config file; command-line flags win");
    }

    void bind(const std::string& key, const std::shared_ptr<std::string>& target) {
        setters_[key] = [key, target](const nlohmann::json& v) {
            if (!v.is_string()) throw InputError("config key '" + key + "' must be a string");
            *target = v.get<std::string>();
        };
    }

    void bind(const std::string& key, const std::shared_ptr<bool>& target) {
        setters_[key] = [key, target](const nlohmann::json& v) {
            if (!v.is_boolean()) throw InputError("config key '" + key + "' must be a boolean");
            *target = v.get<bool>();
        };
    }

    void bind(const std::string& key, const std::shared_ptr<int>& target,
              int min_value = std::numeric_limits<int>::min()) {
        setters_[key] = [key, target, min_value](const nlohmann::json& v) {
            if (!v.is_number_integer() && !v.is_number_unsigned()) {
                throw InputError("config key '" + key + "' must be an integer");
            }
            if (v.is_number_unsigned() &&
                v.get<std::uint64_t>() >
                    static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
                throw InputError("config key '" + key + "' is out of range");
            }
            const auto value = v.get<std::int64_t>();
            if (value < min_value || value > std::numeric_limits<int>::max()) {
                throw InputError("config key '" + key + "' is out of range");
            }
            *target = static_cast<int>(value);
        };
    }

    void bind(const std::string& key, const std::shared_ptr<double>& target) {
        setters_[key] = [key, target](const nlohmann::json& v) {
            if (!v.is_number()) throw InputError("config key '" + key + "' must be a number");
            *target = v.get<double>();
        };
    }

    void bind(const std::string& key, const std::shared_ptr<std::uint64_t>& target) {
        setters_[key] = [key, target](const nlohmann::json& v) {
            const bool ok = v.is_number_unsigned() ||
                            (v.is_number_integer() && v.get<std::int64_t>() >= 0);
            if (!ok) {
                throw InputError("config key '" + key + "' must be a non-negative integer");
            }
            *target = v.get<std::uint64_t>();
        };
    }

    // Merge the config file (if any) into the bound targets.
    void apply() const {
        if (path_.empty()) return;
        std::ifstream input(path_);
        if (!input) throw InputError("cannot open config file " + path_);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(input);
        } catch (const nlohmann::json::parse_error& e) {
            throw InputError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) throw InputError("config file root must be a JSON object");
        for (const auto& [key, value] : doc.items()) {
            const auto it = setters_.find(key);
            if (it == setters_.end()) throw InputError("unknown config key '" + key + "'");
            if (sub_->count("--" + key) > 0) continue;  // explicit flag wins
            it->second(value);
        }
    }

private:
    CLI::App* sub_;
    std::string path_;
    std::map<std::string, std::function<void(const nlohmann::json&)>> setters_;
};

struct Common {
    std::uint64_t seed = 42;
    int jobs = 0;
    bool force = false;
    bool quiet = false;
};

int default_jobs() {
    if (const char* env = std::getenv("OPTONET_JOBS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void add_common(CLI::App& sub, const std::shared_ptr<Common>& c, ConfigMap& cfg,
                bool with_seed = true) {
    if (with_seed) {
        sub.add_option("--seed", c->seed, "Master seed; every random stream derives from it")
            ->capture_default_str();
        cfg.bind("seed", std::shared_ptr<std::uint64_t>(c, &c->seed));
    }
    c->jobs = default_jobs();
    sub.add_option("--jobs", c->jobs, "Worker threads (default: OPTONET_JOBS or hardware)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cfg.bind("jobs", std::shared_ptr<int>(c, &c->jobs), 1);
    sub.add_flag("--force", c->force, "Overwrite existing outputs");
    cfg.bind("force", std::shared_ptr<bool>(c, &c->force));
    sub.add_flag("--quiet", c->quiet, "Suppress progress lines on stderr");
    cfg.bind("quiet", std::shared_ptr<bool>(c, &c->quiet));
}

// Machine-parsable progress on stderr: "PROGRESS <label> <done>/<total>".
class Progress {
public:
    Progress(std::string label, std::size_t total, bool quiet)
        : label_(std::move(label)), total_(total), quiet_(quiet) {}

    void operator()(std::size_t done, std::size_t total) {
        if (quiet_) return;
        const std::size_t step = std::max<std::size_t>(1, total / 200);
        if (done % step != 0 && done != total) return;
        std::lock_guard<std::mutex> lock(mu_);
        std::cerr << "PROGRESS " << label_ << ' ' << done << '/' << total << '\n';
    }

    void tick() {
        const std::size_t done = ++done_;
        (*this)(done, total_);
    }

private:
    std::string label_;
    std::size_t total_;
    bool quiet_;
    std::atomic<std::size_t> done_{0};
    std::mutex mu_;
};

// Index-parallel fan-out; rethrows the first worker exception.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

sel::FeatureMatrix features_from_csv(const fs::path& in) {
    if (fs::is_directory(in)) {
        throw InputError(in.string() + " is a directory; expected a metrics csv file");
    }
    const io::MetricsTable table = io::read_metrics_csv(in);
    return sel::make_feature_matrix(table.names, table.vectors);
}

void cmd_ingest(const fs::path& in, const fs::path& out, bool audit, const Common& c) {
    const auto entries = io::scan_corpus(in);
    Progress progress("ingest", entries.size(), c.quiet);

    std::vector<StructureFlags> flags(entries.size());
    std::vector<std::vector<io::LengthAuditRow>> audits(entries.size());
    fs::create_directories(out);
    parallel_for(entries.size(), c.jobs, [&](std::size_t i) {
        const Topology t = io::load_topology(entries[i], Provenance::real);
        flags[i] = structure_flags(t);
        io::write_topology_files(t, out, c.force);
        if (audit) {
            for (const auto& edge : t.edges()) {
                const auto& a = t.nodes()[t.index_of(edge.source)].location;
                const auto& b = t.nodes()[t.index_of(edge.destination)].location;
                audits[i].push_back(io::LengthAuditRow{
                    t.name(), edge.id, edge.length_km,
                    geo::fibre_length_km(geo::haversine_km(a, b))});
            }
        }
        progress.tick();
    });

    std::vector<std::string> names;
    names.reserve(entries.size());
    io::IngestSummary summary;
    summary.count = entries.size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        names.push_back(entries[i].name);
        summary.planar_count += flags[i].is_planar ? 1 : 0;
        summary.bridged_count += flags[i].has_bridge ? 1 : 0;
        summary.survivable_count += flags[i].is_biconnected ? 1 : 0;
    }
    io::write_structure_flags_csv(out / "structure_flags.csv", names, flags, c.force);
    io::write_ingest_summary_json(out / "ingest_summary.json", summary, c.force);
    if (audit) {
        std::vector<io::LengthAuditRow> rows;
        for (auto& group : audits) rows.insert(rows.end(), group.begin(), group.end());
        io::write_length_audit_csv(out / "length_audit.csv", rows, c.force);
    }
}

void cmd_metrics(const fs::path& in, const fs::path& out, const Common& c) {
    const auto entries = io::scan_corpus(in);
    Progress progress("metrics", entries.size(), c.quiet);

    io::MetricsTable table;
    table.vectors.resize(entries.size());
    for (const auto& entry : entries) table.names.push_back(entry.name);
    parallel_for(entries.size(), c.jobs, [&](std::size_t i) {
        const Topology t = io::load_topology(entries[i], Provenance::real);
        table.vectors[i] = metrics::metric_vector(t);
        progress.tick();
    });

    io::write_metrics_csv(out / "metrics.csv", table, c.force);
    io::write_summary_json(out / "summary.json", stats::summarize(table.vectors),
                           table.vectors.size(), c.force);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        io::write_topology_report_json(out / "per_topology" / (table.names[i] + ".json"),
                                       table.names[i], table.vectors[i], c.force);
    }
}

void cmd_generate(const std::string& recipe, const fs::path& out, const fs::path& real_dir,
                  int replicates, int node_count, double density, const std::string& region_name,
                  std::string single_name, const Common& c) {
    if (recipe.empty()) {
        // Single-network mode.
        if (node_count <= 0) {
            throw CLI::RequiredError("generate needs --recipe or --n");
        }
        gen::GenerationSpec spec;
        spec.node_count = node_count;
        spec.density_multiplier = density;
        spec.region = geo::builtin_region(geo::region_scale_from_string(region_name));
        spec.seed = c.seed;
        if (single_name.empty()) {
            single_name = "synthetic_" + region_name + "_n" + std::to_string(node_count);
        }
        spec.name = std::move(single_name);
        const Topology t = gen::generate(spec);
        fs::create_directories(out);
        io::write_topology_files(t, out, c.force);
        return;
    }

    Progress progress("generate", 0, c.quiet);
    const auto on_progress = [&progress](std::size_t done, std::size_t total) {
        progress(done, total);
    };
    gen::DatasetManifest manifest;
    if (recipe == "small") {
        manifest = gen::generate_dataset(gen::small_recipe(), out, c.seed, c.jobs, c.force,
                                         on_progress);
    } else if (recipe == "large") {
        manifest = gen::generate_dataset(gen::large_recipe(), out, c.seed, c.jobs, c.force,
                                         on_progress);
    } else {  // position-matched (validated by the option check)
        if (real_dir.empty()) {
            throw CLI::RequiredError("--real (the position-matched recipe grows over real node sets)");
        }
        const auto reals = io::load_corpus(real_dir, Provenance::real);
        manifest = gen::generate_position_matched_dataset(reals, out, c.seed, replicates, c.jobs,
                                                          c.force, on_progress);
    }
    if (manifest.failed_count > 0) {
        std::cerr << "optonet: " << manifest.failed_count << " of " << manifest.cell_count
                  << " cells failed; see the manifest\n";
    }
}

void cmd_validate(const fs::path& real_dir, const fs::path& synth_dir, const fs::path& out,
                  const Common& c) {
    const auto real_entries = io::scan_corpus(real_dir);
    const auto synth_entries = io::scan_corpus(synth_dir);
    Progress progress("validate", real_entries.size() + synth_entries.size(), c.quiet);

    std::vector<Topology> reals, synths;
    reals.reserve(real_entries.size());
    synths.reserve(synth_entries.size());
    for (const auto& entry : real_entries) {
        reals.push_back(io::load_topology(entry, Provenance::real));
        progress.tick();
    }
    for (const auto& entry : synth_entries) {
        synths.push_back(io::load_topology(entry, Provenance::synthetic));
        progress.tick();
    }
    io::write_validation_csv(out / "validation.csv", stats::validate_synthetic(reals, synths),
                             c.force);
}

std::vector<std::string> canonical_metric_names() {
    std::vector<std::string> names;
    for (auto field : metrics::MetricVector::field_names()) names.emplace_back(field);
    return names;
}

void cmd_correlate(const fs::path& in, const fs::path& out, const Common& c) {
    const io::MetricsTable table = io::read_metrics_csv(in);
    const auto report = stats::pearson_matrix(table.vectors, canonical_metric_names());
    io::write_correlation_matrix_csv(out / "correlation_matrix.csv", report, c.force);
    io::write_correlation_long_csv(out / "correlation_long.csv", report, c.force);
    io::write_correlation_summary_json(out / "correlation_summary.json", report, c.force);
    io::write_diagnostics_json(out / "diagnostics.json",
                               stats::diagnostics(table.vectors, canonical_metric_names()),
                               c.force);
}

void cmd_outliers(const fs::path& in, const fs::path& out, const Common& c) {
    const io::MetricsTable table = io::read_metrics_csv(in);
    const auto report = stats::detect_outliers(table.names, table.vectors);
    io::write_zscores_csv(out / "zscores.csv", report, c.force);
    io::write_outliers_csv(out / "outliers.csv", report, c.force);
    io::write_outlier_summary_json(out / "outlier_summary.json", report, c.force);
}

void cmd_cluster(const fs::path& in, const fs::path& out, double svm_c, bool min_margin,
                 const Common& c) {
    const auto features = features_from_csv(in);
    const auto report =
        sel::run_pipeline(features, c.seed, sel::MetricPools::defaults(), svm_c, min_margin);
    io::write_cluster_outputs(out, report, features, c.force);
    io::write_selected_metrics_csv(out / "selected_metrics.csv", report.subsets, c.force);
}

void cmd_select(const fs::path& in, const fs::path& out, const Common& c) {
    const auto features = features_from_csv(in);
    const auto subsets = sel::select_metric_subsets(features, sel::MetricPools::defaults());
    io::write_selected_metrics_csv(out / "selected_metrics.csv", subsets, c.force);
}

void cmd_slice(const fs::path& in, const fs::path& out, int wsd_clusters, const Common& c) {
    const auto features = features_from_csv(in);
    io::write_wsd_slice_csv(out / "wsd_slice.csv",
                            sel::wsd_slice(features, wsd_clusters, c.seed), c.force);
}

int run(int argc, char** argv) {
    CLI::App app{"Optical core network topology toolkit: corpus ingestion, metric "
                 "computation, synthetic generation, statistical validation, and "
                 "benchmark selection"};
    app.require_subcommand(1);

    // ingest
    auto ingest_common = std::make_shared<Common>();
    auto ingest_in = std::make_shared<std::string>();
    auto ingest_out = std::make_shared<std::string>();
    auto ingest_audit = std::make_shared<bool>(false);
    {
        CLI::App* sub = app.add_subcommand(
            "ingest", "Validate a corpus and re-export it with normalised formatting");
        auto cfg = std::make_shared<ConfigMap>(sub);
        sub->add_option("--in", *ingest_in, "Corpus directory (nodes_/edges_ csv pairs)")
            ->required();
        cfg->bind("in", ingest_in);
        sub->add_option("--out", *ingest_out, "Output directory")->required();
        cfg->bind("out", ingest_out);
        sub->add_flag("--audit-lengths", *ingest_audit,
                      "Also compare file lengths against the fibre model of the geodesic");
        cfg->bind("audit-lengths", ingest_audit);
        add_common(*sub, ingest_common, *cfg, /*with_seed=*/false);
        sub->callback([=] {
            cfg->apply();
            cmd_ingest(*ingest_in, *ingest_out, *ingest_audit, *ingest_common);
        });
    }

    // metrics
    auto metrics_common = std::make_shared<Common>();
    auto metrics_in = std::make_shared<std::string>();
    auto metrics_out = std::make_shared<std::string>();
    {
        CLI::App* sub = app.add_subcommand(
            "metrics", "Compute the full metric vector for every topology in a corpus");
        auto cfg = std::make_shared<ConfigMap>(sub);
        sub->add_option("--in", *metrics_in, "Corpus directory")->required();
        cfg->bind("in", metrics_in);
        sub->add_option("--out", *metrics_out, "Output directory")->required();
        cfg->bind("out", metrics_out);
        add_common(*sub, metrics_common, *cfg, /*with_seed=*/false);
        sub->callback([=] {
            cfg->apply();
            cmd_metrics(*metrics_in, *metrics_out, *metrics_common);
        });
    }

    // generate
    auto gen_common = std::make_shared<Common>();
    auto gen_recipe = std::make_shared<std::string>();
    auto gen_out = std::make_shared<std::string>();
    auto gen_real = std::make_shared<std::string>();
    auto gen_replicates = std::make_shared<int>(100);
    auto gen_n = std::make_shared<int>(0);
    auto gen_density = std::make_shared<double>(1.2);
    auto gen_region = std::make_shared<std::string>("large");
    auto gen_name = std::make_shared<std::string>();
    {
        CLI::App* sub =
            app.add_subcommand("generate", "Generate synthetic topologies (recipes or one-off)");
        sub->add_option("--recipe", *gen_recipe, "Dataset recipe")
            ->check(CLI::IsMember({"small", "large", "position-matched"}));
        sub->add_option("--out", *gen_out, "Output directory")->required();
        sub->add_option("--real", *gen_real,
                        "Real corpus directory (position-matched recipe only)");
        sub->add_option("--replicates", *gen_replicates,
                        "Replicates per real network (position-matched recipe)")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--n", *gen_n, "One-off mode: node count");
        sub->add_option("--density", *gen_density, "One-off mode: edge/node density multiplier")
            ->capture_default_str();
        sub->add_option("--region", *gen_region, "One-off mode: placement region")
            ->check(CLI::IsMember({"large", "medium", "small"}))
            ->capture_default_str();
        sub->add_option("--name", *gen_name, "One-off mode: topology name");
        add_common(*sub, *gen_common);
        sub->callback([=] {
            cmd_generate(*gen_recipe, *gen_out, *gen_real, *gen_replicates, *gen_n, *gen_density,
                         *gen_region, *gen_name, *gen_common);
        });
    }

    // validate
    auto val_common = std::make_shared<Common>();
    auto val_real = std::make_shared<std::string>();
    auto val_synth = std::make_shared<std::string>();
    auto val_out = std::make_shared<std::string>();
    {
        CLI::App* sub = app.add_subcommand(
            "validate", "Distribution-level comparison of a synthetic corpus against a real one");
        sub->add_option("--real", *val_real, "Real corpus directory")->required();
        sub->add_option("--synthetic", *val_synth, "Synthetic corpus directory")->required();
        sub->add_option("--out", *val_out, "Output directory")->required();
        add_common(*sub, *val_common, /*with_seed=*/false);
        sub->callback([=] { cmd_validate(*val_real, *val_synth, *val_out, *val_common); });
    }

    // correlate
    auto corr_common = std::make_shared<Common>();
    auto corr_in = std::make_shared<std::string>();
    auto corr_out = std::make_shared<std::string>();
    {
        CLI::App* sub = app.add_subcommand(
            "correlate", "Pearson matrix, average |r|, and normality/linearity diagnostics");
        sub->add_option("--in", *corr_in, "Consolidated metrics csv")->required();
        sub->add_option("--out", *corr_out, "Output directory")->required();
        add_common(*sub, *corr_common, /*with_seed=*/false);
        sub->callback([=] { cmd_correlate(*corr_in, *corr_out, *corr_common); });
    }

    // outliers
    auto out_common = std::make_shared<Common>();
    auto out_in = std::make_shared<std::string>();
    auto out_out = std::make_shared<std::string>();
    {
        CLI::App* sub =
            app.add_subcommand("outliers", "Flag topologies with any metric z-score above 3");
        sub->add_option("--in", *out_in, "Consolidated metrics csv")->required();
        sub->add_option("--out", *out_out, "Output directory")->required();
        add_common(*sub, *out_common, /*with_seed=*/false);
        sub->callback([=] { cmd_outliers(*out_in, *out_out, *out_common); });
    }

    // cluster
    auto clu_common = std::make_shared<Common>();
    auto clu_in = std::make_shared<std::string>();
    auto clu_out = std::make_shared<std::string>();
    auto clu_c = std::make_shared<double>(1.0);
    auto clu_min = std::make_shared<bool>(false);
    {
        CLI::App* sub = app.add_subcommand(
            "cluster", "Subset search, PCA, k-means sweep, and SVM separability reports");
        sub->add_option("--in", *clu_in, "Consolidated metrics csv")->required();
        sub->add_option("--out", *clu_out, "Output directory")->required();
        sub->add_option("--svm-c", *clu_c, "SVM regularisation C")->capture_default_str();
        sub->add_flag("--min-margin-aggregation", *clu_min,
                      "Aggregate per-classifier margins by min instead of mean");
        add_common(*sub, *clu_common);
        sub->callback(
            [=] { cmd_cluster(*clu_in, *clu_out, *clu_c, *clu_min, *clu_common); });
    }

    // select
    auto sel_common = std::make_shared<Common>();
    auto sel_in = std::make_shared<std::string>();
    auto sel_out = std::make_shared<std::string>();
    {
        CLI::App* sub = app.add_subcommand(
            "select", "Pick the 3-metric subset per category that minimises PC1+PC2 variance");
        sub->add_option("--in", *sel_in, "Consolidated metrics csv")->required();
        sub->add_option("--out", *sel_out, "Output directory")->required();
        add_common(*sub, *sel_common, /*with_seed=*/false);
        sub->callback([=] { cmd_select(*sel_in, *sel_out, *sel_common); });
    }

    // slice
    auto sli_common = std::make_shared<Common>();
    auto sli_in = std::make_shared<std::string>();
    auto sli_out = std::make_shared<std::string>();
    auto sli_clusters = std::make_shared<int>(10);
    {
        CLI::App* sub = app.add_subcommand(
            "slice", "Per-topology (size, mean shortest path, WSD) table with WSD clusters");
        sub->add_option("--in", *sli_in, "Consolidated metrics csv")->required();
        sub->add_option("--out", *sli_out, "Output directory")->required();
        sub->add_option("--wsd-clusters", *sli_clusters, "Cluster count on the WSD axis")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        add_common(*sub, *sli_common);
        sub->callback([=] { cmd_slice(*sli_in, *sli_out, *sli_clusters, *sli_common); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const InputError& e) {
        std::cerr << "optonet: input error: " << e.what() << '\n';
        return 3;
    } catch (const ComputeError& e) {
        std::cerr << "optonet: compute error: " << e.what() << '\n';
        return 4;
    } catch (const CLI::ConfigError& e) {
        std::cerr << "optonet: input error: " << e.what() << '\n';
        return 3;
    } catch (const CLI::ParseError& e) {
        std::cerr << "optonet: usage error: " << e.what() << '\n';
        return 2;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "optonet: input error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "optonet: compute error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

#include "optonet/generator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "optonet/errors.hpp"

namespace optonet::gen {

namespace {

std::string fmt_density(double d) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", d);
    return buf;
}

// Pairwise geodesic distances; rejects coincident nodes (the attachment
// score divides by them).
std::vector<std::vector<double>> distance_matrix(const std::vector<geo::GeoPoint>& pos) {
    const std::size_t n = pos.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double km = geo::haversine_km(pos[i], pos[j]);
            if (km <= 0.0) {
                throw InputError("generate: nodes " + std::to_string(i) + " and " +
                                 std::to_string(j) + " share one location");
            }
            d[i][j] = d[j][i] = km;
        }
    }
    return d;
}

double score_from_distances(std::size_t i, std::size_t j,
                            const std::vector<std::vector<double>>& dist,
                            const std::vector<std::size_t>& in_graph,
                            const std::vector<std::size_t>& degrees, double theta) {
    double ratio_sum = 0.0;
    double degree_sum = 0.0;
    for (std::size_t k : in_graph) {
        ratio_sum += dist[i][j] / dist[i][k];
        degree_sum += static_cast<double>(degrees[k]);
    }
    return std::pow(ratio_sum, -theta) * (static_cast<double>(degrees[j]) / degree_sum);
}

struct Growth {
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, addition order
    std::vector<std::size_t> degree;
    std::vector<std::vector<bool>> adjacent;

    explicit Growth(std::size_t n)
        : degree(n, 0), adjacent(n, std::vector<bool>(n, false)) {}

    void add(std::size_t u, std::size_t v) {
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        adjacent[u][v] = adjacent[v][u] = true;
        ++degree[u];
        ++degree[v];
    }
};

}  // namespace

std::vector<geo::GeoPoint> place_nodes(const geo::Region& region, int count,
                                       double min_spacing_km, Rng& rng) {
    if (count < 1) throw InputError("place_nodes: count must be >= 1");
    if (!(min_spacing_km >= 0.0)) throw InputError("place_nodes: negative spacing");

    std::vector<geo::GeoPoint> placed;
    placed.reserve(static_cast<std::size_t>(count));
    while (placed.size() < static_cast<std::size_t>(count)) {
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
            const geo::GeoPoint p = geo::sample_point(region, rng);
            bool clear = true;
            for (const auto& q : placed) {
                if (geo::haversine_km(p, q) < min_spacing_km) {
                    clear = false;
                    break;
                }
            }
            if (clear) {
                placed.push_back(p);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            throw ComputeError("place_nodes: could not fit node " +
                               std::to_string(placed.size() + 1) + " of " + std::to_string(count) +
                               " with " + std::to_string(min_spacing_km) + " km spacing");
        }
    }
    return placed;
}

double snr_ba_score(std::size_t newcomer, std::size_t candidate,
                    const std::vector<geo::GeoPoint>& positions,
                    const std::vector<std::size_t>& in_graph,
                    const std::vector<std::size_t>& degrees, double theta) {
    if (in_graph.empty()) throw InputError("snr_ba_score: empty graph");
    const auto dist = distance_matrix(positions);
    return score_from_distances(newcomer, candidate, dist, in_graph, degrees, theta);
}

Topology generate(const GenerationSpec& spec) {
    const bool fixed_mode = !spec.fixed_nodes.empty();
    if (fixed_mode == spec.region.has_value()) {
        throw InputError("generate: exactly one of region / fixed_nodes must be set");
    }
    if (!(spec.theta > 0.0) || !std::isfinite(spec.theta)) {
        throw InputError("generate: theta must be positive and finite");
    }

    Rng rng(spec.seed);
    std::vector<geo::GeoPoint> pos;
    std::size_t n = 0;
    if (fixed_mode) {
        n = spec.fixed_nodes.size();
        if (n < 3) throw InputError("generate: fixed-node mode needs at least 3 nodes");
        pos.reserve(n);
        for (const Node& node : spec.fixed_nodes) pos.push_back(node.location);
    } else {
        if (spec.node_count < 10 || spec.node_count > 100) {
            throw InputError("generate: node count " + std::to_string(spec.node_count) +
                             " outside [10, 100]");
        }
        if (!(spec.density_multiplier >= 1.2)) {
            throw InputError("generate: density multiplier must be >= 1.2");
        }
        n = static_cast<std::size_t>(spec.node_count);
        pos = place_nodes(*spec.region, spec.node_count, spec.min_spacing_km, rng);
    }

    const auto m_target = static_cast<std::size_t>(
        std::llround(spec.density_multiplier * static_cast<double>(n)));
    if (m_target < n) {
        throw InputError("generate: edge target " + std::to_string(m_target) +
                         " below node count; a survivable topology needs at least n edges");
    }
    if (m_target > n * (n - 1) / 2) {
        throw InputError("generate: edge target " + std::to_string(m_target) +
                         " exceeds the " + std::to_string(n * (n - 1) / 2) +
                         " edges of a complete graph on " + std::to_string(n) + " nodes");
    }

    const auto dist = distance_matrix(pos);

    // Seed edge: the two closest nodes (first such pair on ties).
    std::size_t seed_u = 0, seed_v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] < dist[seed_u][seed_v]) {
                seed_u = i;
                seed_v = j;
            }
        }
    }

    Growth g(n);
    g.add(seed_u, seed_v);
    std::vector<std::size_t> in_graph = {seed_u, seed_v};

    std::vector<std::size_t> arrivals;
    arrivals.reserve(n - 2);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != seed_u && i != seed_v) arrivals.push_back(i);
    }
    rng.shuffle(arrivals);

    // Edge quotas over the n-1 growth slots: slot 1 is the seed edge, the
    // remaining slots are the arrivals. Every slot gets floor(m/(n-1)), the
    // last r slots one extra, and no slot can exceed the nodes present.
    // Whatever a slot cannot place (the seed slot places exactly 1; early
    // arrivals are capped by prior count) carries to the next slot, so the
    // growth phase always lands exactly on m_target.
    const std::size_t slots = n - 1;
    const std::size_t base_quota = m_target / slots;
    const std::size_t bumped = m_target - base_quota * slots;  // count of +1 slots
    std::size_t deficit = base_quota - 1;                      // seed slot placed 1

    std::vector<double> scores;
    std::vector<std::size_t> candidates;
    for (std::size_t a = 0; a < arrivals.size(); ++a) {
        const std::size_t node = arrivals[a];
        const std::size_t slot = a + 2;  // prior node count
        const std::size_t quota = base_quota + (slot > slots - bumped ? 1 : 0) + deficit;
        const std::size_t want = std::min(quota, slot);
        deficit = quota - want;

        candidates = in_graph;
        scores.resize(candidates.size());
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            scores[c] =
                score_from_distances(node, candidates[c], dist, in_graph, g.degree, spec.theta);
        }

        for (std::size_t pick = 0; pick < want; ++pick) {
            double total = 0.0;
            for (double s : scores) total += s;
            if (!(total > 0.0) || !std::isfinite(total)) {
                throw ComputeError("generate: degenerate attachment scores at node " +
                                   std::to_string(node));
            }
            const double x = rng.uniform01() * total;
            double cumulative = 0.0;
            std::size_t chosen = candidates.size() - 1;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                cumulative += scores[c];
                if (x < cumulative) {
                    chosen = c;
                    break;
                }
            }
            g.add(node, candidates[chosen]);
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(chosen));
            scores.erase(scores.begin() + static_cast<std::ptrdiff_t>(chosen));
        }
        in_graph.push_back(node);
    }

    // Assemble a validated topology from the working edge set.
    std::vector<Node> out_nodes;
    if (fixed_mode) {
        out_nodes = spec.fixed_nodes;
    } else {
        out_nodes.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            out_nodes[i].id = static_cast<std::int64_t>(i + 1);
            out_nodes[i].location = pos[i];
        }
    }
    const auto build = [&]() {
        std::vector<Edge> out_edges;
        out_edges.reserve(g.edges.size());
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto [u, v] = g.edges[e];
            Edge edge;
            edge.id = static_cast<std::int64_t>(e + 1);
            edge.source = std::min(out_nodes[u].id, out_nodes[v].id);
            edge.destination = std::max(out_nodes[u].id, out_nodes[v].id);
            edge.length_km = std::round(geo::fibre_length_km(dist[u][v]) * 100.0) / 100.0;
            out_edges.push_back(edge);
        }
        return Topology::create(spec.name, out_nodes, std::move(out_edges), Provenance::synthetic);
    };

    // Survivability repair: while a cut vertex or degree-1 node remains,
    // link two biconnected components with the shortest available fibre.
    std::vector<std::size_t> everyone(n);
    for (std::size_t i = 0; i < n; ++i) everyone[i] = i;

    Topology t = build();
    for (;;) {
        std::size_t min_degree = n;
        for (std::size_t i = 0; i < n; ++i) min_degree = std::min(min_degree, g.degree[i]);
        if (n >= 3 && min_degree >= 2 && articulation_points(t).empty()) break;

        const auto block = biconnected_component_ids(t);
        std::vector<std::vector<std::size_t>> node_blocks(n);
        for (std::size_t e = 0; e < block.size(); ++e) {
            const auto& de = t.dense_edges()[e];
            node_blocks[de.u].push_back(block[e]);
            node_blocks[de.v].push_back(block[e]);
        }
        for (auto& blocks : node_blocks) {
            std::sort(blocks.begin(), blocks.end());
            blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
        }
        const auto share_block = [&](std::size_t u, std::size_t v) {
            const auto& a = node_blocks[u];
            const auto& b = node_blocks[v];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return true;
                if (a[i] < b[j]) ++i;
                else ++j;
            }
            return false;
        };

        // Shortest fibre wins; ties fall back to the symmetric attachment
        // affinity, then to the scan order (ascending u, v).
        bool found = false;
        std::size_t best_u = 0, best_v = 0;
        double best_len = 0.0, best_score = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (g.adjacent[u][v] || share_block(u, v)) continue;
                const double len = geo::fibre_length_km(dist[u][v]);
                if (found && len > best_len) continue;
                const double affinity =
                    score_from_distances(u, v, dist, everyone, g.degree, spec.theta) +
                    score_from_distances(v, u, dist, everyone, g.degree, spec.theta);
                if (!found || len < best_len || affinity > best_score) {
                    found = true;
                    best_u = u;
                    best_v = v;
                    best_len = len;
                    best_score = affinity;
                }
            }
        }
        if (!found) {
            throw ComputeError("generate: no repair edge available for '" + spec.name + "'");
        }
        g.add(best_u, best_v);
        t = build();
    }
    return t;
}

DatasetRecipe small_recipe() {
    DatasetRecipe r;
    r.name = "small";
    for (int n = 10; n < 100; ++n) r.node_counts.push_back(n);
    r.density_values = {1.2};
    r.regions = {geo::RegionScale::large};
    r.replicates = 10;
    return r;
}

DatasetRecipe large_recipe() {
    DatasetRecipe r;
    r.name = "large";
    for (int n = 10; n < 100; ++n) r.node_counts.push_back(n);
    for (int k = 0; k < 10; ++k) r.density_values.push_back(static_cast<double>(12 + 4 * k) / 10.0);
    r.regions = {geo::RegionScale::large, geo::RegionScale::medium, geo::RegionScale::small};
    r.replicates = 100;
    return r;
}

std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& cell_key) {
    return derive_stream(master_seed, cell_key);
}

namespace {

struct CellPlan {
    std::string relative_dir;
    std::string topology_name;
    std::string region;
    double density = 0;
    int node_count = 0;
    int replicate = 0;
    // Fully built spec except the seed (derived from relative_dir).
    GenerationSpec spec;
};

void write_cell_files(const std::filesystem::path& out_dir, const CellPlan& plan,
                      const Topology& t) {
    const std::filesystem::path dir = out_dir / plan.relative_dir;
    std::filesystem::create_directories(dir);
    std::ofstream nodes_out(dir / ("nodes_" + plan.topology_name + ".csv"), std::ios::binary);
    std::ofstream edges_out(dir / ("edges_" + plan.topology_name + ".csv"), std::ios::binary);
    if (!nodes_out || !edges_out) {
        throw InputError("generate: cannot write into " + dir.string());
    }
    write_topology(t, nodes_out, edges_out);
    if (!nodes_out.flush() || !edges_out.flush()) {
        throw InputError("generate: short write in " + dir.string());
    }
}

DatasetManifest run_cells(const std::string& recipe_name, std::vector<CellPlan> plans,
                          std::vector<CellOutcome> pre_skipped,
                          const std::filesystem::path& out_dir, std::uint64_t master_seed,
                          int jobs, bool force, const ProgressFn& progress) {
    if (jobs < 1) throw InputError("generate: jobs must be >= 1");
    const std::filesystem::path root = out_dir / recipe_name;
    if (std::filesystem::exists(root)) {
        if (!force) {
            throw InputError("generate: output '" + root.string() +
                             "' already exists (use force to replace)");
        }
        std::filesystem::remove_all(root);
    }
    std::filesystem::create_directories(root);

    const std::size_t total = plans.size();
    std::vector<CellOutcome> outcomes(total);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;

    const auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            CellPlan& plan = plans[idx];
            CellOutcome& outcome = outcomes[idx];
            outcome.relative_dir = plan.relative_dir;
            outcome.topology_name = plan.topology_name;
            outcome.region = plan.region;
            outcome.density = plan.density;
            outcome.node_count = plan.node_count;
            outcome.replicate = plan.replicate;
            outcome.seed = cell_seed(master_seed, plan.relative_dir);
            try {
                plan.spec.seed = outcome.seed;
                const Topology t = generate(plan.spec);
                write_cell_files(out_dir, plan, t);
                outcome.edge_count = t.edge_count();
                outcome.ok = true;
            } catch (const std::exception& e) {
                outcome.ok = false;
                outcome.error = e.what();
            }
            const std::size_t finished = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mutex);
                progress(finished, total);
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    DatasetManifest manifest;
    manifest.recipe = recipe_name;
    manifest.master_seed = master_seed;
    manifest.cells = std::move(pre_skipped);
    manifest.cells.insert(manifest.cells.end(), outcomes.begin(), outcomes.end());
    manifest.cell_count = manifest.cells.size();
    for (const auto& c : manifest.cells) {
        if (!c.ok) ++manifest.failed_count;
    }

    nlohmann::ordered_json j;
    j["recipe"] = manifest.recipe;
    j["master_seed"] = manifest.master_seed;
    j["seed_rule"] = "cell_seed = splitmix64(master_seed XOR fnv1a64(cell dir))";
    j["cell_count"] = manifest.cell_count;
    j["failed_count"] = manifest.failed_count;
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : manifest.cells) {
        cells.push_back({{"dir", c.relative_dir},
                         {"name", c.topology_name},
                         {"seed", c.seed},
                         {"region", c.region},
                         {"density", fmt_density(c.density)},
                         {"n", c.node_count},
                         {"replicate", c.replicate},
                         {"edges", c.edge_count},
                         {"ok", c.ok},
                         {"error", c.error}});
    }
    std::ofstream manifest_out(root / "manifest.json", std::ios::binary);
    manifest_out << j.dump(2) << '\n';
    if (!manifest_out.flush()) {
        throw InputError("generate: cannot write manifest under " + root.string());
    }
    return manifest;
}

}  // namespace

DatasetManifest generate_dataset(const DatasetRecipe& recipe,
                                 const std::filesystem::path& out_dir,
                                 std::uint64_t master_seed, int jobs, bool force,
                                 const ProgressFn& progress) {
    if (recipe.name.empty() || recipe.node_counts.empty() || recipe.density_values.empty() ||
        recipe.regions.empty() || recipe.replicates < 1) {
        throw InputError("generate: recipe is incomplete");
    }

    std::vector<CellPlan> plans;
    plans.reserve(recipe.node_counts.size() * recipe.density_values.size() *
                  recipe.regions.size() * static_cast<std::size_t>(recipe.replicates));
    for (const auto region : recipe.regions) {
        const std::string region_name(geo::to_string(region));
        for (const double d : recipe.density_values) {
            const std::string d_name = fmt_density(d);
            for (const int n : recipe.node_counts) {
                for (int rep = 0; rep < recipe.replicates; ++rep) {
                    CellPlan plan;
                    plan.relative_dir = recipe.name + "/" + region_name + "/" + d_name + "/" +
                                        std::to_string(n) + "/" + std::to_string(rep);
                    plan.topology_name = recipe.name + "_" + region_name + "_d" + d_name + "_n" +
                                         std::to_string(n) + "_r" + std::to_string(rep);
                    plan.region = region_name;
                    plan.density = d;
                    plan.node_count = n;
                    plan.replicate = rep;
                    plan.spec.name = plan.topology_name;
                    plan.spec.node_count = n;
                    plan.spec.density_multiplier = d;
                    plan.spec.region = geo::builtin_region(region);
                    plans.push_back(std::move(plan));
                }
            }
        }
    }
    return run_cells(recipe.name, std::move(plans), {}, out_dir, master_seed, jobs, force,
                     progress);
}

std::vector<Topology> generate_position_matched(const Topology& real, int replicates,
                                                std::uint64_t master_seed) {
    if (replicates < 1) throw InputError("generate: replicates must be >= 1");
    if (!structure_flags(real).is_biconnected) {
        throw InputError("generate: '" + real.name() +
                         "' is not survivable; position-matched growth needs a biconnected input");
    }
    const double d = static_cast<double>(real.edge_count()) / static_cast<double>(real.node_count());
    std::vector<Topology> out;
    out.reserve(static_cast<std::size_t>(replicates));
    for (int rep = 0; rep < replicates; ++rep) {
        GenerationSpec spec;
        spec.name = real.name() + "_pm_r" + std::to_string(rep);
        spec.fixed_nodes = real.nodes();
        spec.node_count = static_cast<int>(real.node_count());
        spec.density_multiplier = d;
        spec.seed = cell_seed(master_seed,
                              "position-matched/" + real.name() + "/" + std::to_string(rep));
        out.push_back(generate(spec));
    }
    return out;
}

DatasetManifest generate_position_matched_dataset(
    const std::vector<Topology>& reals, const std::filesystem::path& out_dir,
    std::uint64_t master_seed, int replicates, int jobs, bool force,
    const ProgressFn& progress) {
    if (reals.empty()) throw InputError("generate: empty real corpus");
    if (replicates < 1) throw InputError("generate: replicates must be >= 1");

    std::vector<CellPlan> plans;
    std::vector<CellOutcome> skipped;
    for (const Topology& real : reals) {
        if (!structure_flags(real).is_biconnected) {
            CellOutcome c;
            c.relative_dir = "position-matched/" + real.name();
            c.topology_name = real.name();
            c.node_count = static_cast<int>(real.node_count());
            c.replicate = -1;
            c.ok = false;
            c.error = "not survivable; skipped";
            skipped.push_back(std::move(c));
            continue;
        }
        const double d =
            static_cast<double>(real.edge_count()) / static_cast<double>(real.node_count());
        for (int rep = 0; rep < replicates; ++rep) {
            CellPlan plan;
            plan.relative_dir =
                "position-matched/" + real.name() + "/" + std::to_string(rep);
            plan.topology_name = real.name() + "_pm_r" + std::to_string(rep);
            plan.region = "";
            plan.density = d;
            plan.node_count = static_cast<int>(real.node_count());
            plan.replicate = rep;
            plan.spec.name = plan.topology_name;
            plan.spec.fixed_nodes = real.nodes();
            plan.spec.node_count = plan.node_count;
            plan.spec.density_multiplier = d;
            plans.push_back(std::move(plan));
        }
    }
    return run_cells("position-matched", std::move(plans), std::move(skipped), out_dir,
                     master_seed, jobs, force, progress);
}

}  // namespace optonet::gen

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "optonet/geo.hpp"
#include "optonet/rng.hpp"
#include "optonet/topology.hpp"

namespace optonet::gen {

inline constexpr double kDefaultTheta = 5.0;
inline constexpr int kMaxPlacementAttempts = 10000;

// One synthetic network. Exactly one of {region, fixed_nodes} selects the
// placement mode: random placement inside a rectangle, or growth over the
// node set of an existing (typically real) network.
struct GenerationSpec {
    std::string name;
    int node_count = 0;            // region mode: 10..100; fixed mode: derived
    double density_multiplier = 0; // target edge count = round(d * n)
    std::optional<geo::Region> region;
    std::vector<Node> fixed_nodes;  // ids/coordinates reused verbatim
    double theta = kDefaultTheta;
    double min_spacing_km = geo::kMinNodeSpacingKm;
    std::uint64_t seed = 0;
};

// Rejection-sampled points with pairwise spacing >= min_spacing_km.
// Throws ComputeError when a point cannot be placed within
// kMaxPlacementAttempts draws (region too crowded for the spacing).
std::vector<geo::GeoPoint> place_nodes(const geo::Region& region, int count,
                                       double min_spacing_km, Rng& rng);

// Attachment affinity of `candidate` for the arriving node `newcomer`:
//   (sum_{k in graph} D(i,j)/D(i,k))^-theta  *  deg(j) / sum_{k in graph} deg(k)
// The first factor penalises candidates far from the newcomer relative to
// the rest of the graph; the second is preferential attachment.
double snr_ba_score(std::size_t newcomer, std::size_t candidate,
                    const std::vector<geo::GeoPoint>& positions,
                    const std::vector<std::size_t>& in_graph,
                    const std::vector<std::size_t>& degrees, double theta);

// Grow one network: seed edge between the two closest nodes, remaining
// nodes arrive in a seeded random order, each connecting to
// min(quota, nodes already present) distinct targets drawn without
// replacement proportional to snr_ba_score. Afterwards, edges are added
// (shortest fibre first) between distinct biconnected components until the
// network survives any single node or link failure.
Topology generate(const GenerationSpec& spec);

struct DatasetRecipe {
    std::string name;
    std::vector<int> node_counts;
    std::vector<double> density_values;
    std::vector<geo::RegionScale> regions;
    int replicates = 0;
};

// 90 sizes x 1 density x 1 region x 10 replicates = 900 networks.
DatasetRecipe small_recipe();
// 90 sizes x 10 densities x 3 regions x 100 replicates = 270000 networks.
DatasetRecipe large_recipe();

struct CellOutcome {
    std::string relative_dir;  // <recipe>/<region>/<d>/<n>/<replicate>
    std::string topology_name;
    std::uint64_t seed = 0;
    std::string region;
    double density = 0;
    int node_count = 0;
    int replicate = 0;
    std::size_t edge_count = 0;
    bool ok = false;
    std::string error;
};

struct DatasetManifest {
    std::string recipe;
    std::uint64_t master_seed = 0;
    std::size_t cell_count = 0;
    std::size_t failed_count = 0;
    std::vector<CellOutcome> cells;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Generate every cell of a recipe under out_dir/<recipe>/..., one directory
// per cell holding nodes_<name>.csv and edges_<name>.csv, plus a
// manifest.json recording the per-cell seeds. Seeds derive from
// master_seed and the cell key only, so reruns and per-cell regeneration
// are byte-identical regardless of job count. Throws InputError if the
// recipe directory already exists (force replaces it).
DatasetManifest generate_dataset(const DatasetRecipe& recipe,
                                 const std::filesystem::path& out_dir,
                                 std::uint64_t master_seed, int jobs, bool force,
                                 const ProgressFn& progress = {});

// Same growth model over the node set of a real network, with the real
// network's edge count as the target. The real must be survivable.
std::vector<Topology> generate_position_matched(const Topology& real, int replicates,
                                                std::uint64_t master_seed);

// Dataset form of the above for a whole corpus: cells are (real network x
// replicate), laid out as position-matched/<real-name>/<replicate>/.
// Non-survivable reals are skipped and recorded in the manifest.
DatasetManifest generate_position_matched_dataset(
    const std::vector<Topology>& reals, const std::filesystem::path& out_dir,
    std::uint64_t master_seed, int replicates, int jobs, bool force,
    const ProgressFn& progress = {});

// Cell key (also the manifest "dir" value) -> deterministic seed.
std::uint64_t cell_seed(std::uint64_t master_seed, const std::string& cell_key);

}  // namespace optonet::gen

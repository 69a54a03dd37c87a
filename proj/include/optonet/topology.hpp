#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "optonet/geo.hpp"
#include "optonet/spectral.hpp"

namespace optonet {

struct Node {
    std::int64_t id = 0;  // positive, unique within a topology
    geo::GeoPoint location;
    std::string place_name;  // may be empty (synthetic networks)
    std::string country;     // may be empty
};

struct Edge {
    std::int64_t id = 0;  // positive, unique within a topology
    std::int64_t source = 0;
    std::int64_t destination = 0;
    double length_km = 0.0;  // finite, > 0
};

enum class Provenance { real, synthetic };

std::string_view to_string(Provenance p);

// A validated, connected, simple undirected graph with geographic nodes and
// km-weighted edges. Construction is the validation boundary: an instance
// always satisfies n >= 2, m >= 1, unique positive ids, existing endpoints,
// no self-loops or parallel edges, positive finite lengths, connectivity.
class Topology {
public:
    static Topology create(std::string name, std::vector<Node> nodes, std::vector<Edge> edges,
                           Provenance provenance);

    const std::string& name() const { return name_; }
    Provenance provenance() const { return provenance_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Dense 0..n-1 view used by every graph algorithm. Dense index i
    // corresponds to nodes()[i]; external ids are only a labelling.
    std::size_t index_of(std::int64_t node_id) const;
    const std::vector<std::size_t>& neighbors(std::size_t dense_index) const {
        return adjacency_[dense_index];
    }
    std::size_t degree(std::size_t dense_index) const { return adjacency_[dense_index].size(); }

    struct DenseEdge {
        std::size_t u, v;  // dense indices, u < v
        double length_km;
    };
    // Same order as edges().
    const std::vector<DenseEdge>& dense_edges() const { return dense_edges_; }

    bool has_edge(std::size_t u, std::size_t v) const;

private:
    Topology() = default;

    std::string name_;
    Provenance provenance_ = Provenance::real;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::unordered_map<std::int64_t, std::size_t> id_to_index_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<DenseEdge> dense_edges_;
};

struct StructureFlags {
    bool is_planar = false;
    bool has_bridge = false;
    bool is_biconnected = false;  // connected, n >= 3, no articulation vertex
    std::size_t bridge_count = 0;
};

// Parse a topology from its two CSV files. Headers must match the corpus
// convention byte for byte; every violation is reported with its row number
// and a distinct error kind.
Topology read_topology(std::istream& nodes_csv, std::istream& edges_csv, std::string name,
                       Provenance provenance);

// Inverse of read_topology, normalised formatting: coordinates with 6
// decimals, lengths with 2. write(read(write(x))) is byte-identical.
void write_topology(const Topology& t, std::ostream& nodes_csv, std::ostream& edges_csv);

inline constexpr const char* kNodesHeader = "Node_ID,Latitude,Longitude,Location Name,Country";
inline constexpr const char* kEdgesHeader = "Edge_ID,Source,Destination,Computed Length (km)";

// 0/1 matrix in dense-index order.
spectral::SymmetricMatrix adjacency_matrix(const Topology& t);

// Bridge edges as indices into edges().
std::vector<std::size_t> bridge_edge_indices(const Topology& t);
// Articulation vertices as dense indices, ascending.
std::vector<std::size_t> articulation_points(const Topology& t);
// Biconnected-component label per edge (edges() order); labels are dense
// 0..count-1. A vertex is an articulation point iff its incident edges span
// more than one label.
std::vector<std::size_t> biconnected_component_ids(const Topology& t);
std::size_t biconnected_component_count(const Topology& t);

StructureFlags structure_flags(const Topology& t);

}  // namespace optonet

#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "optonet/topology.hpp"

namespace optonet::metrics {

// The 21-dimensional fingerprint of a topology. Field order is the canonical
// column order of every metrics table this toolkit emits.
struct MetricVector {
    double number_of_nodes = 0;
    double number_of_edges = 0;
    double average_node_degree = 0;
    double average_clustering_coefficient = 0;
    double network_density = 0;
    double max_node_betweenness = 0;
    double avg_node_betweenness = 0;
    double max_edge_betweenness = 0;
    double avg_edge_betweenness = 0;
    double diameter_hops = 0;
    double aspl_hops = 0;
    double global_efficiency = 0;
    double normalized_spectral_radius = 0;       // rho(A) / (n - 1)
    double normalized_algebraic_connectivity = 0;  // lambda_2(L) / n
    double normalized_wsd = 0;                   // weighted spectral distribution
    double aspl_km = 0;
    double avg_link_length_km = 0;
    double std_shortest_path_km = 0;  // population std over unordered pairs
    double diameter_km = 0;
    double normalized_avg_link_length = 0;  // avg link / km diameter
    double normalized_diameter_km = 0;      // km diameter / max pairwise geodesic

    static constexpr std::size_t kFieldCount = 21;
    static const std::array<std::string_view, kFieldCount>& field_names();
    double field(std::size_t index) const;
    double field(std::string_view name) const;  // throws InputError on unknown name
};

struct DegreeStats {
    std::vector<std::size_t> degrees;  // dense-index order
    double average = 0;
};
DegreeStats degree_stats(const Topology& t);

// All-pairs hop distances (BFS), dense-index order.
std::vector<std::vector<int>> hop_paths(const Topology& t);

struct KmPaths {
    std::vector<std::vector<double>> dist;  // all-pairs km distances (Dijkstra)
    double aspl_km = 0;
    double diameter_km = 0;
    double std_km = 0;  // population std over unordered pairs
};
KmPaths km_paths(const Topology& t);

struct ClusteringStats {
    std::vector<double> per_node;  // degree < 2 contributes 0
    double average = 0;
};
ClusteringStats clustering_coefficient(const Topology& t);

// Brandes betweenness on hop-shortest paths. Node values are divided by
// (n-1)(n-2)/2 intermediate pairs, edge values by n(n-1)/2 pairs.
struct BetweennessResult {
    std::vector<double> node;  // dense-index order
    std::vector<double> edge;  // edges() order
    double max_node = 0, avg_node = 0;
    double max_edge = 0, avg_edge = 0;
};
BetweennessResult betweenness(const Topology& t);

// Mean over ordered pairs of 1/hop-distance.
double global_efficiency(const Topology& t);

MetricVector metric_vector(const Topology& t);

}  // namespace optonet::metrics
